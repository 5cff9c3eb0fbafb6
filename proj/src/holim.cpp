#include "grpdlim/holim.hpp"

namespace grpdlim {

namespace {

// Interns P- and Q-images of one constraint so both sides of the equalizer
// become comparable integers without materializing Map((Γ↓α), X(β)).
TupleConstraint holim_constraint(const HomotopyLimit& h, MorphismIndex m) {
  const auto& index = h.diagram.index();
  const auto a = index.src(m);
  const auto b = index.dst(m);
  const auto& oa = h.overcategories[a].category();
  const auto om = overcategory_map(h.overcategories[a], h.overcategories[b], m);
  const auto& xm = h.diagram.edge(m);
  const auto& fa = h.factors[a];
  const auto& fb = h.factors[b];
  const std::size_t n = oa.object_count();
  const std::size_t k = oa.morphism_count();

  TupleConstraint c;
  c.first = a;
  c.second = b;
  TupleTable objects(n + k), morphisms(n);
  std::vector<std::uint32_t> key(n + k);
  for (ObjectIndex f = 0; f < fa.functor_count(); ++f) {
    auto o = fa.object_map(f);
    auto mm = fa.morphism_map(f);
    for (std::size_t u = 0; u < n; ++u) key[u] = xm.object(o[u]);
    for (std::size_t t = 0; t < k; ++t) key[n + t] = xm.morphism(mm[t]);
    c.first_objects.push_back(objects.insert(key).first);
  }
  for (ObjectIndex f = 0; f < fb.functor_count(); ++f) {
    auto o = fb.object_map(f);
    auto mm = fb.morphism_map(f);
    for (ObjectIndex u = 0; u < n; ++u) key[u] = o[om.object(u)];
    for (MorphismIndex t = 0; t < k; ++t) key[n + t] = mm[om.morphism(t)];
    c.second_objects.push_back(objects.insert(key).first);
  }
  key.resize(n);
  for (MorphismIndex e = 0; e < fa.groupoid().morphism_count(); ++e) {
    auto comps = fa.components(e);
    for (std::size_t u = 0; u < n; ++u) key[u] = xm.morphism(comps[u]);
    c.first_morphisms.push_back(morphisms.insert(key).first);
  }
  for (MorphismIndex e = 0; e < fb.groupoid().morphism_count(); ++e) {
    auto comps = fb.components(e);
    for (ObjectIndex u = 0; u < n; ++u) key[u] = comps[om.object(u)];
    c.second_morphisms.push_back(morphisms.insert(key).first);
  }
  return c;
}

}  // namespace

HomotopyLimit holim(const DiagramFunctor& d, Budget budget) {
  HomotopyLimit h;
  h.diagram = d;
  const auto& index = d.index();
  for (ObjectIndex a = 0; a < index.object_count(); ++a) {
    h.overcategories.emplace_back(index, a);
    h.factors.push_back(map_category(h.overcategories[a].category(), d.vertex(a), budget));
  }
  std::vector<TupleConstraint> constraints;
  for (MorphismIndex m = 0; m < index.morphism_count(); ++m)
    if (!index.is_identity(m)) constraints.push_back(holim_constraint(h, m));
  std::vector<Groupoid> factors;
  for (const auto& f : h.factors) factors.push_back(f.groupoid());
  h.keyed = tuple_limit(factors, constraints, budget, "homotopy limit");
  return h;
}

HolimByProducts holim_by_products(const DiagramFunctor& d, Budget budget) {
  const auto& index = d.index();
  std::vector<Overcategory> over;
  std::vector<FunctorGroupoid> factors;
  std::vector<Groupoid> source_parts;
  for (ObjectIndex a = 0; a < index.object_count(); ++a) {
    over.emplace_back(index, a);
    factors.push_back(map_category(over[a].category(), d.vertex(a), budget));
    source_parts.push_back(factors[a].groupoid());
  }
  std::vector<MorphismIndex> edges;
  std::vector<FunctorGroupoid> targets;
  std::vector<CatFunctor> posts, pres;
  std::vector<Groupoid> target_parts;
  for (MorphismIndex m = 0; m < index.morphism_count(); ++m) {
    if (index.is_identity(m)) continue;
    const auto a = index.src(m);
    const auto b = index.dst(m);
    edges.push_back(m);
    targets.push_back(map_category(over[a].category(), d.vertex(b), budget));
    posts.push_back(postcompose(d.edge(m), factors[a], targets.back()));
    pres.push_back(precompose(overcategory_map(over[a], over[b], m), factors[b], targets.back()));
    target_parts.push_back(targets.back().groupoid());
  }
  auto source = product_groupoid(source_parts, budget);
  auto target = product_groupoid(target_parts, budget);

  auto build = [&](bool post) {
    const auto& g = source.groupoid();
    std::vector<ObjectIndex> objects(g.object_count());
    std::vector<MorphismIndex> morphisms(g.morphism_count());
    std::vector<std::uint32_t> key(edges.size());
    for (ObjectIndex x = 0; x < objects.size(); ++x) {
      auto t = source.keyed.object_key(x);
      for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto m = edges[i];
        key[i] = post ? posts[i].object(t[index.src(m)]) : pres[i].object(t[index.dst(m)]);
      }
      objects[x] = target.keyed.find_object(key);
    }
    for (MorphismIndex e = 0; e < morphisms.size(); ++e) {
      auto c = source.keyed.components(e);
      for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto m = edges[i];
        key[i] = post ? posts[i].morphism(c[index.src(m)]) : pres[i].morphism(c[index.dst(m)]);
      }
      morphisms[e] = target.keyed.find_morphism(objects[g.src(e)], key);
    }
    return CatFunctor(g.category(), target.groupoid().category(), std::move(objects),
                      std::move(morphisms));
  };
  auto post = build(true);
  auto pre = build(false);
  auto eq = equalizer(post, pre, budget);
  return {std::move(source), std::move(target), std::move(post), std::move(pre), std::move(eq)};
}

CatFunctor induced_map(const DiagramMap& f, const HomotopyLimit& source,
                       const HomotopyLimit& target) {
  const std::size_t n = source.factors.size();
  if (target.factors.size() != n) throw ShapeMismatch("induced_map: index categories differ");
  std::vector<CatFunctor> post;
  for (std::size_t a = 0; a < n; ++a)
    post.push_back(postcompose(f.component(static_cast<ObjectIndex>(a)), source.factors[a],
                               target.factors[a]));
  const auto& g = source.groupoid();
  std::vector<ObjectIndex> objects(g.object_count());
  std::vector<MorphismIndex> morphisms(g.morphism_count());
  std::vector<std::uint32_t> key(n);
  for (ObjectIndex x = 0; x < objects.size(); ++x) {
    auto t = source.keyed.object_key(x);
    for (std::size_t a = 0; a < n; ++a) key[a] = post[a].object(t[a]);
    objects[x] = target.find_object(key);
    if (objects[x] == npos) throw Error("induced_map: image tuple is not in the target holim");
  }
  for (MorphismIndex m = 0; m < morphisms.size(); ++m) {
    auto c = source.keyed.components(m);
    for (std::size_t a = 0; a < n; ++a) key[a] = post[a].morphism(c[a]);
    morphisms[m] = target.find_morphism(objects[g.src(m)], key);
    if (morphisms[m] == npos) throw Error("induced_map: image morphism is not in the target holim");
  }
  return CatFunctor(g.category(), target.groupoid().category(), std::move(objects),
                    std::move(morphisms));
}

CatFunctor lim_to_holim(const StrictLimit& lim, const HomotopyLimit& h) {
  const std::size_t n = h.factors.size();
  const auto& g = lim.groupoid();
  std::vector<ObjectIndex> objects(g.object_count());
  std::vector<MorphismIndex> morphisms(g.morphism_count());
  std::vector<std::uint32_t> tuple(n), key, comps;
  for (ObjectIndex x = 0; x < objects.size(); ++x) {
    auto t = lim.keyed.object_key(x);
    for (std::size_t a = 0; a < n; ++a) {
      const auto& over = h.overcategories[a].category();
      const auto& vertex = h.diagram.vertex(static_cast<ObjectIndex>(a));
      key.assign(over.object_count(), t[a]);
      key.insert(key.end(), over.morphism_count(), vertex.identity(t[a]));
      tuple[a] = h.factors[a].find_functor(key);
    }
    objects[x] = h.find_object(tuple);
  }
  for (MorphismIndex m = 0; m < morphisms.size(); ++m) {
    auto c = lim.keyed.components(m);
    auto src = h.keyed.object_key(objects[g.src(m)]);
    for (std::size_t a = 0; a < n; ++a) {
      comps.assign(h.overcategories[a].category().object_count(), c[a]);
      tuple[a] = h.factors[a].find_transformation(src[a], comps);
    }
    morphisms[m] = h.find_morphism(objects[g.src(m)], tuple);
  }
  return CatFunctor(g.category(), h.groupoid().category(), std::move(objects),
                    std::move(morphisms));
}

DiagramFunctor slice_diagram(const DiagramFunctor& d, const ProductCategory& pc, bool vary_first,
                             ObjectIndex fixed) {
  const auto& index = vary_first ? pc.left : pc.right;
  const auto& other = vary_first ? pc.right : pc.left;
  std::vector<Groupoid> vertices;
  std::vector<CatFunctor> edges;
  for (ObjectIndex x = 0; x < index.object_count(); ++x)
    vertices.push_back(d.vertex(vary_first ? pc.object(x, fixed) : pc.object(fixed, x)));
  const auto id = other.identity(fixed);
  for (MorphismIndex m = 0; m < index.morphism_count(); ++m)
    edges.push_back(d.edge(vary_first ? pc.morphism(m, id) : pc.morphism(id, m)));
  return DiagramFunctor(index, std::move(vertices), std::move(edges));
}

namespace {

HolimFamily holim_family(const DiagramFunctor& d, const ProductCategory& pc, bool vary_first,
                         Budget budget) {
  const auto& outer = vary_first ? pc.right : pc.left;
  const auto& inner = vary_first ? pc.left : pc.right;
  HolimFamily family;
  for (ObjectIndex x = 0; x < outer.object_count(); ++x) {
    family.slices.push_back(slice_diagram(d, pc, vary_first, x));
    family.limits.push_back(holim(family.slices.back(), budget));
  }
  std::vector<Groupoid> vertices;
  for (const auto& l : family.limits) vertices.push_back(l.groupoid());
  std::vector<CatFunctor> edges;
  for (MorphismIndex g = 0; g < outer.morphism_count(); ++g) {
    const auto s = outer.src(g);
    const auto t = outer.dst(g);
    std::vector<CatFunctor> comps;
    for (ObjectIndex y = 0; y < inner.object_count(); ++y) {
      const auto id = inner.identity(y);
      comps.push_back(d.edge(vary_first ? pc.morphism(id, g) : pc.morphism(g, id)));
    }
    DiagramMap map(family.slices[s], family.slices[t], std::move(comps));
    edges.push_back(induced_map(map, family.limits[s], family.limits[t]));
  }
  family.diagram = DiagramFunctor(outer, std::move(vertices), std::move(edges));
  return family;
}

}  // namespace

HolimFamily holim_over_first(const DiagramFunctor& d, const ProductCategory& pc, Budget budget) {
  return holim_family(d, pc, true, budget);
}

HolimFamily holim_over_second(const DiagramFunctor& d, const ProductCategory& pc,
                              Budget budget) {
  return holim_family(d, pc, false, budget);
}

CatFunctor curry_comparison(const HomotopyLimit& total, const ProductCategory& pc,
                            bool outer_is_first, const HolimFamily& family,
                            const HomotopyLimit& iterated) {
  const auto& A = outer_is_first ? pc.left : pc.right;
  const auto& B = outer_is_first ? pc.right : pc.left;
  auto P = [&](ObjectIndex a, ObjectIndex b) {
    return outer_is_first ? pc.object(a, b) : pc.object(b, a);
  };
  auto M = [&](MorphismIndex f, MorphismIndex g) {
    return outer_is_first ? pc.morphism(f, g) : pc.morphism(g, f);
  };
  auto fail = [](const char* what) -> void {
    throw Error(std::string("curry comparison: ") + what);
  };

  const auto& tg = total.groupoid();
  std::vector<ObjectIndex> objects(tg.object_count());
  std::vector<std::uint32_t> outer_tuple(A.object_count());
  std::vector<std::uint32_t> lkey(B.object_count()), gkey, hkey;
  std::vector<MorphismIndex> comps;
  for (ObjectIndex T = 0; T < objects.size(); ++T) {
    for (ObjectIndex a = 0; a < A.object_count(); ++a) {
      const auto& OA = iterated.overcategories[a];
      const auto& L = family.limits[a];
      const auto& oa = OA.category();
      gkey.assign(oa.object_count() + oa.morphism_count(), 0);
      for (ObjectIndex u = 0; u < oa.object_count(); ++u) {
        const auto ua = OA.arrow(u);
        for (ObjectIndex b = 0; b < B.object_count(); ++b) {
          const auto& OB = L.overcategories[b];
          const auto& Ot = total.overcategories[P(a, b)];
          const auto& fg = total.factors[P(a, b)];
          const auto F = total.factor_object(T, P(a, b));
          auto fo = fg.object_map(F);
          auto fm = fg.morphism_map(F);
          const auto& ob = OB.category();
          hkey.resize(ob.object_count() + ob.morphism_count());
          for (ObjectIndex v = 0; v < ob.object_count(); ++v)
            hkey[v] = fo[Ot.object_of(M(ua, OB.arrow(v)))];
          const auto side = A.identity(A.src(ua));
          for (MorphismIndex tau = 0; tau < ob.morphism_count(); ++tau)
            hkey[ob.object_count() + tau] = fm[Ot.find_triangle(
                M(side, OB.triangle_side(tau)), M(ua, OB.triangle_target(tau)))];
          lkey[b] = L.factors[b].find_functor(hkey);
          if (lkey[b] == npos) fail("inner functor missing");
        }
        gkey[u] = L.find_object(lkey);
        if (gkey[u] == npos) fail("inner holim object missing");
      }
      for (MorphismIndex sigma = 0; sigma < oa.morphism_count(); ++sigma) {
        const auto tA = OA.triangle_side(sigma);
        const auto target = OA.arrow(oa.dst(sigma));
        const auto from = gkey[oa.src(sigma)];
        for (ObjectIndex b = 0; b < B.object_count(); ++b) {
          const auto& OB = L.overcategories[b];
          const auto& Ot = total.overcategories[P(a, b)];
          const auto& fg = total.factors[P(a, b)];
          auto fm = fg.morphism_map(total.factor_object(T, P(a, b)));
          const auto& ob = OB.category();
          comps.resize(ob.object_count());
          for (ObjectIndex v = 0; v < ob.object_count(); ++v) {
            const auto va = OB.arrow(v);
            comps[v] = fm[Ot.find_triangle(M(tA, B.identity(B.src(va))), M(target, va))];
          }
          lkey[b] = L.factors[b].find_transformation(L.factor_object(from, b), comps);
          if (lkey[b] == npos) fail("inner transformation missing");
        }
        gkey[oa.object_count() + sigma] = L.find_morphism(from, lkey);
        if (gkey[oa.object_count() + sigma] == npos) fail("inner holim morphism missing");
      }
      outer_tuple[a] = iterated.factors[a].find_functor(gkey);
      if (outer_tuple[a] == npos) fail("outer functor missing");
    }
    objects[T] = iterated.find_object(outer_tuple);
    if (objects[T] == npos) fail("outer holim object missing");
  }

  std::vector<MorphismIndex> morphisms(tg.morphism_count());
  std::vector<MorphismIndex> lmor;
  for (MorphismIndex e = 0; e < morphisms.size(); ++e) {
    const auto src = objects[tg.src(e)];
    for (ObjectIndex a = 0; a < A.object_count(); ++a) {
      const auto& OA = iterated.overcategories[a];
      const auto& L = family.limits[a];
      const auto& oa = OA.category();
      const auto G = iterated.factor_object(src, a);
      auto gobj = iterated.factors[a].object_map(G);
      lmor.resize(oa.object_count());
      for (ObjectIndex u = 0; u < oa.object_count(); ++u) {
        const auto ua = OA.arrow(u);
        for (ObjectIndex b = 0; b < B.object_count(); ++b) {
          const auto& OB = L.overcategories[b];
          const auto& Ot = total.overcategories[P(a, b)];
          auto ec = total.factors[P(a, b)].components(total.factor_morphism(e, P(a, b)));
          const auto& ob = OB.category();
          comps.resize(ob.object_count());
          for (ObjectIndex v = 0; v < ob.object_count(); ++v)
            comps[v] = ec[Ot.object_of(M(ua, OB.arrow(v)))];
          lkey[b] = L.factors[b].find_transformation(L.factor_object(gobj[u], b), comps);
          if (lkey[b] == npos) fail("inner transformation missing");
        }
        lmor[u] = L.find_morphism(gobj[u], lkey);
        if (lmor[u] == npos) fail("inner holim morphism missing");
      }
      outer_tuple[a] = iterated.factors[a].find_transformation(G, lmor);
      if (outer_tuple[a] == npos) fail("outer transformation missing");
    }
    morphisms[e] = iterated.find_morphism(src, outer_tuple);
    if (morphisms[e] == npos) fail("outer holim morphism missing");
  }
  return CatFunctor(tg.category(), iterated.groupoid().category(), std::move(objects),
                    std::move(morphisms));
}

FubiniResult fubini(const DiagramFunctor& d, const ProductCategory& pc, Budget budget) {
  FubiniResult r;
  r.total = holim(d, budget);
  r.inner_second = holim_over_second(d, pc, budget);
  r.outer_first = holim(r.inner_second.diagram, budget);
  r.inner_first = holim_over_first(d, pc, budget);
  r.outer_second = holim(r.inner_first.diagram, budget);
  r.to_first_iterated = curry_comparison(r.total, pc, true, r.inner_second, r.outer_first);
  r.to_second_iterated = curry_comparison(r.total, pc, false, r.inner_first, r.outer_second);
  r.first_is_isomorphism = is_isomorphism(r.to_first_iterated);
  r.second_is_isomorphism = is_isomorphism(r.to_second_iterated);
  return r;
}

}  // namespace grpdlim
