#include "grpdlim/models.hpp"

#include "grpdlim/convention.hpp"

namespace grpdlim {

ValidationReport GroupAction::check(const FiniteGroup& group, const Groupoid& space,
                                    const std::vector<CatFunctor>& act) {
  ValidationReport report;
  if (act.size() != group.order()) {
    report.add("action-size", {act.size(), group.order()});
    return report;
  }
  const auto& x = space.category();
  for (ElementIndex g = 0; g < act.size(); ++g)
    if (!act[g].source().same_tables(x) || !act[g].target().same_tables(x))
      report.add("action-typing", {g}, "act(g) is not an endofunctor of the space");
  if (!report.ok()) return report;
  if (!act[group.identity()].is_identity())
    report.add("action-identity", {group.identity()}, "act(1) is not the identity");
  for (ElementIndex g = 0; g < act.size(); ++g)
    for (ElementIndex h = 0; h < act.size(); ++h) {
      // act(gh) = act(g) ∘ act(h): apply act(h) first.
      const auto& gh = act[group.multiply(g, h)];
      bool ok = true;
      for (ObjectIndex o = 0; o < x.object_count() && ok; ++o)
        ok = gh.object(o) == act[g].object(act[h].object(o));
      for (MorphismIndex m = 0; m < x.morphism_count() && ok; ++m)
        ok = gh.morphism(m) == act[g].morphism(act[h].morphism(m));
      if (!ok) report.add("action-composition", {g, h}, "act(gh) != act(g) ∘ act(h)");
    }
  for (ElementIndex g = 0; g < act.size(); ++g)
    if (!is_isomorphism(act[g])) report.add("action-invertible", {g}, "act(g) is not invertible");
  return report;
}

GroupAction::GroupAction(FiniteGroup group, Groupoid space, std::vector<CatFunctor> act)
    : group_(std::move(group)), space_(std::move(space)), act_(std::move(act)) {
  auto report = check(group_, space_, act_);
  if (!report.ok()) throw InvalidStructure("invalid group action", std::move(report));
}

GroupAction GroupAction::trivial(const FiniteGroup& group, const Groupoid& space) {
  return GroupAction(group, space,
                     std::vector<CatFunctor>(group.order(),
                                             CatFunctor::identity(space.category())));
}

GroupAction GroupAction::translation(const FiniteGroup& group) {
  auto e = translation_groupoid(group);
  const auto n = group.order();
  std::vector<CatFunctor> act;
  for (ElementIndex g = 0; g < n; ++g) {
    std::vector<ObjectIndex> objects(n);
    std::vector<MorphismIndex> morphisms(n * n);
    for (ElementIndex h = 0; h < n; ++h) objects[h] = group.multiply(g, h);
    // (h, k): h -> k·h goes to (g·h, g k g⁻¹).
    for (ElementIndex h = 0; h < n; ++h)
      for (ElementIndex k = 0; k < n; ++k)
        morphisms[h * n + k] = static_cast<MorphismIndex>(
            group.multiply(g, h) * n + group.multiply(group.multiply(g, k), group.inverse(g)));
    act.emplace_back(e.category(), e.category(), std::move(objects), std::move(morphisms));
  }
  return GroupAction(group, e, std::move(act));
}

DiagramFunctor action_diagram(const GroupAction& a) {
  return DiagramFunctor(delooping(a.group()).category(), {a.space()}, a.functors());
}

ObjectIndex HomotopyFixedPoints::find(ObjectIndex x, const std::vector<MorphismIndex>& phi) const {
  std::vector<std::uint32_t> key{x};
  key.insert(key.end(), phi.begin(), phi.end());
  return keyed.find_object(key);
}

namespace {

// Extends generator values of a cocycle to the whole group along a
// breadth-first spanning tree of words.
struct WordTree {
  std::vector<ElementIndex> order;      // elements in breadth-first order
  std::vector<ElementIndex> parent;     // w = parent·step
  std::vector<std::size_t> step;        // index into generators

  WordTree(const FiniteGroup& group, const std::vector<ElementIndex>& generators)
      : parent(group.order(), npos), step(group.order(), npos) {
    std::vector<bool> seen(group.order(), false);
    order.push_back(group.identity());
    seen[group.identity()] = true;
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::size_t s = 0; s < generators.size(); ++s) {
        const auto w = group.multiply(order[i], generators[s]);
        if (seen[w]) continue;
        seen[w] = true;
        parent[w] = order[i];
        step[w] = s;
        order.push_back(w);
      }
  }
};

}  // namespace

HomotopyFixedPoints homotopy_fixed_points(const GroupAction& a, Budget budget) {
  const auto& group = a.group();
  const auto& x = a.space();
  const auto n = group.order();
  const auto generators = generating_set(group);
  const WordTree words(group, generators);
  auto compose = [&](MorphismIndex f, MorphismIndex g) { return x.compose(f, g); };
  auto act = [&](ElementIndex g, MorphismIndex m) { return a.morphism(g, m); };

  KeyedGroupoidBuilder builder(1 + n, {x}, budget, "homotopy fixed points");
  std::vector<MorphismIndex> gen_values(generators.size());
  std::vector<std::uint32_t> key(1 + n);

  auto emit = [&](ObjectIndex base) {
    key[0] = base;
    auto phi = [&](ElementIndex g) -> MorphismIndex& { return key[1 + g]; };
    phi(group.identity()) = x.identity(base);
    for (std::size_t i = 1; i < words.order.size(); ++i) {
      const auto w = words.order[i];
      const auto p = words.parent[w];
      phi(w) = cocycle_value(compose, act, p, phi(p), gen_values[words.step[w]]);
    }
    for (ElementIndex g = 0; g < n; ++g)
      for (ElementIndex h = 0; h < n; ++h) {
        builder.meter().charge();
        if (phi(group.multiply(g, h)) != cocycle_value(compose, act, g, phi(g), phi(h))) return;
      }
    builder.add_object(key);
  };

  auto choose = [&](auto&& self, ObjectIndex base, std::size_t i) -> void {
    if (i == generators.size()) {
      emit(base);
      return;
    }
    for (MorphismIndex m : x.hom(base, a.object(generators[i], base))) {
      builder.meter().charge();
      gen_values[i] = m;
      self(self, base, i + 1);
    }
  };
  for (ObjectIndex base = 0; base < x.object_count(); ++base) choose(choose, base, 0);

  const auto count = static_cast<ObjectIndex>(builder.object_count());
  std::vector<std::uint32_t> target(1 + n);
  for (ObjectIndex p = 0; p < count; ++p) {
    const auto source = builder.object_key(p);
    const std::vector<std::uint32_t> src(source.begin(), source.end());
    for (MorphismIndex alpha : x.out(src[0])) {
      builder.meter().charge();
      target[0] = x.dst(alpha);
      const auto back = x.inverse(alpha);
      for (ElementIndex g = 0; g < n; ++g)
        target[1 + g] = x.compose(back, x.compose(src[1 + g], a.morphism(g, alpha)));
      const auto q = builder.find_object(target);
      if (q == npos) throw Error("homotopy fixed points: transported cocycle is missing");
      const MorphismIndex comps[1] = {alpha};
      builder.add_morphism(p, q, comps);
    }
  }
  return {a, std::move(builder).finish()};
}

HfpComparison hfp_via_holim(const GroupAction& a, Budget budget) {
  HfpComparison r{holim(action_diagram(a), budget), homotopy_fixed_points(a, budget), {}, false};
  const auto& h = r.holim;
  const auto& group = a.group();
  const auto& over = h.overcategories[0];
  const auto& factor = h.factors[0];
  const auto one = over.object_of(group.identity());
  std::vector<MorphismIndex> from_one(group.order());
  for (ElementIndex g = 0; g < group.order(); ++g)
    from_one[g] = over.find_triangle(group.inverse(g), g);

  const auto& hg = h.groupoid();
  std::vector<ObjectIndex> objects(hg.object_count());
  std::vector<MorphismIndex> morphisms(hg.morphism_count());
  std::vector<MorphismIndex> phi(group.order());
  for (ObjectIndex p = 0; p < objects.size(); ++p) {
    const auto f = h.factor_object(p, 0);
    const auto omap = factor.object_map(f);
    const auto mmap = factor.morphism_map(f);
    for (ElementIndex g = 0; g < group.order(); ++g) phi[g] = mmap[from_one[g]];
    objects[p] = r.explicit_model.find(omap[one], phi);
    if (objects[p] == npos) throw Error("hfp comparison: holim object has no explicit image");
  }
  for (MorphismIndex m = 0; m < morphisms.size(); ++m) {
    const MorphismIndex alpha[1] = {factor.components(h.factor_morphism(m, 0))[one]};
    morphisms[m] = r.explicit_model.keyed.find_morphism(objects[hg.src(m)], alpha);
  }
  r.comparison = CatFunctor(hg.category(), r.explicit_model.groupoid().category(),
                            std::move(objects), std::move(morphisms));
  r.is_isomorphism = is_isomorphism(r.comparison);
  return r;
}

HomotopyPullback homotopy_pullback(const CatFunctor& f, const CatFunctor& g, Budget budget) {
  if (!f.target().same_tables(g.target()))
    throw ShapeMismatch("homotopy pullback: f and g have different targets");
  const Groupoid x(f.source()), y(g.source()), z(f.target());
  KeyedGroupoidBuilder builder(5, {x, y, z}, budget, "homotopy pullback");
  std::uint32_t key[5];
  for (ObjectIndex a = 0; a < x.object_count(); ++a)
    for (ObjectIndex b = 0; b < y.object_count(); ++b)
      for (ObjectIndex c = 0; c < z.object_count(); ++c)
        for (MorphismIndex alpha : z.hom(f.object(a), c))
          for (MorphismIndex beta : z.hom(g.object(b), c)) {
            builder.meter().charge();
            key[0] = a;
            key[1] = b;
            key[2] = c;
            key[3] = alpha;
            key[4] = beta;
            builder.add_object(key);
          }
  const auto count = static_cast<ObjectIndex>(builder.object_count());
  std::uint32_t target[5];
  MorphismIndex comps[3];
  for (ObjectIndex p = 0; p < count; ++p) {
    const auto k = builder.object_key(p);
    const std::uint32_t src[5] = {k[0], k[1], k[2], k[3], k[4]};
    for (MorphismIndex ma : x.out(src[0]))
      for (MorphismIndex mb : y.out(src[1]))
        for (MorphismIndex mc : z.out(src[2])) {
          builder.meter().charge();
          target[0] = x.dst(ma);
          target[1] = y.dst(mb);
          target[2] = z.dst(mc);
          target[3] = z.compose(z.inverse(f.morphism(ma)), z.compose(src[3], mc));
          target[4] = z.compose(z.inverse(g.morphism(mb)), z.compose(src[4], mc));
          comps[0] = ma;
          comps[1] = mb;
          comps[2] = mc;
          builder.add_morphism(p, builder.find_object(target), comps);
        }
  }
  return {f, g, std::move(builder).finish()};
}

ReducedPullback homotopy_pullback_reduced(const CatFunctor& f, const CatFunctor& g,
                                          Budget budget) {
  if (!f.target().same_tables(g.target()))
    throw ShapeMismatch("homotopy pullback: f and g have different targets");
  const Groupoid x(f.source()), y(g.source()), z(f.target());
  KeyedGroupoidBuilder builder(3, {x, y}, budget, "reduced homotopy pullback");
  std::uint32_t key[3];
  for (ObjectIndex a = 0; a < x.object_count(); ++a)
    for (ObjectIndex b = 0; b < y.object_count(); ++b)
      for (MorphismIndex gamma : z.hom(f.object(a), g.object(b))) {
        builder.meter().charge();
        key[0] = a;
        key[1] = b;
        key[2] = gamma;
        builder.add_object(key);
      }
  const auto count = static_cast<ObjectIndex>(builder.object_count());
  std::uint32_t target[3];
  MorphismIndex comps[2];
  for (ObjectIndex p = 0; p < count; ++p) {
    const auto k = builder.object_key(p);
    const std::uint32_t src[3] = {k[0], k[1], k[2]};
    for (MorphismIndex ma : x.out(src[0]))
      for (MorphismIndex mb : y.out(src[1])) {
        builder.meter().charge();
        target[0] = x.dst(ma);
        target[1] = y.dst(mb);
        target[2] = z.compose(z.inverse(f.morphism(ma)), z.compose(src[2], g.morphism(mb)));
        comps[0] = ma;
        comps[1] = mb;
        builder.add_morphism(p, builder.find_object(target), comps);
      }
  }
  return {f, g, std::move(builder).finish()};
}

PullbackComparison compare_pullback_models(const CatFunctor& f, const CatFunctor& g,
                                           Budget budget) {
  PullbackComparison r{homotopy_pullback(f, g, budget), homotopy_pullback_reduced(f, g, budget),
                       {}, {}};
  const Groupoid z(f.target());
  const auto& full = r.full.keyed;
  const auto& fg = full.groupoid();
  std::vector<ObjectIndex> objects(fg.object_count());
  std::vector<MorphismIndex> morphisms(fg.morphism_count());
  for (ObjectIndex p = 0; p < objects.size(); ++p) {
    const auto k = full.object_key(p);
    const std::uint32_t key[3] = {k[0], k[1], z.compose(k[3], z.inverse(k[4]))};
    objects[p] = r.reduced.keyed.find_object(key);
  }
  for (MorphismIndex m = 0; m < morphisms.size(); ++m) {
    const auto c = full.components(m);
    const MorphismIndex comps[2] = {c[0], c[1]};
    morphisms[m] = r.reduced.keyed.find_morphism(objects[fg.src(m)], comps);
  }
  r.comparison = CatFunctor(fg.category(), r.reduced.groupoid().category(), std::move(objects),
                            std::move(morphisms));
  r.certificate = is_equivalence(r.comparison);
  return r;
}

DiagramFunctor cospan_diagram(const CatFunctor& f, const CatFunctor& g) {
  if (!f.target().same_tables(g.target()))
    throw ShapeMismatch("cospan: f and g have different targets");
  std::vector<Groupoid> vertices{Groupoid(f.source()), Groupoid(f.target()),
                                 Groupoid(g.source())};
  std::vector<CatFunctor> edges{CatFunctor::identity(f.source()),
                                CatFunctor::identity(f.target()),
                                CatFunctor::identity(g.source()), f, g};
  return DiagramFunctor(pullback_shape(), std::move(vertices), std::move(edges));
}

HolimPullbackComparison homotopy_pullback_via_holim(const CatFunctor& f, const CatFunctor& g,
                                                    Budget budget) {
  HolimPullbackComparison r{holim(cospan_diagram(f, g), budget), homotopy_pullback(f, g, budget),
                            {}, {}, false};
  const auto& h = r.holim;
  const auto& middle = h.overcategories[1];
  const auto id_z = middle.object_of(1);
  const auto along_f = middle.find_triangle(3, 1);
  const auto along_g = middle.find_triangle(4, 1);
  const auto& hg = h.groupoid();
  std::vector<ObjectIndex> objects(hg.object_count());
  std::vector<MorphismIndex> morphisms(hg.morphism_count());
  for (ObjectIndex p = 0; p < objects.size(); ++p) {
    const auto fm = h.factor_object(p, 1);
    const auto mmap = h.factors[1].morphism_map(fm);
    const std::uint32_t key[5] = {h.factors[0].object_map(h.factor_object(p, 0))[0],
                                  h.factors[2].object_map(h.factor_object(p, 2))[0],
                                  h.factors[1].object_map(fm)[id_z], mmap[along_f],
                                  mmap[along_g]};
    objects[p] = r.full.keyed.find_object(key);
  }
  for (MorphismIndex m = 0; m < morphisms.size(); ++m) {
    const MorphismIndex comps[3] = {h.factors[0].components(h.factor_morphism(m, 0))[0],
                                    h.factors[2].components(h.factor_morphism(m, 2))[0],
                                    h.factors[1].components(h.factor_morphism(m, 1))[id_z]};
    morphisms[m] = r.full.keyed.find_morphism(objects[hg.src(m)], comps);
  }
  r.comparison = CatFunctor(hg.category(), r.full.groupoid().category(), std::move(objects),
                            std::move(morphisms));
  r.certificate = is_equivalence(r.comparison);
  r.is_isomorphism = is_isomorphism(r.comparison);
  return r;
}

LoopGroupoid loop_groupoid(const Groupoid& x, Budget budget) {
  KeyedGroupoidBuilder builder(2, {x}, budget, "loop groupoid");
  for (ObjectIndex o = 0; o < x.object_count(); ++o)
    for (MorphismIndex phi : x.hom(o, o)) {
      builder.meter().charge();
      const std::uint32_t key[2] = {o, phi};
      builder.add_object(key);
    }
  const auto count = static_cast<ObjectIndex>(builder.object_count());
  for (ObjectIndex p = 0; p < count; ++p) {
    const auto k = builder.object_key(p);
    const std::uint32_t phi = k[1];
    for (MorphismIndex alpha : x.out(k[0])) {
      builder.meter().charge();
      const std::uint32_t key[2] = {x.dst(alpha),
                                    x.compose(x.compose(x.inverse(alpha), phi), alpha)};
      const MorphismIndex comps[1] = {alpha};
      builder.add_morphism(p, builder.find_object(key), comps);
    }
  }
  return {x, std::move(builder).finish()};
}

CatFunctor diagonal(const Groupoid& x, const ProductGroupoid& square) {
  std::vector<ObjectIndex> objects(x.object_count());
  std::vector<MorphismIndex> morphisms(x.morphism_count());
  for (ObjectIndex o = 0; o < objects.size(); ++o) {
    const std::uint32_t key[2] = {o, o};
    objects[o] = square.keyed.find_object(key);
  }
  for (MorphismIndex m = 0; m < morphisms.size(); ++m) {
    const MorphismIndex comps[2] = {m, m};
    morphisms[m] = square.keyed.find_morphism(objects[x.src(m)], comps);
  }
  return CatFunctor(x.category(), square.groupoid().category(), std::move(objects),
                    std::move(morphisms));
}

LoopComparison loop_vs_pullback(const Groupoid& x, Budget budget) {
  auto square = product_groupoid({x, x}, budget);
  auto delta = diagonal(x, square);
  LoopComparison r{loop_groupoid(x, budget), square,
                   homotopy_pullback_reduced(delta, delta, budget), {}, {}};
  const auto& lg = r.loop.groupoid();
  std::vector<ObjectIndex> objects(lg.object_count());
  std::vector<MorphismIndex> morphisms(lg.morphism_count());
  for (ObjectIndex p = 0; p < objects.size(); ++p) {
    const auto k = r.loop.keyed.object_key(p);
    const MorphismIndex pair[2] = {x.identity(k[0]), k[1]};
    const auto gamma = square.keyed.find_morphism(delta.object(k[0]), pair);
    const std::uint32_t key[3] = {k[0], k[0], gamma};
    objects[p] = r.pullback.keyed.find_object(key);
  }
  for (MorphismIndex m = 0; m < morphisms.size(); ++m) {
    const auto alpha = r.loop.keyed.components(m)[0];
    const MorphismIndex comps[2] = {alpha, alpha};
    morphisms[m] = r.pullback.keyed.find_morphism(objects[lg.src(m)], comps);
  }
  r.comparison = CatFunctor(lg.category(), r.pullback.groupoid().category(), std::move(objects),
                            std::move(morphisms));
  r.certificate = is_equivalence(r.comparison);
  return r;
}

}  // namespace grpdlim
