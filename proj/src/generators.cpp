#include "grpdlim/generators.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace grpdlim::gen {

const char* to_string(Shape s) {
  switch (s) {
    case Shape::Terminal: return "terminal";
    case Shape::Discrete2: return "discrete2";
    case Shape::Chain2: return "chain2";
    case Shape::Chain3: return "chain3";
    case Shape::Span: return "span";
    case Shape::Cospan: return "cospan";
    case Shape::Square: return "square";
    case Shape::BZ2: return "BZ2";
    case Shape::BZ3: return "BZ3";
    case Shape::Idempotent: return "idempotent";
    case Shape::RightZero: return "right_zero";
  }
  return "?";
}

FiniteCategory shape_category(Shape s) {
  switch (s) {
    case Shape::Terminal: return terminal_category();
    case Shape::Discrete2: return discrete(2).category();
    case Shape::Chain2: return chain_category(2);
    case Shape::Chain3: return chain_category(3);
    case Shape::Span: return poset_category(3, {{0, 1}, {0, 2}});
    case Shape::Cospan: return pullback_shape();
    case Shape::Square: return product_category(chain_category(2), chain_category(2)).category;
    case Shape::BZ2: return delooping(FiniteGroup::cyclic(2)).category();
    case Shape::BZ3: return delooping(FiniteGroup::cyclic(3)).category();
    case Shape::Idempotent: return idempotent_category();
    case Shape::RightZero: return monoid_category({{0, 1, 2}, {1, 1, 2}, {2, 1, 2}});
  }
  return terminal_category();
}

std::vector<Shape> all_shapes() {
  return {Shape::Terminal, Shape::Discrete2, Shape::Chain2,     Shape::Chain3,
          Shape::Span,     Shape::Cospan,    Shape::Square,     Shape::BZ2,
          Shape::BZ3,      Shape::Idempotent, Shape::RightZero};
}

std::vector<Shape> filtered_shapes() {
  return {Shape::Terminal, Shape::Chain2,     Shape::Chain3,   Shape::Cospan,
          Shape::Square,   Shape::Idempotent, Shape::RightZero};
}

std::vector<std::vector<ElementIndex>> subgroups(const FiniteGroup& g) {
  std::set<std::vector<ElementIndex>> found;
  const auto n = static_cast<ElementIndex>(g.order());
  for (ElementIndex a = 0; a < n; ++a)
    for (ElementIndex b = a; b < n; ++b) {
      std::set<ElementIndex> h{g.identity(), a, b};
      bool grew = true;
      while (grew) {
        grew = false;
        std::vector<ElementIndex> cur(h.begin(), h.end());
        for (auto x : cur)
          for (auto y : cur) grew = h.insert(g.multiply(x, y)).second || grew;
      }
      found.insert(std::vector<ElementIndex>(h.begin(), h.end()));
    }
  return {found.begin(), found.end()};
}

GSet coset_space(const FiniteGroup& g, const std::vector<ElementIndex>& h) {
  const auto n = g.order();
  std::vector<std::uint32_t> coset_of(n, npos);
  std::vector<ElementIndex> reps;
  for (ElementIndex a = 0; a < n; ++a) {
    if (coset_of[a] != npos) continue;
    for (auto x : h) coset_of[g.multiply(a, x)] = static_cast<std::uint32_t>(reps.size());
    reps.push_back(a);
  }
  GSet s{g, reps.size(), std::vector<std::vector<std::uint32_t>>(n)};
  for (ElementIndex x = 0; x < n; ++x)
    for (auto a : reps) s.act[x].push_back(coset_of[g.multiply(x, a)]);
  return s;
}

GSet disjoint(const FiniteGroup& g, const std::vector<GSet>& parts) {
  GSet s{g, 0, std::vector<std::vector<std::uint32_t>>(g.order())};
  for (const auto& p : parts) {
    const auto offset = static_cast<std::uint32_t>(s.points);
    for (ElementIndex x = 0; x < g.order(); ++x)
      for (auto y : p.act[x]) s.act[x].push_back(y + offset);
    s.points += p.points;
  }
  return s;
}

GSet random_gset(Rng& rng, const FiniteGroup& g, std::size_t max_points) {
  auto subs = subgroups(g);
  std::vector<GSet> parts;
  std::size_t room = std::max<std::size_t>(max_points, 1);
  const auto orbits = 1 + rng.below(3);
  for (std::size_t k = 0; k < orbits; ++k) {
    std::vector<std::vector<ElementIndex>> fit;
    for (const auto& h : subs)
      if (g.order() / h.size() <= room) fit.push_back(h);
    if (fit.empty()) break;
    auto c = coset_space(g, rng.pick(fit));
    room -= c.points;
    parts.push_back(std::move(c));
    if (room == 0) break;
  }
  return disjoint(g, parts);
}

namespace {

std::vector<ElementIndex> stabilizer_of(const GSet& x, std::uint32_t p) {
  std::vector<ElementIndex> out;
  for (ElementIndex g = 0; g < x.group.order(); ++g)
    if (x.act[g][p] == p) out.push_back(g);
  return out;
}

}  // namespace

std::optional<std::vector<std::uint32_t>> random_equivariant(Rng& rng, const GSet& x,
                                                             const GSet& y) {
  std::vector<std::uint32_t> f(x.points, npos);
  const auto n = x.group.order();
  for (std::uint32_t p = 0; p < x.points; ++p) {
    if (f[p] != npos) continue;
    auto stab = stabilizer_of(x, p);
    std::vector<std::uint32_t> candidates;
    for (std::uint32_t q = 0; q < y.points; ++q) {
      bool ok = true;
      for (auto g : stab) ok = ok && y.act[g][q] == q;
      if (ok) candidates.push_back(q);
    }
    if (candidates.empty()) return std::nullopt;
    const auto q = rng.pick(candidates);
    for (ElementIndex g = 0; g < n; ++g) f[x.act[g][p]] = y.act[g][q];
  }
  return f;
}

CatFunctor equivariant_functor(const Groupoid& ex, const Groupoid& ey, std::size_t group_order,
                               const std::vector<std::uint32_t>& f) {
  std::vector<ObjectIndex> objects(f.begin(), f.end());
  std::vector<MorphismIndex> morphisms(ex.morphism_count());
  for (MorphismIndex m = 0; m < morphisms.size(); ++m)
    morphisms[m] = static_cast<MorphismIndex>(f[m / group_order] * group_order + m % group_order);
  return CatFunctor(ex.category(), ey.category(), std::move(objects), std::move(morphisms));
}

FiniteGroup random_group(Rng& rng) {
  switch (rng.below(6)) {
    case 0: return FiniteGroup::trivial();
    case 1: return FiniteGroup::cyclic(2);
    case 2: return FiniteGroup::cyclic(3);
    case 3: return FiniteGroup::cyclic(4);
    case 4: return FiniteGroup::klein();
    default: return FiniteGroup::symmetric(3);
  }
}

namespace {

using PointMap = std::vector<std::uint32_t>;

PointMap identity_map(std::size_t n) {
  PointMap f(n);
  for (std::uint32_t p = 0; p < n; ++p) f[p] = p;
  return f;
}

PointMap compose_maps(const PointMap& first, const PointMap& second) {
  PointMap out(first.size());
  for (std::size_t p = 0; p < first.size(); ++p) out[p] = second[first[p]];
  return out;
}

// A target admitting a map from x, with the map.
std::pair<GSet, PointMap> target_for(Rng& rng, const GSet& x, std::size_t cap) {
  for (int attempt = 0; attempt < 20; ++attempt) {
    auto y = random_gset(rng, x.group, cap);
    if (auto f = random_equivariant(rng, x, y)) return {y, *f};
  }
  std::vector<ElementIndex> all(x.group.order());
  for (ElementIndex g = 0; g < all.size(); ++g) all[g] = g;
  return {coset_space(x.group, all), PointMap(x.points, 0)};  // G/G, one fixed point
}

// A source mapping into y, with the map.
std::pair<GSet, PointMap> source_for(Rng& rng, const GSet& y, std::size_t cap) {
  for (int attempt = 0; attempt < 20; ++attempt) {
    auto x = random_gset(rng, y.group, cap);
    if (auto f = random_equivariant(rng, x, y)) return {x, *f};
  }
  return {y, identity_map(y.points)};
}

std::vector<ElementIndex> central_elements(const FiniteGroup& g, std::size_t exponent) {
  std::vector<ElementIndex> out;
  for (ElementIndex c = 0; c < g.order(); ++c) {
    bool central = true;
    for (ElementIndex x = 0; x < g.order() && central; ++x)
      central = g.multiply(c, x) == g.multiply(x, c);
    ElementIndex p = g.identity();
    for (std::size_t k = 0; k < exponent; ++k) p = g.multiply(p, c);
    if (central && p == g.identity()) out.push_back(c);
  }
  return out;
}

DiagramFunctor assemble(const FiniteCategory& index, const std::vector<GSet>& sets,
                        const std::vector<PointMap>& maps) {
  std::vector<Groupoid> vertices;
  for (const auto& s : sets) vertices.push_back(action_groupoid(s));
  std::vector<CatFunctor> edges;
  const auto n = sets.front().group.order();
  for (MorphismIndex m = 0; m < index.morphism_count(); ++m)
    edges.push_back(
        equivariant_functor(vertices[index.src(m)], vertices[index.dst(m)], n, maps[m]));
  return DiagramFunctor(index, std::move(vertices), std::move(edges));
}

// Thin shapes: maps given per ordered pair of objects.
DiagramFunctor assemble_thin(const FiniteCategory& index, const std::vector<GSet>& sets,
                             const std::map<std::pair<ObjectIndex, ObjectIndex>, PointMap>& by_pair) {
  std::vector<PointMap> maps(index.morphism_count());
  for (MorphismIndex m = 0; m < maps.size(); ++m) {
    const auto a = index.src(m);
    const auto b = index.dst(m);
    maps[m] = a == b ? identity_map(sets[a].points) : by_pair.at({a, b});
  }
  return assemble(index, sets, maps);
}

// Copies of y laid side by side; point (c, p) is c * |y| + p.
GSet copies(const GSet& y, std::size_t k) { return disjoint(y.group, std::vector<GSet>(k, y)); }

}  // namespace

DiagramFunctor random_diagram(Rng& rng, Shape s, Limits limits) {
  FiniteGroup g;
  std::size_t cap = 0;
  do {
    g = random_group(rng);
    cap = std::min(limits.max_objects, limits.max_morphisms / g.order());
  } while (cap == 0);
  const auto index = shape_category(s);
  switch (s) {
    case Shape::Terminal: return assemble_thin(index, {random_gset(rng, g, cap)}, {});
    case Shape::Discrete2:
      return assemble_thin(index, {random_gset(rng, g, cap), random_gset(rng, g, cap)}, {});
    case Shape::Chain2: {
      auto x = random_gset(rng, g, cap);
      auto [y, f] = target_for(rng, x, cap);
      return assemble_thin(index, {x, y}, {{{0, 1}, f}});
    }
    case Shape::Chain3: {
      auto x = random_gset(rng, g, cap);
      auto [y, f] = target_for(rng, x, cap);
      auto [z, h] = target_for(rng, y, cap);
      return assemble_thin(index, {x, y, z}, {{{0, 1}, f}, {{1, 2}, h}, {{0, 2}, compose_maps(f, h)}});
    }
    case Shape::Span: {
      auto x = random_gset(rng, g, cap);
      auto [y, f] = target_for(rng, x, cap);
      auto [z, h] = target_for(rng, x, cap);
      return assemble_thin(index, {x, y, z}, {{{0, 1}, f}, {{0, 2}, h}});
    }
    case Shape::Cospan: {
      auto y = random_gset(rng, g, cap);
      auto [x, f] = source_for(rng, y, cap);
      auto [z, h] = source_for(rng, y, cap);
      return assemble_thin(index, {x, y, z}, {{{0, 1}, f}, {{2, 1}, h}});
    }
    case Shape::Square: {
      // Objects 00, 01, 10, 11 at 0..3; 00 is cut out of the fibre product.
      auto top = random_gset(rng, g, cap);
      auto [a, h] = source_for(rng, top, cap);
      auto [b, k] = source_for(rng, top, cap);
      std::vector<std::pair<std::uint32_t, std::uint32_t>> fibre;
      for (std::uint32_t p = 0; p < a.points; ++p)
        for (std::uint32_t q = 0; q < b.points; ++q)
          if (h[p] == k[q]) fibre.push_back({p, q});
      if (fibre.empty()) {
        a = top;
        h = identity_map(top.points);
        for (std::uint32_t q = 0; q < b.points; ++q) fibre.push_back({k[q], q});
      }
      // Orbits of the fibre product under the diagonal action; keep a random
      // nonempty selection within the cap.
      std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> where;
      for (std::uint32_t i = 0; i < fibre.size(); ++i) where[fibre[i]] = i;
      std::vector<std::vector<std::uint32_t>> orbits;
      std::vector<bool> seen(fibre.size(), false);
      for (std::uint32_t i = 0; i < fibre.size(); ++i) {
        if (seen[i]) continue;
        std::vector<std::uint32_t> orbit;
        for (ElementIndex x = 0; x < g.order(); ++x) {
          auto j = where.at({a.act[x][fibre[i].first], b.act[x][fibre[i].second]});
          if (!seen[j]) {
            seen[j] = true;
            orbit.push_back(j);
          }
        }
        orbits.push_back(orbit);
      }
      std::vector<std::uint32_t> chosen;
      for (const auto& o : orbits)
        if ((chosen.empty() || rng.coin()) && chosen.size() + o.size() <= cap)
          chosen.insert(chosen.end(), o.begin(), o.end());
      if (chosen.empty()) chosen = orbits.front();
      std::sort(chosen.begin(), chosen.end());
      GSet bottom{g, chosen.size(), std::vector<std::vector<std::uint32_t>>(g.order())};
      PointMap f, e;
      for (auto i : chosen) {
        f.push_back(fibre[i].first);
        e.push_back(fibre[i].second);
      }
      for (ElementIndex x = 0; x < g.order(); ++x)
        for (auto i : chosen) {
          auto j = where.at({a.act[x][fibre[i].first], b.act[x][fibre[i].second]});
          bottom.act[x].push_back(static_cast<std::uint32_t>(
              std::lower_bound(chosen.begin(), chosen.end(), j) - chosen.begin()));
        }
      return assemble_thin(index, {bottom, a, b, top},
                           {{{0, 1}, f}, {{0, 2}, e}, {{1, 3}, h}, {{2, 3}, k},
                            {{0, 3}, compose_maps(f, h)}});
    }
    case Shape::BZ2:
    case Shape::BZ3: {
      const std::size_t n = s == Shape::BZ2 ? 2 : 3;
      const std::size_t k = cap >= n && rng.coin() ? n : 1;
      auto y = random_gset(rng, g, cap / k);
      auto x = copies(y, k);
      const auto c = rng.pick(central_elements(g, n));
      // σ moves copy i to copy i + 1 and multiplies by c.
      PointMap sigma(x.points);
      for (std::uint32_t p = 0; p < x.points; ++p) {
        const auto copy = p / y.points;
        const auto q = p % y.points;
        sigma[p] = static_cast<std::uint32_t>(((copy + 1) % k) * y.points + y.act[c][q]);
      }
      std::vector<PointMap> maps(n);
      for (ElementIndex e = 0; e < n; ++e) {
        maps[e] = identity_map(x.points);
        for (ElementIndex t = 0; t < e; ++t) maps[e] = compose_maps(maps[e], sigma);
      }
      return assemble(index, {x}, maps);
    }
    case Shape::Idempotent: {
      auto y = random_gset(rng, g, std::max<std::size_t>(1, cap / 2));
      GSet z{g, 0, std::vector<std::vector<std::uint32_t>>(g.order())};
      PointMap onto;
      if (cap > y.points && rng.coin()) {
        auto [zz, f] = source_for(rng, y, cap - y.points);
        z = zz;
        onto = f;
      }
      auto x = disjoint(g, {y, z});
      PointMap e = identity_map(y.points);
      e.insert(e.end(), onto.begin(), onto.end());
      return assemble(index, {x}, {identity_map(x.points), e});
    }
    case Shape::RightZero: {
      const std::size_t k = cap >= 3 && rng.coin() ? 3 : 2;
      auto y = random_gset(rng, g, std::max<std::size_t>(1, cap / k));
      auto x = copies(y, k);
      PointMap a(x.points), b(x.points);
      for (std::uint32_t p = 0; p < x.points; ++p) {
        a[p] = p % y.points;
        b[p] = static_cast<std::uint32_t>(y.points + p % y.points);
      }
      return assemble(index, {x}, {identity_map(x.points), a, b});
    }
  }
  throw Error("unknown shape");
}

Groupoid random_groupoid(Rng& rng, Limits limits) {
  switch (rng.below(4)) {
    case 0: return codiscrete(1 + rng.below(std::min<std::size_t>(3, limits.max_objects)));
    case 1: return delooping(FiniteGroup::cyclic(2 + rng.below(2)));
    case 2: return discrete(1 + rng.below(std::min<std::size_t>(3, limits.max_objects)));
    default: {
      auto g = random_group(rng);
      auto cap = std::min(limits.max_objects, limits.max_morphisms / g.order());
      if (cap == 0) return terminal_groupoid();
      return action_groupoid(random_gset(rng, g, cap));
    }
  }
}

ProductDiagram diagram_product(const DiagramFunctor& a, const DiagramFunctor& b) {
  if (!(a.index() == b.index())) throw ShapeMismatch("diagram product over different indices");
  const auto& index = a.index();
  std::vector<ProductGroupoid> products;
  std::vector<Groupoid> vertices;
  for (ObjectIndex v = 0; v < index.object_count(); ++v) {
    products.push_back(product_groupoid({a.vertex(v), b.vertex(v)}));
    vertices.push_back(products.back().groupoid());
  }
  std::vector<CatFunctor> edges;
  for (MorphismIndex m = 0; m < index.morphism_count(); ++m)
    edges.push_back(product_map({a.edge(m), b.edge(m)}, products[index.src(m)],
                                products[index.dst(m)]));
  DiagramFunctor d(index, std::move(vertices), std::move(edges));
  std::vector<CatFunctor> first, second;
  for (const auto& p : products) {
    first.push_back(p.projections[0]);
    second.push_back(p.projections[1]);
  }
  DiagramMap pa(d, a, std::move(first));
  DiagramMap pb(d, b, std::move(second));
  return ProductDiagram{std::move(d), std::move(products), std::move(pa), std::move(pb)};
}

std::optional<DiagramMap> diagram_section(const ProductDiagram& p,
                                          const std::vector<ObjectIndex>& points) {
  const auto& a = p.first.target();
  const auto& b = p.second.target();
  const auto& index = a.index();
  for (MorphismIndex m = 0; m < index.morphism_count(); ++m)
    if (b.edge(m).object(points[index.src(m)]) != points[index.dst(m)]) return std::nullopt;
  std::vector<CatFunctor> comps;
  for (ObjectIndex v = 0; v < index.object_count(); ++v) {
    const auto& x = a.vertex(v);
    const auto& keyed = p.products[v].keyed;
    const auto e = points[v];
    const auto id = b.vertex(v).identity(e);
    std::vector<ObjectIndex> objects;
    for (ObjectIndex o = 0; o < x.object_count(); ++o) {
      const std::uint32_t key[2] = {o, e};
      objects.push_back(keyed.find_object(key));
    }
    std::vector<MorphismIndex> morphisms;
    for (MorphismIndex m = 0; m < x.morphism_count(); ++m) {
      const MorphismIndex parts[2] = {m, id};
      morphisms.push_back(keyed.find_morphism(objects[x.src(m)], parts));
    }
    comps.emplace_back(x.category(), keyed.groupoid().category(), std::move(objects),
                       std::move(morphisms));
  }
  return DiagramMap(a, p.diagram, std::move(comps));
}

DiagramFunctor pullback_diagram(const DiagramFunctor& x, const CatFunctor& f) {
  if (!(f.target() == x.index())) throw ShapeMismatch("pullback diagram: functor target mismatch");
  const auto& j = f.source();
  std::vector<Groupoid> vertices;
  std::vector<CatFunctor> edges;
  for (ObjectIndex a = 0; a < j.object_count(); ++a) vertices.push_back(x.vertex(f.object(a)));
  for (MorphismIndex m = 0; m < j.morphism_count(); ++m) edges.push_back(x.edge(f.morphism(m)));
  return DiagramFunctor(j, std::move(vertices), std::move(edges));
}

DiagramFunctor external_product(const DiagramFunctor& p, const DiagramFunctor& q,
                                const ProductCategory& pc) {
  std::vector<ProductGroupoid> products;
  std::vector<Groupoid> vertices;
  for (ObjectIndex x = 0; x < pc.category.object_count(); ++x) {
    products.push_back(
        product_groupoid({p.vertex(pc.first_object(x)), q.vertex(pc.second_object(x))}));
    vertices.push_back(products.back().groupoid());
  }
  std::vector<CatFunctor> edges;
  const auto& c = pc.category;
  for (MorphismIndex m = 0; m < c.morphism_count(); ++m)
    edges.push_back(product_map({p.edge(pc.first_morphism(m)), q.edge(pc.second_morphism(m))},
                                products[c.src(m)], products[c.dst(m)]));
  return DiagramFunctor(c, std::move(vertices), std::move(edges));
}

DiagramFunctor translation_diagram(std::size_t n) {
  auto g = FiniteGroup::cyclic(n);
  auto e = translation_groupoid(g);
  std::vector<CatFunctor> edges;
  for (ElementIndex c = 0; c < n; ++c) {
    std::vector<ObjectIndex> objects(n);
    std::vector<MorphismIndex> morphisms(e.morphism_count());
    for (ObjectIndex x = 0; x < n; ++x) objects[x] = g.multiply(c, x);
    for (MorphismIndex m = 0; m < morphisms.size(); ++m)
      morphisms[m] = static_cast<MorphismIndex>(objects[m / n] * n + m % n);
    edges.emplace_back(e.category(), e.category(), std::move(objects), std::move(morphisms));
  }
  return DiagramFunctor(delooping(g).category(), {e}, std::move(edges));
}

MapCase random_componentwise_map(Rng& rng, Shape s) {
  const auto index = shape_category(s);
  auto kind = rng.below(4);
  if (kind == 3 && s != Shape::BZ2 && s != Shape::BZ3) kind = 0;
  const std::size_t k = 1 + rng.below(2);
  auto x = random_diagram(rng, s, Limits{6 / (kind == 3 ? (s == Shape::BZ2 ? 2 : 3) : k), 12});
  switch (kind) {
    case 0: {
      auto p = diagram_product(x, DiagramFunctor::constant(index, codiscrete(k)));
      return MapCase{"projection off codiscrete(" + std::to_string(k) + ")", p.first, true, true};
    }
    case 1: {
      auto p = diagram_product(x, DiagramFunctor::constant(index, codiscrete(2)));
      auto section = diagram_section(p, std::vector<ObjectIndex>(index.object_count(), 0));
      return MapCase{"section into codiscrete(2)", *section, true, false};
    }
    case 2: {
      auto z = random_groupoid(rng, Limits{2, 4});
      auto p = diagram_product(x, DiagramFunctor::constant(index, z));
      return MapCase{"projection off a constant factor", p.first, false, true};
    }
    default: {
      auto p = diagram_product(x, translation_diagram(s == Shape::BZ2 ? 2 : 3));
      return MapCase{"projection off the translation groupoid", p.first, true, true};
    }
  }
}

namespace {

// compose as a functor A × A -> A for a one-object commutative index.
CatFunctor multiplication(const ProductCategory& pc) {
  const auto& a = pc.left;
  std::vector<MorphismIndex> morphisms(pc.category.morphism_count());
  for (MorphismIndex m = 0; m < morphisms.size(); ++m)
    morphisms[m] = a.compose(pc.first_morphism(m), pc.second_morphism(m));
  return CatFunctor(pc.category, a, {0}, std::move(morphisms));
}

}  // namespace

DiagramFunctor random_product_diagram(Rng& rng, Shape a, Shape b, const ProductCategory& pc,
                                      Limits limits) {
  const bool commutative_square =
      a == b && (a == Shape::BZ2 || a == Shape::BZ3 || a == Shape::Idempotent);
  const auto kind = rng.below(commutative_square ? 4 : 3);
  const Limits half{std::max<std::size_t>(1, limits.max_objects / 2),
                    std::max<std::size_t>(2, limits.max_morphisms / 4)};
  switch (kind) {
    case 0: return external_product(random_diagram(rng, a, half), random_diagram(rng, b, half), pc);
    case 1: return pullback_diagram(random_diagram(rng, a, limits), pc.first);
    case 2: return pullback_diagram(random_diagram(rng, b, limits), pc.second);
    default: return pullback_diagram(random_diagram(rng, a, limits), multiplication(pc));
  }
}

namespace {

// A chain site's neighbourhood functor for a point whose smallest open is
// `bottom`: index chain over the opens bottom..n-1 listed from the top.
SitePoint chain_point(const std::string& name, const FiniteCategory& shape,
                      const FiniteCategory& op, ObjectIndex bottom) {
  const auto n = shape.object_count();
  const auto len = n - bottom;
  auto index = len == 1 ? terminal_category() : chain_category(len);
  std::vector<ObjectIndex> objects(len);
  for (ObjectIndex i = 0; i < len; ++i) objects[i] = static_cast<ObjectIndex>(n - 1 - i);
  std::vector<MorphismIndex> morphisms(index.morphism_count());
  for (MorphismIndex m = 0; m < morphisms.size(); ++m)
    morphisms[m] = shape.hom(objects[index.dst(m)], objects[index.src(m)]).front();
  return SitePoint{name, index, CatFunctor(index, op, std::move(objects), std::move(morphisms))};
}

FiniteSite chain_site(std::size_t n, const std::vector<std::pair<std::string, ObjectIndex>>& points) {
  auto shape = chain_category(n);
  auto op = opposite(shape);
  std::vector<SitePoint> ps;
  for (const auto& [name, bottom] : points) ps.push_back(chain_point(name, shape, op, bottom));
  return FiniteSite(shape, std::move(ps));
}

}  // namespace

FiniteSite two_open_site() { return chain_site(2, {{"u", 0}, {"v", 1}}); }
FiniteSite three_open_site() { return chain_site(3, {{"u", 0}, {"v", 1}}); }

namespace {

bool is_chain(const FiniteCategory& c) {
  const auto n = c.object_count();
  if (c.morphism_count() != n * (n + 1) / 2) return false;
  for (ObjectIndex i = 0; i < n; ++i)
    for (ObjectIndex j = i; j < n; ++j)
      if (c.hom(i, j).size() != 1) return false;
  return true;
}

// 𝒞^op -> chain(n), i ↦ n - 1 - i, for a chain site.
CatFunctor reversal(const FiniteCategory& op) {
  const auto n = op.object_count();
  auto chain = n == 1 ? terminal_category() : chain_category(n);
  std::vector<ObjectIndex> objects(n);
  for (ObjectIndex i = 0; i < n; ++i) objects[i] = static_cast<ObjectIndex>(n - 1 - i);
  std::vector<MorphismIndex> morphisms(op.morphism_count());
  for (MorphismIndex m = 0; m < morphisms.size(); ++m)
    morphisms[m] = chain.hom(objects[op.src(m)], objects[op.dst(m)]).front();
  return CatFunctor(op, chain, std::move(objects), std::move(morphisms));
}

// Opens that are the smallest neighbourhood of some point.
std::vector<bool> stalk_opens(const FiniteSite& site) {
  std::vector<bool> out(site.shape().object_count(), false);
  for (const auto& p : site.points()) {
    const auto& I = p.index;
    bool found = false;
    for (ObjectIndex t = 0; t < I.object_count() && !found; ++t) {
      bool terminal = true;
      for (ObjectIndex x = 0; x < I.object_count() && terminal; ++x)
        terminal = I.hom(x, t).size() == 1;
      if (terminal) {
        out[p.nbhd.object(t)] = true;
        found = true;
      }
    }
    if (!found)
      for (ObjectIndex x = 0; x < I.object_count(); ++x) out[p.nbhd.object(x)] = true;
  }
  return out;
}

CatFunctor into_codiscrete(const Groupoid& a, const Groupoid& c, std::vector<ObjectIndex> objects) {
  std::vector<MorphismIndex> morphisms(a.morphism_count());
  for (MorphismIndex m = 0; m < morphisms.size(); ++m)
    morphisms[m] = c.hom(objects[a.src(m)], objects[a.dst(m)]).front();
  return CatFunctor(a.category(), c.category(), std::move(objects), std::move(morphisms));
}

// A presheaf on a chain site contractible at every stalk open, arbitrary
// (one groupoid z) above them; restrictions keep object 0 at object 0.
DiagramFunctor contractible_at_stalks(Rng& rng, const FiniteSite& site, const Groupoid& z) {
  const auto& op = site.opposite();
  const auto n = op.object_count();
  auto at_stalk = stalk_opens(site);
  std::vector<Groupoid> sections(n);
  for (ObjectIndex u = 0; u < n; ++u)
    sections[u] = at_stalk[u] ? codiscrete(1 + rng.below(2)) : z;
  // step[u]: sections[u + 1] -> sections[u].
  std::vector<CatFunctor> step(n);
  for (ObjectIndex u = 0; u + 1 < n; ++u) {
    const auto& from = sections[u + 1];
    const auto& to = sections[u];
    if (!at_stalk[u]) {
      step[u] = at_stalk[u + 1] ? CatFunctor::constant(from.category(), to.category(), 0)
                                : CatFunctor::identity(to.category());
      continue;
    }
    std::vector<ObjectIndex> objects(from.object_count());
    for (ObjectIndex x = 1; x < objects.size(); ++x)
      objects[x] = static_cast<ObjectIndex>(rng.below(to.object_count()));
    step[u] = into_codiscrete(from, to, std::move(objects));
  }
  std::vector<CatFunctor> edges(op.morphism_count());
  for (MorphismIndex m = 0; m < edges.size(); ++m) {
    // op morphism from b down to a: compose the steps b-1, ..., a.
    const auto b = op.src(m);
    const auto a = op.dst(m);
    auto f = CatFunctor::identity(sections[b].category());
    for (auto u = b; u > a; --u) f = then(f, step[u - 1]);
    edges[m] = f;
  }
  return DiagramFunctor(op, std::move(sections), std::move(edges));
}

}  // namespace

PresheafMapCase random_presheaf_map(Rng& rng, const FiniteSite& site, Shape gamma) {
  if (!is_chain(site.shape())) throw ShapeMismatch("random presheaf maps need a chain site");
  const auto& op = site.opposite();
  const auto n = op.object_count();
  const auto index = shape_category(gamma);
  auto pc = product_category(index, op);
  const Limits small{2, 6};
  const auto chain_shape = n == 1 ? Shape::Terminal : n == 2 ? Shape::Chain2 : Shape::Chain3;
  auto presheaf = pullback_diagram(random_diagram(rng, chain_shape, small), reversal(op));

  DiagramFunctor total;
  switch (rng.below(3)) {
    case 0: total = external_product(random_diagram(rng, gamma, small), presheaf, pc); break;
    case 1: total = pullback_diagram(presheaf, pc.second); break;
    default: total = pullback_diagram(random_diagram(rng, gamma, Limits{3, 8}), pc.first); break;
  }

  const auto kind = rng.below(3);
  if (kind == 2) {
    auto z = random_groupoid(rng, Limits{2, 4});
    auto p = diagram_product(total, DiagramFunctor::constant(pc.category, z));
    return PresheafMapCase{"projection off a constant presheaf",
                           presheaf_diagram_map(site, index, p.first), false, true};
  }
  auto e = contractible_at_stalks(rng, site, random_groupoid(rng, Limits{2, 4}));
  auto p = diagram_product(total, pullback_diagram(e, pc.second));
  if (kind == 0)
    return PresheafMapCase{"projection off a stalkwise contractible presheaf",
                           presheaf_diagram_map(site, index, p.first), true, true};
  auto section = diagram_section(p, std::vector<ObjectIndex>(pc.category.object_count(), 0));
  return PresheafMapCase{"section into a stalkwise contractible presheaf",
                         presheaf_diagram_map(site, index, *section), true, false};
}

}  // namespace grpdlim::gen
