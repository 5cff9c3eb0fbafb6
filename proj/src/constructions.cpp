#include "grpdlim/constructions.hpp"

namespace grpdlim {

FiniteCategory terminal_category() {
  return FiniteCategory::generate(1, {{0, 0}}, {0}, [](MorphismIndex, MorphismIndex) { return 0u; });
}

Groupoid terminal_groupoid() { return Groupoid(terminal_category(), {0}); }

Groupoid empty_groupoid() { return Groupoid(); }

Groupoid discrete(std::size_t n) {
  std::vector<Arrow> arrows(n);
  std::vector<MorphismIndex> ids(n);
  for (std::size_t i = 0; i < n; ++i) {
    arrows[i] = {static_cast<ObjectIndex>(i), static_cast<ObjectIndex>(i)};
    ids[i] = static_cast<MorphismIndex>(i);
  }
  auto c = FiniteCategory::generate(n, std::move(arrows), ids,
                                    [](MorphismIndex f, MorphismIndex) { return f; });
  return Groupoid(std::move(c), std::move(ids));
}

Groupoid codiscrete(std::size_t n) {
  std::vector<Arrow> arrows;
  std::vector<MorphismIndex> ids(n), inverse(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      arrows.push_back({static_cast<ObjectIndex>(i), static_cast<ObjectIndex>(j)});
      inverse[i * n + j] = static_cast<MorphismIndex>(j * n + i);
    }
  for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<MorphismIndex>(i * n + i);
  auto c = FiniteCategory::generate(n, std::move(arrows), std::move(ids),
                                    [n](MorphismIndex f, MorphismIndex g) {
                                      return static_cast<MorphismIndex>((f / n) * n + g % n);
                                    });
  return Groupoid(std::move(c), std::move(inverse));
}

Groupoid delooping(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<Arrow> arrows(n, Arrow{0, 0});
  std::vector<MorphismIndex> inverse(n);
  for (ElementIndex a = 0; a < n; ++a) inverse[a] = g.inverse(a);
  auto c = FiniteCategory::generate(1, std::move(arrows), {g.identity()},
                                    [&g](MorphismIndex a, MorphismIndex b) {
                                      return g.multiply(b, a);
                                    });
  return Groupoid(std::move(c), std::move(inverse));
}

GSet GSet::regular(const FiniteGroup& g) {
  GSet s{g, g.order(), std::vector<std::vector<std::uint32_t>>(g.order())};
  for (ElementIndex h = 0; h < g.order(); ++h)
    for (ElementIndex x = 0; x < g.order(); ++x) s.act[h].push_back(g.multiply(h, x));
  return s;
}

GSet GSet::trivial(const FiniteGroup& g, std::size_t points) {
  GSet s{g, points, std::vector<std::vector<std::uint32_t>>(g.order())};
  for (auto& row : s.act)
    for (std::size_t x = 0; x < points; ++x) row.push_back(static_cast<std::uint32_t>(x));
  return s;
}

ValidationReport GSet::check() const {
  ValidationReport report;
  if (act.size() != group.order()) {
    report.add("gset-shape", {act.size(), group.order()}, "need one row per group element");
    return report;
  }
  for (std::size_t h = 0; h < act.size(); ++h) {
    if (act[h].size() != points) {
      report.add("gset-shape", {h}, "row has the wrong length");
      return report;
    }
    for (std::size_t x = 0; x < points; ++x)
      if (act[h][x] >= points) report.add("gset-range", {h, x}, "image is not a point");
  }
  if (!report.ok()) return report;
  for (std::size_t x = 0; x < points; ++x)
    if (act[group.identity()][x] != x) report.add("gset-identity", {x}, "e·x != x");
  for (ElementIndex a = 0; a < group.order(); ++a)
    for (ElementIndex b = 0; b < group.order(); ++b)
      for (std::size_t x = 0; x < points; ++x)
        if (act[a][act[b][x]] != act[group.multiply(a, b)][x])
          report.add("gset-compatibility", {a, b, x}, "a·(b·x) != (ab)·x");
  return report;
}

Groupoid action_groupoid(const GSet& x) {
  auto report = x.check();
  if (!report.ok()) throw InvalidStructure("invalid G-set", std::move(report));
  const auto& g = x.group;
  const std::size_t n = g.order();
  std::vector<Arrow> arrows;
  std::vector<MorphismIndex> ids(x.points), inverse(x.points * n);
  for (std::size_t p = 0; p < x.points; ++p) {
    for (ElementIndex h = 0; h < n; ++h) {
      const auto q = x.act[h][p];
      arrows.push_back({static_cast<ObjectIndex>(p), q});
      inverse[p * n + h] = static_cast<MorphismIndex>(q * n + g.inverse(h));
    }
    ids[p] = static_cast<MorphismIndex>(p * n + g.identity());
  }
  // (p, h) then (h·p, k) is (p, k·h).
  auto c = FiniteCategory::generate(x.points, std::move(arrows), std::move(ids),
                                    [&g, n](MorphismIndex f, MorphismIndex s) {
                                      return static_cast<MorphismIndex>(
                                          (f / n) * n +
                                          g.multiply(static_cast<ElementIndex>(s % n),
                                                     static_cast<ElementIndex>(f % n)));
                                    });
  return Groupoid(std::move(c), std::move(inverse));
}

Groupoid translation_groupoid(const FiniteGroup& g) { return action_groupoid(GSet::regular(g)); }

ProductCategory product_category(const FiniteCategory& a, const FiniteCategory& b) {
  const std::size_t nb = b.object_count();
  const std::size_t mb = b.morphism_count();
  std::vector<Arrow> arrows;
  arrows.reserve(a.morphism_count() * mb);
  for (MorphismIndex f = 0; f < a.morphism_count(); ++f)
    for (MorphismIndex g = 0; g < mb; ++g)
      arrows.push_back({static_cast<ObjectIndex>(a.src(f) * nb + b.src(g)),
                        static_cast<ObjectIndex>(a.dst(f) * nb + b.dst(g))});
  std::vector<MorphismIndex> ids;
  for (ObjectIndex i = 0; i < a.object_count(); ++i)
    for (ObjectIndex j = 0; j < nb; ++j)
      ids.push_back(static_cast<MorphismIndex>(a.identity(i) * mb + b.identity(j)));
  auto c = FiniteCategory::generate(
      a.object_count() * nb, std::move(arrows), std::move(ids),
      [&](MorphismIndex f, MorphismIndex g) {
        return static_cast<MorphismIndex>(a.compose(f / mb, g / mb) * mb +
                                          b.compose(f % mb, g % mb));
      });
  std::vector<ObjectIndex> o1, o2;
  std::vector<MorphismIndex> m1, m2;
  for (ObjectIndex x = 0; x < c.object_count(); ++x) {
    o1.push_back(static_cast<ObjectIndex>(x / nb));
    o2.push_back(static_cast<ObjectIndex>(x % nb));
  }
  for (MorphismIndex m = 0; m < c.morphism_count(); ++m) {
    m1.push_back(static_cast<MorphismIndex>(m / mb));
    m2.push_back(static_cast<MorphismIndex>(m % mb));
  }
  CatFunctor first(c, a, std::move(o1), std::move(m1));
  CatFunctor second(c, b, std::move(o2), std::move(m2));
  return {c, a, b, std::move(first), std::move(second)};
}

CatFunctor product_swap(const ProductCategory& ab, const ProductCategory& ba) {
  std::vector<ObjectIndex> objects(ab.category.object_count());
  std::vector<MorphismIndex> morphisms(ab.category.morphism_count());
  for (ObjectIndex x = 0; x < objects.size(); ++x)
    objects[x] = ba.object(ab.second_object(x), ab.first_object(x));
  for (MorphismIndex m = 0; m < morphisms.size(); ++m)
    morphisms[m] = ba.morphism(ab.second_morphism(m), ab.first_morphism(m));
  return CatFunctor(ab.category, ba.category, std::move(objects), std::move(morphisms));
}

DisjointUnion disjoint_union(const std::vector<Groupoid>& parts) {
  DisjointUnion u;
  std::vector<Arrow> arrows;
  std::vector<MorphismIndex> ids, inverse;
  ObjectIndex objects = 0;
  MorphismIndex morphisms = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const auto& p = parts[k];
    u.object_offset.push_back(objects);
    u.morphism_offset.push_back(morphisms);
    for (ObjectIndex x = 0; x < p.object_count(); ++x) {
      u.component.push_back(k);
      ids.push_back(morphisms + p.identity(x));
    }
    for (MorphismIndex m = 0; m < p.morphism_count(); ++m) {
      arrows.push_back({objects + p.src(m), objects + p.dst(m)});
      inverse.push_back(morphisms + p.inverse(m));
    }
    objects += static_cast<ObjectIndex>(p.object_count());
    morphisms += static_cast<MorphismIndex>(p.morphism_count());
  }
  std::vector<std::size_t> owner(morphisms);
  for (std::size_t k = 0; k < parts.size(); ++k)
    for (MorphismIndex m = 0; m < parts[k].morphism_count(); ++m)
      owner[u.morphism_offset[k] + m] = k;
  auto c = FiniteCategory::generate(objects, std::move(arrows), std::move(ids),
                                    [&](MorphismIndex f, MorphismIndex g) {
                                      const auto k = owner[f];
                                      const auto off = u.morphism_offset[k];
                                      return off + parts[k].compose(f - off, g - off);
                                    });
  u.groupoid = Groupoid(std::move(c), std::move(inverse));
  for (std::size_t k = 0; k < parts.size(); ++k) {
    std::vector<ObjectIndex> o(parts[k].object_count());
    std::vector<MorphismIndex> m(parts[k].morphism_count());
    for (std::size_t x = 0; x < o.size(); ++x)
      o[x] = u.object_offset[k] + static_cast<ObjectIndex>(x);
    for (std::size_t f = 0; f < m.size(); ++f)
      m[f] = u.morphism_offset[k] + static_cast<MorphismIndex>(f);
    u.injections.emplace_back(parts[k].category(), u.groupoid.category(), std::move(o),
                              std::move(m));
  }
  return u;
}

FiniteCategory opposite(const FiniteCategory& c) {
  std::vector<Arrow> arrows(c.morphism_count());
  std::vector<MorphismIndex> ids(c.object_count());
  for (MorphismIndex m = 0; m < arrows.size(); ++m) arrows[m] = {c.dst(m), c.src(m)};
  for (ObjectIndex x = 0; x < ids.size(); ++x) ids[x] = c.identity(x);
  return FiniteCategory::generate(c.object_count(), std::move(arrows), std::move(ids),
                                  [&c](MorphismIndex f, MorphismIndex g) {
                                    return c.compose(g, f);
                                  });
}

Groupoid opposite(const Groupoid& g) {
  std::vector<MorphismIndex> inverse(g.morphism_count());
  for (MorphismIndex m = 0; m < inverse.size(); ++m) inverse[m] = g.inverse(m);
  return Groupoid(opposite(g.category()), std::move(inverse));
}

FiniteCategory poset_category(std::size_t n,
                              const std::vector<std::pair<ObjectIndex, ObjectIndex>>& relations) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
  for (auto [a, b] : relations) {
    if (a >= n || b >= n) throw Error("poset relation names a missing object");
    leq[a][b] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq[k][j]) leq[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (leq[i][j] && leq[j][i]) throw Error("poset relations contain a cycle");
  std::vector<Arrow> arrows;
  std::vector<std::vector<MorphismIndex>> index(n, std::vector<MorphismIndex>(n, npos));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (leq[i][j]) {
        index[i][j] = static_cast<MorphismIndex>(arrows.size());
        arrows.push_back({static_cast<ObjectIndex>(i), static_cast<ObjectIndex>(j)});
      }
  std::vector<MorphismIndex> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = index[i][i];
  auto arrows_copy = arrows;
  return FiniteCategory::generate(n, std::move(arrows), std::move(ids),
                                  [&](MorphismIndex f, MorphismIndex g) {
                                    return index[arrows_copy[f].src][arrows_copy[g].dst];
                                  });
}

FiniteCategory chain_category(std::size_t n) {
  std::vector<std::pair<ObjectIndex, ObjectIndex>> rel;
  for (std::size_t i = 0; i + 1 < n; ++i)
    rel.emplace_back(static_cast<ObjectIndex>(i), static_cast<ObjectIndex>(i + 1));
  return poset_category(n, rel);
}

FiniteCategory pullback_shape() {
  RawCategory raw;
  raw.object_count = 3;
  raw.arrows = {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {2, 1}};
  raw.identities = {0, 1, 2};
  for (MorphismIndex f = 0; f < 5; ++f)
    for (MorphismIndex g = 0; g < 5; ++g) {
      if (raw.arrows[f].dst != raw.arrows[g].src) continue;
      raw.compositions.push_back({f, g, f < 3 ? g : f});
    }
  return FiniteCategory::from_raw(raw);
}

FiniteCategory idempotent_category() { return monoid_category({{0, 1}, {1, 1}}); }

FiniteCategory monoid_category(const std::vector<std::vector<MorphismIndex>>& table) {
  RawCategory raw;
  raw.object_count = 1;
  raw.arrows.assign(table.size(), Arrow{0, 0});
  raw.identities = {0};
  for (MorphismIndex f = 0; f < table.size(); ++f) {
    if (table[f].size() != table.size()) throw Error("monoid table is not square");
    for (MorphismIndex g = 0; g < table.size(); ++g)
      raw.compositions.push_back({f, g, table[f][g]});
  }
  return FiniteCategory::from_raw(raw);
}

std::vector<std::uint32_t> connected_components(const FiniteCategory& c) {
  std::vector<std::uint32_t> label(c.object_count(), npos);
  std::uint32_t next = 0;
  std::vector<ObjectIndex> stack;
  for (ObjectIndex start = 0; start < c.object_count(); ++start) {
    if (label[start] != npos) continue;
    label[start] = next;
    stack.assign(1, start);
    while (!stack.empty()) {
      const auto x = stack.back();
      stack.pop_back();
      for (MorphismIndex m : c.out(x))
        if (label[c.dst(m)] == npos) {
          label[c.dst(m)] = next;
          stack.push_back(c.dst(m));
        }
      for (MorphismIndex m : c.in(x))
        if (label[c.src(m)] == npos) {
          label[c.src(m)] = next;
          stack.push_back(c.src(m));
        }
    }
    ++next;
  }
  return label;
}

Overcategory::Overcategory(const FiniteCategory& gamma, ObjectIndex alpha)
    : gamma_(gamma), alpha_(alpha), triangle_index_(2) {
  if (alpha >= gamma.object_count()) throw Error("overcategory base is not an object");
  object_of_.assign(gamma.morphism_count(), npos);
  for (MorphismIndex u : gamma.in(alpha)) {
    object_of_[u] = static_cast<ObjectIndex>(arrows_.size());
    arrows_.push_back(u);
  }
  std::vector<Arrow> arrows;
  std::vector<MorphismIndex> ids(arrows_.size());
  for (ObjectIndex x = 0; x < arrows_.size(); ++x) {
    const auto u = arrows_[x];
    for (MorphismIndex t : gamma.out(gamma.src(u))) {
      for (MorphismIndex target : gamma.in(alpha)) {
        if (gamma.src(target) != gamma.dst(t) || gamma.compose(t, target) != u) continue;
        const std::uint32_t key[2] = {t, target};
        triangle_index_.insert(key);
        if (gamma.is_identity(t)) ids[x] = static_cast<MorphismIndex>(triangles_.size());
        triangles_.emplace_back(t, target);
        arrows.push_back({x, object_of_[target]});
      }
    }
  }
  category_ = FiniteCategory::generate(arrows_.size(), std::move(arrows), std::move(ids),
                                       [this](MorphismIndex f, MorphismIndex g) {
                                         return find_triangle(
                                             gamma_.compose(triangles_[f].first,
                                                            triangles_[g].first),
                                             triangles_[g].second);
                                       });
  std::vector<ObjectIndex> objects(arrows_.size());
  std::vector<MorphismIndex> morphisms(triangles_.size());
  for (ObjectIndex x = 0; x < objects.size(); ++x) objects[x] = gamma.src(arrows_[x]);
  for (MorphismIndex m = 0; m < morphisms.size(); ++m) morphisms[m] = triangles_[m].first;
  forgetful_ = CatFunctor(category_, gamma_, std::move(objects), std::move(morphisms));
}

MorphismIndex Overcategory::find_triangle(MorphismIndex t, MorphismIndex target) const {
  const std::uint32_t key[2] = {t, target};
  return triangle_index_.find(key);
}

CatFunctor overcategory_map(const Overcategory& from, const Overcategory& to, MorphismIndex m) {
  const auto& gamma = from.gamma();
  if (gamma.src(m) != from.base() || gamma.dst(m) != to.base())
    throw ShapeMismatch("morphism does not run between the overcategory bases");
  std::vector<ObjectIndex> objects(from.category().object_count());
  std::vector<MorphismIndex> morphisms(from.category().morphism_count());
  for (ObjectIndex x = 0; x < objects.size(); ++x)
    objects[x] = to.object_of(gamma.compose(from.arrow(x), m));
  for (MorphismIndex f = 0; f < morphisms.size(); ++f)
    morphisms[f] = to.find_triangle(from.triangle_side(f),
                                    gamma.compose(from.triangle_target(f), m));
  return CatFunctor(from.category(), to.category(), std::move(objects), std::move(morphisms));
}

}  // namespace grpdlim
