#include "grpdlim/colim.hpp"

#include <numeric>
#include <sstream>
#include <unordered_map>

namespace grpdlim {

const char* to_string(FilteredFailure f) {
  switch (f) {
    case FilteredFailure::None: return "none";
    case FilteredFailure::Empty: return "empty";
    case FilteredFailure::NoCocone: return "no cocone";
    case FilteredFailure::NoCoequalizer: return "no coequalizer";
  }
  return "unknown";
}

std::string FilteredCheck::describe() const {
  if (filtered) return "filtered";
  std::ostringstream out;
  out << to_string(failure);
  if (failure == FilteredFailure::NoCocone)
    out << " for objects " << indices[0] << " and " << indices[1];
  else if (failure == FilteredFailure::NoCoequalizer)
    out << " for parallel morphisms " << indices[0] << " and " << indices[1];
  return out.str();
}

FilteredCheck is_filtered(const FiniteCategory& c) {
  FilteredCheck r;
  const auto n = c.object_count();
  if (n == 0) {
    r.failure = FilteredFailure::Empty;
    return r;
  }
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (MorphismIndex m = 0; m < c.morphism_count(); ++m) reach[c.src(m)][c.dst(m)] = true;
  for (ObjectIndex i = 0; i < n; ++i)
    for (ObjectIndex j = i + 1; j < n; ++j) {
      bool common = false;
      for (ObjectIndex k = 0; k < n && !common; ++k) common = reach[i][k] && reach[j][k];
      if (!common) {
        r.failure = FilteredFailure::NoCocone;
        r.indices = {i, j};
        return r;
      }
    }
  for (MorphismIndex u = 0; u < c.morphism_count(); ++u)
    for (MorphismIndex v = u + 1; v < c.morphism_count(); ++v) {
      if (c.src(u) != c.src(v) || c.dst(u) != c.dst(v)) continue;
      bool equalized = false;
      for (MorphismIndex w : c.out(c.dst(u)))
        if (c.compose(u, w) == c.compose(v, w)) {
          equalized = true;
          break;
        }
      if (!equalized) {
        r.failure = FilteredFailure::NoCoequalizer;
        r.indices = {u, v};
        return r;
      }
    }
  r.filtered = true;
  return r;
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// Numbers classes in order of their least member.
std::vector<std::uint32_t> number_classes(UnionFind& uf, std::size_t n, std::size_t& count) {
  std::vector<std::uint32_t> label(n, npos), of(n);
  count = 0;
  for (std::size_t x = 0; x < n; ++x) {
    const auto r = uf.find(x);
    if (label[r] == npos) label[r] = static_cast<std::uint32_t>(count++);
    of[x] = label[r];
  }
  return of;
}

}  // namespace

FilteredColimit filtered_colimit(const DiagramFunctor& d, Budget budget) {
  const auto& index = d.index();
  auto check = is_filtered(index);
  if (!check.filtered) {
    ValidationReport report;
    report.add("filtered", check.indices, check.describe());
    throw InvalidStructure("filtered colimit over a non-filtered index", std::move(report));
  }
  BudgetMeter meter(budget, "filtered colimit");
  const auto n = index.object_count();
  std::vector<std::size_t> obj_off(n + 1, 0), mor_off(n + 1, 0);
  for (ObjectIndex i = 0; i < n; ++i) {
    obj_off[i + 1] = obj_off[i] + d.vertex(i).object_count();
    mor_off[i + 1] = mor_off[i] + d.vertex(i).morphism_count();
  }
  UnionFind objects(obj_off[n]), morphisms(mor_off[n]);
  for (MorphismIndex u = 0; u < index.morphism_count(); ++u) {
    if (index.is_identity(u)) continue;
    const auto i = index.src(u), j = index.dst(u);
    const auto& e = d.edge(u);
    for (ObjectIndex x = 0; x < d.vertex(i).object_count(); ++x)
      objects.unite(obj_off[i] + x, obj_off[j] + e.object(x));
    for (MorphismIndex m = 0; m < d.vertex(i).morphism_count(); ++m)
      morphisms.unite(mor_off[i] + m, mor_off[j] + e.morphism(m));
    meter.charge(d.vertex(i).morphism_count() + d.vertex(i).object_count());
  }
  std::size_t object_count = 0, morphism_count = 0;
  const auto obj_class = number_classes(objects, obj_off[n], object_count);
  const auto mor_class = number_classes(morphisms, mor_off[n], morphism_count);

  FilteredColimit r;
  r.diagram = d;
  r.object_reps.assign(object_count, {npos, npos});
  r.morphism_reps.assign(morphism_count, {npos, npos});
  std::vector<Arrow> arrows(morphism_count);
  std::vector<MorphismIndex> identities(object_count), inverse(morphism_count);
  for (ObjectIndex i = 0; i < n; ++i) {
    const auto& g = d.vertex(i);
    for (ObjectIndex x = 0; x < g.object_count(); ++x) {
      const auto c = obj_class[obj_off[i] + x];
      if (r.object_reps[c].first == npos) {
        r.object_reps[c] = {i, x};
        identities[c] = mor_class[mor_off[i] + g.identity(x)];
      }
    }
    for (MorphismIndex m = 0; m < g.morphism_count(); ++m) {
      const auto c = mor_class[mor_off[i] + m];
      if (r.morphism_reps[c].first != npos) continue;
      r.morphism_reps[c] = {i, m};
      arrows[c] = {obj_class[obj_off[i] + g.src(m)], obj_class[obj_off[i] + g.dst(m)]};
      inverse[c] = mor_class[mor_off[i] + g.inverse(m)];
    }
  }
  // Every composable pair of classes has composable representatives at
  // some common stage, so scanning each stage fills the table.
  std::unordered_map<std::uint64_t, MorphismIndex> table;
  for (ObjectIndex k = 0; k < n; ++k) {
    const auto& g = d.vertex(k);
    for (MorphismIndex a = 0; a < g.morphism_count(); ++a)
      for (MorphismIndex b : g.out(g.dst(a))) {
        meter.charge();
        const std::uint64_t key =
            (std::uint64_t{mor_class[mor_off[k] + a]} << 32) | mor_class[mor_off[k] + b];
        const auto value = mor_class[mor_off[k] + g.compose(a, b)];
        auto [it, added] = table.emplace(key, value);
        if (!added && it->second != value)
          throw Error("filtered colimit: composition depends on representatives");
      }
  }
  auto category = FiniteCategory::generate(
      object_count, std::move(arrows), std::move(identities),
      [&](MorphismIndex f, MorphismIndex g) {
        auto it = table.find((std::uint64_t{f} << 32) | g);
        return it == table.end() ? npos : it->second;
      },
      budget);
  r.groupoid = Groupoid(std::move(category), std::move(inverse));
  for (ObjectIndex i = 0; i < n; ++i) {
    const auto& g = d.vertex(i);
    std::vector<ObjectIndex> om(g.object_count());
    std::vector<MorphismIndex> mm(g.morphism_count());
    for (ObjectIndex x = 0; x < om.size(); ++x) om[x] = obj_class[obj_off[i] + x];
    for (MorphismIndex m = 0; m < mm.size(); ++m) mm[m] = mor_class[mor_off[i] + m];
    r.cocone.emplace_back(g.category(), r.groupoid.category(), std::move(om), std::move(mm));
  }
  return r;
}

CatFunctor colim_map(const DiagramMap& f, const FilteredColimit& source,
                     const FilteredColimit& target) {
  const auto& s = source.groupoid;
  std::vector<ObjectIndex> objects(s.object_count());
  std::vector<MorphismIndex> morphisms(s.morphism_count());
  for (ObjectIndex c = 0; c < objects.size(); ++c) {
    const auto [i, x] = source.object_reps[c];
    objects[c] = target.object_class(i, f.component(i).object(x));
  }
  for (MorphismIndex c = 0; c < morphisms.size(); ++c) {
    const auto [i, m] = source.morphism_reps[c];
    morphisms[c] = target.morphism_class(i, f.component(i).morphism(m));
  }
  return CatFunctor(s.category(), target.groupoid.category(), std::move(objects),
                    std::move(morphisms));
}

MappingDiagram mapping_diagram(const FiniteCategory& k, const DiagramFunctor& d, Budget budget) {
  MappingDiagram r;
  const auto& index = d.index();
  for (ObjectIndex i = 0; i < index.object_count(); ++i)
    r.maps.push_back(map_category(k, d.vertex(i), budget));
  std::vector<Groupoid> vertices;
  for (const auto& m : r.maps) vertices.push_back(m.groupoid());
  std::vector<CatFunctor> edges;
  for (MorphismIndex u = 0; u < index.morphism_count(); ++u)
    edges.push_back(postcompose(d.edge(u), r.maps[index.src(u)], r.maps[index.dst(u)]));
  r.diagram = DiagramFunctor(index, std::move(vertices), std::move(edges));
  return r;
}

namespace {

// Fills a table entry from one class member, or checks it against the
// value another member already gave.
void settle(std::vector<std::uint32_t>& table, std::uint32_t c, std::uint32_t value,
            const char* what) {
  if (value == npos) throw Error(std::string(what) + ": image not found");
  if (table[c] == npos)
    table[c] = value;
  else if (table[c] != value)
    throw Error(std::string(what) + ": members of one class disagree");
}

}  // namespace

MapColimComparison map_colim_compare(const FiniteCategory& k, const DiagramFunctor& d,
                                     Budget budget) {
  MapColimComparison r;
  r.colim = filtered_colimit(d, budget);
  r.mapping = mapping_diagram(k, d, budget);
  r.left = filtered_colimit(r.mapping.diagram, budget);
  r.right = map_category(k, r.colim.groupoid, budget);
  const auto& lg = r.left.groupoid;
  std::vector<ObjectIndex> objects(lg.object_count(), npos);
  std::vector<MorphismIndex> morphisms(lg.morphism_count(), npos);
  std::vector<std::uint32_t> key;
  std::vector<MorphismIndex> comps;
  for (ObjectIndex i = 0; i < d.index().object_count(); ++i) {
    const auto& maps = r.mapping.maps[i];
    const auto& cocone = r.colim.cocone[i];
    for (ObjectIndex f = 0; f < maps.functor_count(); ++f) {
      key.clear();
      for (auto x : maps.object_map(f)) key.push_back(cocone.object(x));
      for (auto m : maps.morphism_map(f)) key.push_back(cocone.morphism(m));
      settle(objects, r.left.object_class(i, f), r.right.find_functor(key), "map/colim comparison");
    }
    const auto& mg = maps.groupoid();
    for (MorphismIndex t = 0; t < mg.morphism_count(); ++t) {
      comps.clear();
      for (auto c : maps.components(t)) comps.push_back(cocone.morphism(c));
      const auto src = objects[r.left.object_class(i, mg.src(t))];
      settle(morphisms, r.left.morphism_class(i, t), r.right.find_transformation(src, comps),
             "map/colim comparison");
    }
  }
  r.comparison = CatFunctor(lg.category(), r.right.groupoid().category(), std::move(objects),
                            std::move(morphisms));
  r.is_isomorphism = is_isomorphism(r.comparison);
  return r;
}

ColimHolimComparison colim_holim_compare(const DiagramFunctor& d, const ProductCategory& pc,
                                         Budget budget) {
  ColimHolimComparison r;
  const auto& I = pc.left;
  const auto& G = pc.right;
  r.inner = holim_over_second(d, pc, budget);
  r.left = filtered_colimit(r.inner.diagram, budget);

  std::vector<DiagramFunctor> slices;
  for (ObjectIndex g = 0; g < G.object_count(); ++g) {
    slices.push_back(slice_diagram(d, pc, true, g));
    r.slices.push_back(filtered_colimit(slices.back(), budget));
  }
  std::vector<Groupoid> vertices;
  for (const auto& c : r.slices) vertices.push_back(c.groupoid);
  std::vector<CatFunctor> edges;
  for (MorphismIndex m = 0; m < G.morphism_count(); ++m) {
    std::vector<CatFunctor> comps;
    for (ObjectIndex i = 0; i < I.object_count(); ++i)
      comps.push_back(d.edge(pc.morphism(I.identity(i), m)));
    DiagramMap along(slices[G.src(m)], slices[G.dst(m)], std::move(comps));
    edges.push_back(colim_map(along, r.slices[G.src(m)], r.slices[G.dst(m)]));
  }
  r.colim_diagram = DiagramFunctor(G, std::move(vertices), std::move(edges));
  r.right = holim(r.colim_diagram, budget);

  const auto& lg = r.left.groupoid;
  std::vector<ObjectIndex> objects(lg.object_count(), npos);
  std::vector<MorphismIndex> morphisms(lg.morphism_count(), npos);
  for (ObjectIndex i = 0; i < I.object_count(); ++i) {
    std::vector<CatFunctor> comps;
    for (ObjectIndex g = 0; g < G.object_count(); ++g) comps.push_back(r.slices[g].cocone[i]);
    DiagramMap to_colim(r.inner.slices[i], r.colim_diagram, std::move(comps));
    auto f = induced_map(to_colim, r.inner.limits[i], r.right);
    const auto& hi = r.inner.limits[i].groupoid();
    for (ObjectIndex x = 0; x < hi.object_count(); ++x)
      settle(objects, r.left.object_class(i, x), f.object(x), "colim/holim comparison");
    for (MorphismIndex m = 0; m < hi.morphism_count(); ++m)
      settle(morphisms, r.left.morphism_class(i, m), f.morphism(m), "colim/holim comparison");
  }
  r.comparison = CatFunctor(lg.category(), r.right.groupoid().category(), std::move(objects),
                            std::move(morphisms));
  r.is_isomorphism = is_isomorphism(r.comparison);
  return r;
}

ColimProductComparison colim_product_compare(const std::vector<DiagramFunctor>& ds,
                                             Budget budget) {
  if (ds.empty()) throw ShapeMismatch("colim/product comparison needs at least one diagram");
  const auto& index = ds[0].index();
  for (const auto& d : ds)
    if (!d.index().same_tables(index) && !(d.index() == index))
      throw ShapeMismatch("colim/product comparison: diagrams have different indices");
  ColimProductComparison r;
  for (const auto& d : ds) r.factors.push_back(filtered_colimit(d, budget));
  std::vector<Groupoid> vertices;
  for (ObjectIndex i = 0; i < index.object_count(); ++i) {
    std::vector<Groupoid> parts;
    for (const auto& d : ds) parts.push_back(d.vertex(i));
    r.products.push_back(product_groupoid(parts, budget));
    vertices.push_back(r.products.back().groupoid());
  }
  std::vector<CatFunctor> edges;
  for (MorphismIndex u = 0; u < index.morphism_count(); ++u) {
    std::vector<CatFunctor> parts;
    for (const auto& d : ds) parts.push_back(d.edge(u));
    edges.push_back(product_map(parts, r.products[index.src(u)], r.products[index.dst(u)]));
  }
  r.product_diagram = DiagramFunctor(index, std::move(vertices), std::move(edges));
  r.left = filtered_colimit(r.product_diagram, budget);
  std::vector<Groupoid> colims;
  for (const auto& f : r.factors) colims.push_back(f.groupoid);
  r.right = product_groupoid(colims, budget);

  const auto& lg = r.left.groupoid;
  std::vector<ObjectIndex> objects(lg.object_count(), npos);
  std::vector<MorphismIndex> morphisms(lg.morphism_count(), npos);
  std::vector<std::uint32_t> key(ds.size());
  for (ObjectIndex i = 0; i < index.object_count(); ++i) {
    const auto& p = r.products[i];
    const auto& pg = p.groupoid();
    for (ObjectIndex x = 0; x < pg.object_count(); ++x) {
      auto tuple = p.keyed.object_key(x);
      for (std::size_t k = 0; k < ds.size(); ++k) key[k] = r.factors[k].object_class(i, tuple[k]);
      settle(objects, r.left.object_class(i, x), r.right.keyed.find_object(key),
             "colim/product comparison");
    }
    for (MorphismIndex m = 0; m < pg.morphism_count(); ++m) {
      auto comps = p.keyed.components(m);
      for (std::size_t k = 0; k < ds.size(); ++k)
        key[k] = r.factors[k].morphism_class(i, comps[k]);
      const auto src = objects[r.left.object_class(i, pg.src(m))];
      settle(morphisms, r.left.morphism_class(i, m), r.right.keyed.find_morphism(src, key),
             "colim/product comparison");
    }
  }
  r.comparison = CatFunctor(lg.category(), r.right.groupoid().category(), std::move(objects),
                            std::move(morphisms));
  r.is_isomorphism = is_isomorphism(r.comparison);
  return r;
}

}  // namespace grpdlim
