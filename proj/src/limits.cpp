#include "grpdlim/limits.hpp"

#include <numeric>

namespace grpdlim {

namespace {

bool same_category(const FiniteCategory& a, const FiniteCategory& b) {
  return a.same_tables(b) || a == b;
}

// F ; G and H ; K agree as tables.
bool same_composite(const CatFunctor& f, const CatFunctor& g, const CatFunctor& h,
                    const CatFunctor& k) {
  for (std::size_t x = 0; x < f.object_map().size(); ++x)
    if (g.object(f.object(x)) != k.object(h.object(x))) return false;
  for (std::size_t m = 0; m < f.morphism_map().size(); ++m)
    if (g.morphism(f.morphism(m)) != k.morphism(h.morphism(m))) return false;
  return true;
}

}  // namespace

ValidationReport DiagramFunctor::check(const FiniteCategory& index,
                                       const std::vector<Groupoid>& vertices,
                                       const std::vector<CatFunctor>& edges) {
  ValidationReport report;
  if (vertices.size() != index.object_count()) {
    report.add("diagram-vertex-count", {vertices.size(), index.object_count()});
    return report;
  }
  if (edges.size() != index.morphism_count()) {
    report.add("diagram-edge-count", {edges.size(), index.morphism_count()});
    return report;
  }
  for (MorphismIndex m = 0; m < edges.size(); ++m) {
    if (!same_category(edges[m].source(), vertices[index.src(m)]) ||
        !same_category(edges[m].target(), vertices[index.dst(m)]))
      report.add("diagram-edge-typing", {m}, "edge does not run between its vertices");
  }
  if (!report.ok()) return report;
  for (ObjectIndex a = 0; a < vertices.size(); ++a)
    if (!edges[index.identity(a)].is_identity())
      report.add("diagram-identity", {a}, "identity edge is not the identity functor");
  for (MorphismIndex f = 0; f < edges.size(); ++f)
    for (MorphismIndex g : index.out(index.dst(f))) {
      const auto& c = edges[index.compose(f, g)];
      const auto& ef = edges[f];
      const auto& eg = edges[g];
      bool ok = true;
      for (std::size_t x = 0; x < ef.object_map().size() && ok; ++x)
        ok = eg.object(ef.object(x)) == c.object(x);
      for (std::size_t m = 0; m < ef.morphism_map().size() && ok; ++m)
        ok = eg.morphism(ef.morphism(m)) == c.morphism(m);
      if (!ok) report.add("diagram-composition", {f, g}, "X(f;g) != X(f);X(g)");
    }
  return report;
}

DiagramFunctor::DiagramFunctor(FiniteCategory index, std::vector<Groupoid> vertices,
                               std::vector<CatFunctor> edges)
    : index_(std::move(index)), vertices_(std::move(vertices)), edges_(std::move(edges)) {
  auto report = check(index_, vertices_, edges_);
  if (!report.ok()) throw InvalidStructure("invalid diagram", std::move(report));
}

DiagramFunctor DiagramFunctor::constant(const FiniteCategory& index, const Groupoid& g) {
  auto id = CatFunctor::identity(g.category());
  return DiagramFunctor(index, std::vector<Groupoid>(index.object_count(), g),
                        std::vector<CatFunctor>(index.morphism_count(), id));
}

ValidationReport DiagramMap::check(const DiagramFunctor& source, const DiagramFunctor& target,
                                   const std::vector<CatFunctor>& components) {
  ValidationReport report;
  if (!same_category(source.index(), target.index())) {
    report.add("diagram-map-index", {}, "diagrams have different index categories");
    return report;
  }
  const auto& index = source.index();
  if (components.size() != index.object_count()) {
    report.add("diagram-map-count", {components.size(), index.object_count()});
    return report;
  }
  for (ObjectIndex a = 0; a < components.size(); ++a)
    if (!same_category(components[a].source(), source.vertex(a)) ||
        !same_category(components[a].target(), target.vertex(a)))
      report.add("diagram-map-typing", {a}, "component does not run X(a) -> Y(a)");
  if (!report.ok()) return report;
  for (MorphismIndex m = 0; m < index.morphism_count(); ++m)
    if (!same_composite(source.edge(m), components[index.dst(m)], components[index.src(m)],
                        target.edge(m)))
      report.add("diagram-map-naturality", {m}, "X(m);f != f;Y(m)");
  return report;
}

DiagramMap::DiagramMap(DiagramFunctor source, DiagramFunctor target,
                       std::vector<CatFunctor> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  auto report = check(source_, target_, components_);
  if (!report.ok()) throw InvalidStructure("invalid diagram map", std::move(report));
}

DiagramMap DiagramMap::identity(const DiagramFunctor& d) {
  std::vector<CatFunctor> comps;
  for (const auto& v : d.vertices()) comps.push_back(CatFunctor::identity(v.category()));
  return DiagramMap(d, d, std::move(comps));
}

DiagramMap then(const DiagramMap& first, const DiagramMap& second) {
  std::vector<CatFunctor> comps;
  for (std::size_t a = 0; a < first.components().size(); ++a)
    comps.push_back(then(first.component(a), second.component(a)));
  return DiagramMap(first.source(), second.target(), std::move(comps));
}

namespace {

class TupleSearch {
 public:
  TupleSearch(const std::vector<Groupoid>& factors,
              const std::vector<TupleConstraint>& constraints, KeyedGroupoidBuilder& builder)
      : factors_(factors), constraints_(constraints), builder_(builder),
        at_(factors.size()), tuple_(factors.size()), eta_(factors.size()),
        image_(factors.size()) {
    for (std::size_t c = 0; c < constraints.size(); ++c) {
      const auto& k = constraints[c];
      if (k.first >= factors.size() || k.second >= factors.size())
        throw Error("tuple constraint names a missing factor");
      at_[std::max(k.first, k.second)].push_back(c);
    }
  }

  void objects(std::size_t i) {
    if (i == factors_.size()) {
      builder_.add_object(tuple_);
      return;
    }
    for (ObjectIndex x = 0; x < factors_[i].object_count(); ++x) {
      builder_.meter().charge();
      tuple_[i] = x;
      if (objects_ok(i)) objects(i + 1);
    }
  }

  void morphisms(ObjectIndex source) {
    source_ = source;
    auto key = builder_.object_key(source);
    tuple_.assign(key.begin(), key.end());
    morphisms_from(0);
  }

 private:
  bool objects_ok(std::size_t i) const {
    for (auto c : at_[i]) {
      const auto& k = constraints_[c];
      if (k.first_objects[tuple_[k.first]] != k.second_objects[tuple_[k.second]]) return false;
    }
    return true;
  }

  bool morphisms_ok(std::size_t i) const {
    for (auto c : at_[i]) {
      const auto& k = constraints_[c];
      if (k.first_morphisms[eta_[k.first]] != k.second_morphisms[eta_[k.second]]) return false;
    }
    return true;
  }

  void morphisms_from(std::size_t i) {
    if (i == factors_.size()) {
      for (std::size_t j = 0; j < factors_.size(); ++j) image_[j] = factors_[j].dst(eta_[j]);
      const auto target = builder_.find_object(image_);
      if (target == npos) throw Error("tuple limit constraints are not functorial");
      builder_.add_morphism(source_, target, eta_);
      return;
    }
    for (MorphismIndex m : factors_[i].out(tuple_[i])) {
      builder_.meter().charge();
      eta_[i] = m;
      if (morphisms_ok(i)) morphisms_from(i + 1);
    }
  }

  const std::vector<Groupoid>& factors_;
  const std::vector<TupleConstraint>& constraints_;
  KeyedGroupoidBuilder& builder_;
  std::vector<std::vector<std::size_t>> at_;
  std::vector<std::uint32_t> tuple_;
  std::vector<MorphismIndex> eta_;
  std::vector<std::uint32_t> image_;
  ObjectIndex source_ = 0;
};

}  // namespace

KeyedGroupoid tuple_limit(const std::vector<Groupoid>& factors,
                          const std::vector<TupleConstraint>& constraints, Budget budget,
                          const std::string& stage) {
  KeyedGroupoidBuilder builder(factors.size(), factors, budget, stage);
  double estimate = 1;
  for (const auto& f : factors) estimate *= static_cast<double>(f.object_count());
  builder.meter().set_estimate(estimate);
  TupleSearch search(factors, constraints, builder);
  search.objects(0);
  const auto n = static_cast<ObjectIndex>(builder.object_count());
  for (ObjectIndex x = 0; x < n; ++x) search.morphisms(x);
  return std::move(builder).finish();
}

CatFunctor tuple_projection(const KeyedGroupoid& tuples, std::size_t factor) {
  const auto& g = tuples.groupoid();
  std::vector<ObjectIndex> objects(g.object_count());
  std::vector<MorphismIndex> morphisms(g.morphism_count());
  for (ObjectIndex x = 0; x < objects.size(); ++x) objects[x] = tuples.object_key(x)[factor];
  for (MorphismIndex m = 0; m < morphisms.size(); ++m)
    morphisms[m] = tuples.components(m)[factor];
  return CatFunctor(g.category(), tuples.slots()[factor].category(), std::move(objects),
                    std::move(morphisms));
}

ProductGroupoid product_groupoid(const std::vector<Groupoid>& factors, Budget budget) {
  ProductGroupoid p{tuple_limit(factors, {}, budget, "product"), {}};
  for (std::size_t i = 0; i < factors.size(); ++i)
    p.projections.push_back(tuple_projection(p.keyed, i));
  return p;
}

CatFunctor product_map(const std::vector<CatFunctor>& parts, const ProductGroupoid& from,
                       const ProductGroupoid& to) {
  const auto& g = from.groupoid();
  const std::size_t k = parts.size();
  std::vector<ObjectIndex> objects(g.object_count());
  std::vector<MorphismIndex> morphisms(g.morphism_count());
  std::vector<std::uint32_t> key(k);
  for (ObjectIndex x = 0; x < objects.size(); ++x) {
    auto src = from.keyed.object_key(x);
    for (std::size_t i = 0; i < k; ++i) key[i] = parts[i].object(src[i]);
    objects[x] = to.keyed.find_object(key);
  }
  for (MorphismIndex m = 0; m < morphisms.size(); ++m) {
    auto c = from.keyed.components(m);
    for (std::size_t i = 0; i < k; ++i) key[i] = parts[i].morphism(c[i]);
    morphisms[m] = to.keyed.find_morphism(objects[g.src(m)], key);
  }
  return CatFunctor(g.category(), to.groupoid().category(), std::move(objects),
                    std::move(morphisms));
}

Equalizer equalizer(const CatFunctor& f, const CatFunctor& g, Budget budget) {
  if (!same_category(f.source(), g.source()) || !same_category(f.target(), g.target()))
    throw ShapeMismatch("equalizer: functors do not share source and target");
  Groupoid source(f.source());
  TupleConstraint c{0, 0, f.object_map(), g.object_map(), f.morphism_map(), g.morphism_map()};
  Equalizer e{tuple_limit({source}, {c}, budget, "equalizer"), {}};
  e.inclusion = tuple_projection(e.keyed, 0);
  return e;
}

StrictLimit strict_limit(const DiagramFunctor& d, Budget budget) {
  const auto& index = d.index();
  std::vector<TupleConstraint> constraints;
  for (MorphismIndex m = 0; m < index.morphism_count(); ++m) {
    if (index.is_identity(m)) continue;
    const auto& e = d.edge(m);
    const auto& target = d.vertex(index.dst(m));
    TupleConstraint c;
    c.first = index.src(m);
    c.second = index.dst(m);
    c.first_objects = e.object_map();
    c.first_morphisms = e.morphism_map();
    c.second_objects.resize(target.object_count());
    c.second_morphisms.resize(target.morphism_count());
    std::iota(c.second_objects.begin(), c.second_objects.end(), 0u);
    std::iota(c.second_morphisms.begin(), c.second_morphisms.end(), 0u);
    constraints.push_back(std::move(c));
  }
  StrictLimit l{tuple_limit(d.vertices(), constraints, budget, "strict limit"), {}};
  for (std::size_t a = 0; a < index.object_count(); ++a)
    l.projections.push_back(tuple_projection(l.keyed, a));
  return l;
}

}  // namespace grpdlim
