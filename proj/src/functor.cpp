#include "grpdlim/functor.hpp"

#include <algorithm>

namespace grpdlim {

ValidationReport CatFunctor::check(const FiniteCategory& source, const FiniteCategory& target,
                                   std::span<const ObjectIndex> object_map,
                                   std::span<const MorphismIndex> morphism_map) {
  ValidationReport report;
  if (object_map.size() != source.object_count()) {
    report.add("functor-object-count", {object_map.size(), source.object_count()});
    return report;
  }
  if (morphism_map.size() != source.morphism_count()) {
    report.add("functor-morphism-count", {morphism_map.size(), source.morphism_count()});
    return report;
  }
  for (std::size_t x = 0; x < object_map.size(); ++x)
    if (object_map[x] >= target.object_count()) report.add("functor-object-range", {x});
  for (std::size_t m = 0; m < morphism_map.size(); ++m)
    if (morphism_map[m] >= target.morphism_count()) report.add("functor-morphism-range", {m});
  if (!report.ok()) return report;

  for (std::size_t m = 0; m < morphism_map.size(); ++m) {
    const auto mi = static_cast<MorphismIndex>(m);
    const auto image = morphism_map[m];
    if (target.src(image) != object_map[source.src(mi)] ||
        target.dst(image) != object_map[source.dst(mi)])
      report.add("functor-typing", {m}, "image has the wrong endpoints");
  }
  for (std::size_t x = 0; x < object_map.size(); ++x) {
    const auto xi = static_cast<ObjectIndex>(x);
    if (morphism_map[source.identity(xi)] != target.identity(object_map[x]))
      report.add("functor-identity", {x}, "identity not preserved");
  }
  if (!report.ok()) return report;
  for (std::size_t f = 0; f < morphism_map.size(); ++f) {
    const auto fi = static_cast<MorphismIndex>(f);
    for (MorphismIndex g : source.out(source.dst(fi))) {
      if (morphism_map[source.compose(fi, g)] != target.compose(morphism_map[f], morphism_map[g]))
        report.add("functor-composition", {f, g}, "F(f;g) != F(f);F(g)");
    }
  }
  return report;
}

CatFunctor::CatFunctor() : data_(std::make_shared<const Data>()) {}

CatFunctor::CatFunctor(FiniteCategory source, FiniteCategory target,
                       std::vector<ObjectIndex> object_map,
                       std::vector<MorphismIndex> morphism_map) {
  auto report = check(source, target, object_map, morphism_map);
  if (!report.ok()) throw InvalidStructure("invalid functor", std::move(report));
  data_ = std::make_shared<const Data>(Data{std::move(source), std::move(target),
                                            std::move(object_map), std::move(morphism_map)});
}

CatFunctor CatFunctor::identity(const FiniteCategory& c) {
  std::vector<ObjectIndex> objects(c.object_count());
  std::vector<MorphismIndex> morphisms(c.morphism_count());
  for (std::size_t i = 0; i < objects.size(); ++i) objects[i] = static_cast<ObjectIndex>(i);
  for (std::size_t i = 0; i < morphisms.size(); ++i) morphisms[i] = static_cast<MorphismIndex>(i);
  return CatFunctor(c, c, std::move(objects), std::move(morphisms));
}

CatFunctor CatFunctor::constant(const FiniteCategory& source, const FiniteCategory& target,
                                ObjectIndex x) {
  return CatFunctor(source, target, std::vector<ObjectIndex>(source.object_count(), x),
                    std::vector<MorphismIndex>(source.morphism_count(), target.identity(x)));
}

bool CatFunctor::is_identity() const {
  if (!(source() == target())) return false;
  for (std::size_t i = 0; i < object_map().size(); ++i)
    if (object_map()[i] != i) return false;
  for (std::size_t i = 0; i < morphism_map().size(); ++i)
    if (morphism_map()[i] != i) return false;
  return true;
}

bool operator==(const CatFunctor& a, const CatFunctor& b) {
  if (a.data_ == b.data_) return true;
  return a.object_map() == b.object_map() && a.morphism_map() == b.morphism_map() &&
         a.source() == b.source() && a.target() == b.target();
}

CatFunctor then(const CatFunctor& first, const CatFunctor& second) {
  if (!(first.target() == second.source()))
    throw ShapeMismatch("cannot compose functors: target of the first is not the source of the second");
  std::vector<ObjectIndex> objects(first.object_map().size());
  std::vector<MorphismIndex> morphisms(first.morphism_map().size());
  for (std::size_t i = 0; i < objects.size(); ++i) objects[i] = second.object(first.object(i));
  for (std::size_t i = 0; i < morphisms.size(); ++i)
    morphisms[i] = second.morphism(first.morphism(i));
  return CatFunctor(first.source(), second.target(), std::move(objects), std::move(morphisms));
}

bool is_isomorphism(const CatFunctor& f) {
  const auto& t = f.target();
  if (f.source().object_count() != t.object_count() ||
      f.source().morphism_count() != t.morphism_count())
    return false;
  std::vector<bool> hit(t.object_count(), false);
  for (auto x : f.object_map()) {
    if (hit[x]) return false;
    hit[x] = true;
  }
  hit.assign(t.morphism_count(), false);
  for (auto m : f.morphism_map()) {
    if (hit[m]) return false;
    hit[m] = true;
  }
  return true;
}

ValidationReport NatTransformation::check(const CatFunctor& from, const CatFunctor& to,
                                          std::span<const MorphismIndex> components) {
  ValidationReport report;
  if (!(from.source() == to.source()) || !(from.target() == to.target())) {
    report.add("transformation-shape", {}, "functors do not share source and target");
    return report;
  }
  const auto& src = from.source();
  const auto& tgt = from.target();
  if (components.size() != src.object_count()) {
    report.add("transformation-count", {components.size(), src.object_count()});
    return report;
  }
  for (std::size_t x = 0; x < components.size(); ++x) {
    const auto c = components[x];
    if (c >= tgt.morphism_count() || tgt.src(c) != from.object(x) || tgt.dst(c) != to.object(x))
      report.add("transformation-typing", {x}, "component must run F(x) -> G(x)");
  }
  if (!report.ok()) return report;
  for (std::size_t k = 0; k < src.morphism_count(); ++k) {
    const auto ki = static_cast<MorphismIndex>(k);
    const auto x = src.src(ki);
    const auto y = src.dst(ki);
    if (tgt.compose(from.morphism(ki), components[y]) !=
        tgt.compose(components[x], to.morphism(ki)))
      report.add("naturality", {k}, "naturality square does not commute");
  }
  return report;
}

NatTransformation::NatTransformation(CatFunctor from, CatFunctor to,
                                     std::vector<MorphismIndex> components)
    : from_(std::move(from)), to_(std::move(to)), components_(std::move(components)) {
  auto report = check(from_, to_, components_);
  if (!report.ok()) throw InvalidStructure("invalid natural transformation", std::move(report));
}

}  // namespace grpdlim
