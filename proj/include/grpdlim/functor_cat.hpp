#pragma once

#include <span>
#include <vector>

#include "grpdlim/constructions.hpp"
#include "grpdlim/keyed.hpp"

namespace grpdlim {

/// Map(K, G): every functor K -> G as an object, every natural
/// transformation as a morphism.
///
/// Functors are ordered lexicographically on (object_map, morphism_map);
/// the transformations out of a functor F are ordered lexicographically on
/// their component tuples. A functor is keyed by its object map followed by
/// its morphism map; a transformation by its components.
class FunctorGroupoid {
 public:
  FunctorGroupoid() = default;
  FunctorGroupoid(FiniteCategory source, Groupoid target, KeyedGroupoid keyed)
      : source_(std::move(source)), target_(std::move(target)), keyed_(std::move(keyed)) {}

  const FiniteCategory& source() const { return source_; }
  const Groupoid& target() const { return target_; }
  const Groupoid& groupoid() const { return keyed_.groupoid(); }
  operator const Groupoid&() const { return keyed_.groupoid(); }
  const KeyedGroupoid& keyed() const { return keyed_; }

  std::size_t functor_count() const { return groupoid().object_count(); }
  std::span<const ObjectIndex> object_map(ObjectIndex f) const {
    return keyed_.object_key(f).first(source_.object_count());
  }
  std::span<const MorphismIndex> morphism_map(ObjectIndex f) const {
    return keyed_.object_key(f).subspan(source_.object_count());
  }
  std::span<const MorphismIndex> components(MorphismIndex m) const {
    return keyed_.components(m);
  }

  CatFunctor functor(ObjectIndex f) const;
  NatTransformation transformation(MorphismIndex m) const;

  /// `key` is object_map followed by morphism_map.
  ObjectIndex find_functor(std::span<const std::uint32_t> key) const {
    return keyed_.find_object(key);
  }
  ObjectIndex find_functor(const CatFunctor& f) const;
  MorphismIndex find_transformation(ObjectIndex from,
                                    std::span<const MorphismIndex> components) const {
    return keyed_.find_morphism(from, components);
  }

 private:
  FiniteCategory source_;
  Groupoid target_;
  KeyedGroupoid keyed_;
};

/// Every functor K -> G, by backtracking: objects first (pruned by
/// connected components of G), then morphisms lowest-unassigned-first with
/// composites propagated to a fixpoint. Lexicographic order.
std::vector<std::vector<std::uint32_t>> enumerate_functor_keys(const FiniteCategory& k,
                                                               const Groupoid& g,
                                                               Budget budget = {});

/// Map(K, G). Throws BudgetExceeded when enumeration runs past the budget.
FunctorGroupoid map_category(const FiniteCategory& k, const Groupoid& g, Budget budget = {});

/// F ↦ f ; F and η ↦ (η_{f(x)})_x, for f: K' -> K.
CatFunctor precompose(const CatFunctor& f, const FunctorGroupoid& from, const FunctorGroupoid& to);
/// F ↦ F ; h and η ↦ (h(η_x))_x, for h: G -> H.
CatFunctor postcompose(const CatFunctor& h, const FunctorGroupoid& from,
                       const FunctorGroupoid& to);

/// Map(K × H, G) ≅ Map(K, Map(H, G)) with both directions.
struct ExponentialIso {
  ProductCategory product;
  FunctorGroupoid whole;  // Map(K × H, G)
  FunctorGroupoid inner;  // Map(H, G)
  FunctorGroupoid outer;  // Map(K, Map(H, G))
  CatFunctor forward;
  CatFunctor backward;
};

ExponentialIso exponential_iso(const FiniteCategory& k, const FiniteCategory& h,
                               const Groupoid& g, Budget budget = {});

}  // namespace grpdlim
