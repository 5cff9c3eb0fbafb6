#pragma once

#include <memory>
#include <span>
#include <vector>

#include "grpdlim/category.hpp"

namespace grpdlim {

/// A strict functor between finite categories, stored as its object and
/// morphism tables. Construction checks functoriality exhaustively.
class CatFunctor {
 public:
  /// The empty functor between empty categories.
  CatFunctor();
  CatFunctor(FiniteCategory source, FiniteCategory target, std::vector<ObjectIndex> object_map,
             std::vector<MorphismIndex> morphism_map);

  static ValidationReport check(const FiniteCategory& source, const FiniteCategory& target,
                                std::span<const ObjectIndex> object_map,
                                std::span<const MorphismIndex> morphism_map);
  static CatFunctor identity(const FiniteCategory& c);
  /// The functor collapsing everything onto object `x` and its identity.
  static CatFunctor constant(const FiniteCategory& source, const FiniteCategory& target,
                             ObjectIndex x);

  const FiniteCategory& source() const { return data_->source; }
  const FiniteCategory& target() const { return data_->target; }
  ObjectIndex object(ObjectIndex x) const { return data_->object_map[x]; }
  MorphismIndex morphism(MorphismIndex m) const { return data_->morphism_map[m]; }
  const std::vector<ObjectIndex>& object_map() const { return data_->object_map; }
  const std::vector<MorphismIndex>& morphism_map() const { return data_->morphism_map; }

  bool is_identity() const;

  friend bool operator==(const CatFunctor& a, const CatFunctor& b);

 private:
  struct Data {
    FiniteCategory source;
    FiniteCategory target;
    std::vector<ObjectIndex> object_map;
    std::vector<MorphismIndex> morphism_map;
  };
  std::shared_ptr<const Data> data_;
};

/// Diagrammatic composite: apply `first`, then `second`.
CatFunctor then(const CatFunctor& first, const CatFunctor& second);

/// Bijective on objects and on morphisms.
bool is_isomorphism(const CatFunctor& f);

/// A natural transformation between two functors with common source and
/// target. `component(x)` runs from F(x) to G(x).
class NatTransformation {
 public:
  NatTransformation(CatFunctor from, CatFunctor to, std::vector<MorphismIndex> components);

  static ValidationReport check(const CatFunctor& from, const CatFunctor& to,
                                std::span<const MorphismIndex> components);

  const CatFunctor& from() const { return from_; }
  const CatFunctor& to() const { return to_; }
  MorphismIndex component(ObjectIndex x) const { return components_[x]; }
  const std::vector<MorphismIndex>& components() const { return components_; }

 private:
  CatFunctor from_;
  CatFunctor to_;
  std::vector<MorphismIndex> components_;
};

}  // namespace grpdlim
