#pragma once

#include <vector>

#include "grpdlim/constructions.hpp"
#include "grpdlim/keyed.hpp"

namespace grpdlim {

/// A strict functor from a finite index category into groupoids.
class DiagramFunctor {
 public:
  DiagramFunctor() = default;
  /// Checks typing, identities and composition of the edges exhaustively.
  DiagramFunctor(FiniteCategory index, std::vector<Groupoid> vertices,
                 std::vector<CatFunctor> edges);

  static ValidationReport check(const FiniteCategory& index, const std::vector<Groupoid>& vertices,
                                const std::vector<CatFunctor>& edges);
  static DiagramFunctor constant(const FiniteCategory& index, const Groupoid& g);

  const FiniteCategory& index() const { return index_; }
  const Groupoid& vertex(ObjectIndex a) const { return vertices_[a]; }
  const CatFunctor& edge(MorphismIndex m) const { return edges_[m]; }
  const std::vector<Groupoid>& vertices() const { return vertices_; }
  const std::vector<CatFunctor>& edges() const { return edges_; }

 private:
  FiniteCategory index_;
  std::vector<Groupoid> vertices_;
  std::vector<CatFunctor> edges_;
};

/// A strict natural transformation between diagrams over one index.
class DiagramMap {
 public:
  DiagramMap(DiagramFunctor source, DiagramFunctor target, std::vector<CatFunctor> components);

  static ValidationReport check(const DiagramFunctor& source, const DiagramFunctor& target,
                                const std::vector<CatFunctor>& components);
  static DiagramMap identity(const DiagramFunctor& d);

  const DiagramFunctor& source() const { return source_; }
  const DiagramFunctor& target() const { return target_; }
  const CatFunctor& component(ObjectIndex a) const { return components_[a]; }
  const std::vector<CatFunctor>& components() const { return components_; }

 private:
  DiagramFunctor source_;
  DiagramFunctor target_;
  std::vector<CatFunctor> components_;
};

/// Componentwise composite: apply `first`, then `second`.
DiagramMap then(const DiagramMap& first, const DiagramMap& second);

/// Joint condition between two factors of a tuple limit: a tuple survives
/// when first_objects[x_first] == second_objects[x_second], and a morphism
/// tuple when the same holds for the morphism tables. `first` may equal
/// `second`.
struct TupleConstraint {
  std::size_t first = 0;
  std::size_t second = 0;
  std::vector<std::uint32_t> first_objects;
  std::vector<std::uint32_t> second_objects;
  std::vector<std::uint32_t> first_morphisms;
  std::vector<std::uint32_t> second_morphisms;
};

/// The subgroupoid of the product of `factors` cut out by the constraints,
/// enumerated depth-first in lexicographic tuple order with each constraint
/// tested as soon as both of its factors are assigned. The constraint
/// tables must come from functors, so the cut-out part is a groupoid.
/// Object keys are the factor objects; morphism components the factor
/// morphisms.
KeyedGroupoid tuple_limit(const std::vector<Groupoid>& factors,
                          const std::vector<TupleConstraint>& constraints, Budget budget,
                          const std::string& stage);

/// Projection of a keyed tuple groupoid onto one factor.
CatFunctor tuple_projection(const KeyedGroupoid& tuples, std::size_t factor);

struct ProductGroupoid {
  KeyedGroupoid keyed;
  std::vector<CatFunctor> projections;
  const Groupoid& groupoid() const { return keyed.groupoid(); }
};

/// Objects and morphisms are tuples in lexicographic order; the empty
/// product is the terminal groupoid.
ProductGroupoid product_groupoid(const std::vector<Groupoid>& factors, Budget budget = {});

/// The functor induced on products by one functor per factor.
CatFunctor product_map(const std::vector<CatFunctor>& parts, const ProductGroupoid& from,
                       const ProductGroupoid& to);

struct Equalizer {
  KeyedGroupoid keyed;  // keyed by the source object
  CatFunctor inclusion;
  const Groupoid& groupoid() const { return keyed.groupoid(); }
};

/// Objects x with f(x) = g(x) and morphisms m with f(m) = g(m), as indices.
Equalizer equalizer(const CatFunctor& f, const CatFunctor& g, Budget budget = {});

struct StrictLimit {
  KeyedGroupoid keyed;  // tuples (x_α) over the index objects
  std::vector<CatFunctor> projections;
  const Groupoid& groupoid() const { return keyed.groupoid(); }
};

/// Tuples (x_α) with X_m(x_α) = x_β for every m: α -> β, likewise for
/// morphisms.
StrictLimit strict_limit(const DiagramFunctor& d, Budget budget = {});

}  // namespace grpdlim
