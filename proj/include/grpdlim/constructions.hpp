#pragma once

#include <utility>
#include <vector>

#include "grpdlim/functor.hpp"
#include "grpdlim/group.hpp"
#include "grpdlim/keyed.hpp"

namespace grpdlim {

FiniteCategory terminal_category();
Groupoid terminal_groupoid();
Groupoid empty_groupoid();
/// n objects, identities only.
Groupoid discrete(std::size_t n);
/// n objects, exactly one morphism i -> j for every pair (index i * n + j).
Groupoid codiscrete(std::size_t n);

/// One object; morphism g is the group element g. Composing "a, then b"
/// gives the product b·a, so a functor 𝔹Γ -> C is a left action.
Groupoid delooping(const FiniteGroup& g);

/// A finite left G-set: `act[g][x]` is g·x.
struct GSet {
  FiniteGroup group;
  std::size_t points = 0;
  std::vector<std::vector<std::uint32_t>> act;

  static GSet regular(const FiniteGroup& g);
  static GSet trivial(const FiniteGroup& g, std::size_t points);
  ValidationReport check() const;
};

/// 𝔼_G X. Objects are the points; morphism x * |G| + h runs x -> h·x.
Groupoid action_groupoid(const GSet& x);
/// 𝔼G: G acting on itself by left multiplication.
Groupoid translation_groupoid(const FiniteGroup& g);

/// a × b with object (i, j) at i * |b| + j and morphism (f, g) at
/// f * |mor b| + g.
struct ProductCategory {
  FiniteCategory category;
  FiniteCategory left;
  FiniteCategory right;
  CatFunctor first;
  CatFunctor second;

  ObjectIndex object(ObjectIndex i, ObjectIndex j) const {
    return static_cast<ObjectIndex>(i * right.object_count() + j);
  }
  MorphismIndex morphism(MorphismIndex f, MorphismIndex g) const {
    return static_cast<MorphismIndex>(f * right.morphism_count() + g);
  }
  ObjectIndex first_object(ObjectIndex x) const {
    return static_cast<ObjectIndex>(x / right.object_count());
  }
  ObjectIndex second_object(ObjectIndex x) const {
    return static_cast<ObjectIndex>(x % right.object_count());
  }
  MorphismIndex first_morphism(MorphismIndex m) const {
    return static_cast<MorphismIndex>(m / right.morphism_count());
  }
  MorphismIndex second_morphism(MorphismIndex m) const {
    return static_cast<MorphismIndex>(m % right.morphism_count());
  }
};

ProductCategory product_category(const FiniteCategory& a, const FiniteCategory& b);

/// The swap isomorphism a × b -> b × a.
CatFunctor product_swap(const ProductCategory& ab, const ProductCategory& ba);

struct DisjointUnion {
  Groupoid groupoid;
  std::vector<std::size_t> component;  // per object
  std::vector<ObjectIndex> object_offset;
  std::vector<MorphismIndex> morphism_offset;
  std::vector<CatFunctor> injections;
};

/// Components are laid out one after another in list order.
DisjointUnion disjoint_union(const std::vector<Groupoid>& parts);

/// Same objects and morphisms, every arrow reversed; compose_op(f, g) is
/// compose(g, f).
FiniteCategory opposite(const FiniteCategory& c);
Groupoid opposite(const Groupoid& g);

/// Thin category on n objects generated by the given relations i <= j.
/// Morphisms are the pairs (i, j) with i <= j, in lexicographic order.
/// Throws if the generated preorder is not antisymmetric.
FiniteCategory poset_category(std::size_t n,
                              const std::vector<std::pair<ObjectIndex, ObjectIndex>>& relations);
/// 0 -> 1 -> ... -> n-1.
FiniteCategory chain_category(std::size_t n);
/// left -> middle <- right, objects 0, 1, 2.
FiniteCategory pullback_shape();
/// One object with morphisms {id, e}, e;e = e.
FiniteCategory idempotent_category();
/// One object, morphisms 0..n-1 with 0 the identity and compose(f, g) =
/// table[f][g]; validated exhaustively.
FiniteCategory monoid_category(const std::vector<std::vector<MorphismIndex>>& table);

/// Component label of each object (connected through morphisms in either
/// direction); labels are numbered in order of least object.
std::vector<std::uint32_t> connected_components(const FiniteCategory& c);

/// (Γ↓α): objects are the morphisms u: β -> α of Γ (in index order), a
/// morphism u -> u' is a morphism t of Γ with t ; u' = u.
class Overcategory {
 public:
  Overcategory(const FiniteCategory& gamma, ObjectIndex alpha);

  const FiniteCategory& category() const { return category_; }
  const FiniteCategory& gamma() const { return gamma_; }
  ObjectIndex base() const { return alpha_; }
  /// The forgetful functor (Γ↓α) -> Γ.
  const CatFunctor& forgetful() const { return forgetful_; }

  /// The Γ-morphism an object stands for.
  MorphismIndex arrow(ObjectIndex u) const { return arrows_[u]; }
  /// Object standing for the Γ-morphism u (npos if dst u != α).
  ObjectIndex object_of(MorphismIndex u) const { return object_of_[u]; }
  /// The underlying Γ-morphism t of a triangle and its target u'.
  MorphismIndex triangle_side(MorphismIndex m) const { return triangles_[m].first; }
  MorphismIndex triangle_target(MorphismIndex m) const { return triangles_[m].second; }
  /// The triangle (t, u'), or npos.
  MorphismIndex find_triangle(MorphismIndex t, MorphismIndex target) const;

 private:
  FiniteCategory gamma_;
  ObjectIndex alpha_;
  FiniteCategory category_;
  CatFunctor forgetful_;
  std::vector<MorphismIndex> arrows_;
  std::vector<ObjectIndex> object_of_;
  std::vector<std::pair<MorphismIndex, MorphismIndex>> triangles_;
  TupleTable triangle_index_;
};

/// The functor (Γ↓α) -> (Γ↓β) induced by m: α -> β (post-composition).
CatFunctor overcategory_map(const Overcategory& from, const Overcategory& to, MorphismIndex m);

}  // namespace grpdlim
