#pragma once

#include <vector>

#include "grpdlim/equiv.hpp"
#include "grpdlim/holim.hpp"

namespace grpdlim {

/// A left action of a finite group on a groupoid by strict automorphisms.
/// act(g)(x) is written g·x.
class GroupAction {
 public:
  GroupAction() = default;
  /// Checks act(1) = id, act(gh) = act(g) ∘ act(h) and invertibility.
  GroupAction(FiniteGroup group, Groupoid space, std::vector<CatFunctor> act);

  static ValidationReport check(const FiniteGroup& group, const Groupoid& space,
                                const std::vector<CatFunctor>& act);
  static GroupAction trivial(const FiniteGroup& group, const Groupoid& space);
  /// Left translation on 𝔼G (objects h, morphism h -> k·h).
  static GroupAction translation(const FiniteGroup& group);

  const FiniteGroup& group() const { return group_; }
  const Groupoid& space() const { return space_; }
  const CatFunctor& act(ElementIndex g) const { return act_[g]; }
  const std::vector<CatFunctor>& functors() const { return act_; }
  ObjectIndex object(ElementIndex g, ObjectIndex x) const { return act_[g].object(x); }
  MorphismIndex morphism(ElementIndex g, MorphismIndex m) const { return act_[g].morphism(m); }

 private:
  FiniteGroup group_;
  Groupoid space_;
  std::vector<CatFunctor> act_;
};

/// The action as a diagram over 𝔹Γ: one vertex, edge g = act(g).
DiagramFunctor action_diagram(const GroupAction& a);

/// X^{hΓ} as pairs (x, φ): objects are keyed by (x, φ(0), ..., φ(|Γ|-1)),
/// morphisms by their single component α in X.
struct HomotopyFixedPoints {
  GroupAction action;
  KeyedGroupoid keyed;

  const Groupoid& groupoid() const { return keyed.groupoid(); }
  ObjectIndex base(ObjectIndex p) const { return keyed.object_key(p)[0]; }
  MorphismIndex phi(ObjectIndex p, ElementIndex g) const { return keyed.object_key(p)[1 + g]; }
  MorphismIndex alpha(MorphismIndex m) const { return keyed.components(m)[0]; }
  ObjectIndex find(ObjectIndex x, const std::vector<MorphismIndex>& phi) const;
};

/// Every cocycle φ is fixed by its values on a generating set; those are
/// enumerated, extended along words and then checked against the full law
/// for every pair. Every α: x -> x₁ is a morphism, to
/// φ₁(g) = compose(α⁻¹, compose(φ(g), g·α)).
HomotopyFixedPoints homotopy_fixed_points(const GroupAction& a, Budget budget = {});

struct HfpComparison {
  HomotopyLimit holim;
  HomotopyFixedPoints explicit_model;
  /// F ↦ (F(1), g ↦ F(1 -> g)) and η ↦ η_1, evaluating at the identity
  /// object of (𝔹Γ↓∗) = 𝔼Γ.
  CatFunctor comparison;
  bool is_isomorphism = false;
};

HfpComparison hfp_via_holim(const GroupAction& a, Budget budget = {});

/// X ×^h_Z Y as 5-tuples (x, y, z, α: f(x) -> z, β: g(y) -> z); morphisms
/// (a, b, c) with compose(α, c) = compose(f(a), α') and likewise for β.
struct HomotopyPullback {
  CatFunctor f;
  CatFunctor g;
  KeyedGroupoid keyed;  // key (x, y, z, α, β), slots X, Y, Z
  const Groupoid& groupoid() const { return keyed.groupoid(); }
};

HomotopyPullback homotopy_pullback(const CatFunctor& f, const CatFunctor& g, Budget budget = {});

/// The 3-tuple model (x, y, γ: f(x) -> g(y)); morphisms (a, b) with
/// compose(γ, g(b)) = compose(f(a), γ').
struct ReducedPullback {
  CatFunctor f;
  CatFunctor g;
  KeyedGroupoid keyed;  // key (x, y, γ), slots X, Y
  const Groupoid& groupoid() const { return keyed.groupoid(); }
};

ReducedPullback homotopy_pullback_reduced(const CatFunctor& f, const CatFunctor& g,
                                          Budget budget = {});

struct PullbackComparison {
  HomotopyPullback full;
  ReducedPullback reduced;
  /// (x, y, z, α, β) ↦ (x, y, compose(α, β⁻¹)), (a, b, c) ↦ (a, b).
  CatFunctor comparison;
  EquivalenceCertificate certificate;
};

PullbackComparison compare_pullback_models(const CatFunctor& f, const CatFunctor& g,
                                           Budget budget = {});

/// The cospan X -f-> Z <-g- Y as a diagram over the pullback shape.
DiagramFunctor cospan_diagram(const CatFunctor& f, const CatFunctor& g);

struct HolimPullbackComparison {
  HomotopyLimit holim;
  HomotopyPullback full;
  /// Reads x, y off the end factors and z, α, β off the middle factor at
  /// id, f and g.
  CatFunctor comparison;
  EquivalenceCertificate certificate;
  bool is_isomorphism = false;
};

HolimPullbackComparison homotopy_pullback_via_holim(const CatFunctor& f, const CatFunctor& g,
                                                    Budget budget = {});

/// LX: pairs (x, φ ∈ Aut x); α: (x, φ) -> (x₁, φ₁) when φ₁ = α ∘ φ ∘ α⁻¹.
struct LoopGroupoid {
  Groupoid space;
  KeyedGroupoid keyed;  // key (x, φ), slot X
  const Groupoid& groupoid() const { return keyed.groupoid(); }
};

LoopGroupoid loop_groupoid(const Groupoid& x, Budget budget = {});

/// The diagonal X -> X × X.
CatFunctor diagonal(const Groupoid& x, const ProductGroupoid& square);

struct LoopComparison {
  LoopGroupoid loop;
  ProductGroupoid square;
  ReducedPullback pullback;  // over the diagonal, both sides
  /// (x, φ) ↦ (x, x, (id, φ)), α ↦ (α, α).
  CatFunctor comparison;
  EquivalenceCertificate certificate;
};

LoopComparison loop_vs_pullback(const Groupoid& x, Budget budget = {});

}  // namespace grpdlim
