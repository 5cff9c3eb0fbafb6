#pragma once

#include <span>
#include <vector>

#include "grpdlim/equiv.hpp"
#include "grpdlim/models.hpp"

namespace grpdlim {

/// Γ acting on G by automorphisms: act[γ][x] is γ·x.
class ActionOnGroup {
 public:
  ActionOnGroup() = default;
  /// Checks each act[γ] is an automorphism and γ ↦ act[γ] a homomorphism
  /// (act[γδ] = act[γ] ∘ act[δ]).
  ActionOnGroup(FiniteGroup gamma, FiniteGroup g, std::vector<std::vector<ElementIndex>> act);

  static ValidationReport check(const FiniteGroup& gamma, const FiniteGroup& g,
                                const std::vector<std::vector<ElementIndex>>& act);
  static ActionOnGroup trivial(const FiniteGroup& gamma, const FiniteGroup& g);
  /// Through a homomorphism Γ -> Z2 (given by `sign`), acting on an abelian G
  /// by x ↦ x⁻¹ on the odd part.
  static ActionOnGroup inversion(const FiniteGroup& gamma, const std::vector<bool>& sign,
                                 const FiniteGroup& g);

  const FiniteGroup& gamma() const { return gamma_; }
  const FiniteGroup& group() const { return g_; }
  ElementIndex apply(ElementIndex gamma, ElementIndex x) const { return act_[gamma][x]; }
  const std::vector<std::vector<ElementIndex>>& table() const { return act_; }

 private:
  FiniteGroup gamma_;
  FiniteGroup g_;
  std::vector<std::vector<ElementIndex>> act_;
};

/// The induced action on 𝔹G.
GroupAction delooping_action(const ActionOnGroup& a);

using Cocycle = std::vector<ElementIndex>;

/// σ(gh) = σ(g)·(g·σ(h)) for every pair.
bool is_cocycle(const ActionOnGroup& a, std::span<const ElementIndex> sigma);

/// Z¹(Γ; G), in lexicographic order.
std::vector<Cocycle> cocycles(const ActionOnGroup& a, Budget budget = {});

/// 𝔼_G Z¹(Γ; G): objects the cocycles (lexicographic), an arrow α: σ -> σ₁
/// for each α with σ₁(g) = α·σ(g)·g(α⁻¹). Arrows compose by multiplying
/// (α then β is β·α), as in 𝔹G.
struct CocycleGroupoid {
  ActionOnGroup action;
  KeyedGroupoid keyed;  // key σ, slot 𝔹G

  const Groupoid& groupoid() const { return keyed.groupoid(); }
  std::span<const ElementIndex> cocycle(ObjectIndex x) const { return keyed.object_key(x); }
  ElementIndex alpha(MorphismIndex m) const { return keyed.components(m)[0]; }
};

CocycleGroupoid cocycle_groupoid(const ActionOnGroup& a, Budget budget = {});

/// K_σ = {α | σ(g)·(g·α)·σ(g)⁻¹ = α for all g}. Throws InvalidStructure
/// when σ is not a cocycle.
Subgroup stabilizer(const ActionOnGroup& a, std::span<const ElementIndex> sigma);

struct H1Class {
  Cocycle representative;  // lexicographically least in its class
  std::size_t size = 0;    // number of cocycles in the class
  Subgroup stabilizer;
};

struct H1 {
  CocycleGroupoid groupoid;
  SkeletonReport skeleton;
  std::vector<H1Class> classes;
};

H1 h1(const ActionOnGroup& a, Budget budget = {});

struct HfpCocycleIso {
  HomotopyFixedPoints hfp;  // (𝔹G)^{hΓ}
  CocycleGroupoid cocycles;
  /// (∗, φ) ↦ σ_φ with σ_φ(g) = φ(g)⁻¹, α ↦ α.
  CatFunctor iso;
  bool is_isomorphism = false;
};

HfpCocycleIso hfp_to_cocycles(const ActionOnGroup& a, Budget budget = {});

struct HfpDecomposition {
  HfpCocycleIso iso;
  H1 cohomology;
  /// (𝔹G)^{hΓ} -> ⊔_{[σ]} 𝔹K_σ: the iso followed by the skeleton functor.
  CatFunctor equivalence;
  EquivalenceCertificate certificate;
};

HfpDecomposition decompose_hfp(const ActionOnGroup& a, Budget budget = {});

}  // namespace grpdlim
