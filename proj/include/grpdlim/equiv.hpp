#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grpdlim/constructions.hpp"
#include "grpdlim/group.hpp"

namespace grpdlim {

enum class EquivalenceViolation { None, NotEssentiallySurjective, NotFaithful, NotFull };

const char* to_string(EquivalenceViolation v);

/// A target object y is reached by source object x through the isomorphism
/// `iso`: F(x) -> y.
struct SurjectivityWitness {
  ObjectIndex source;
  MorphismIndex iso;
};

/// One source hom-set hom(x, x') checked against hom(F x, F x').
struct HomSetCheck {
  ObjectIndex from;
  ObjectIndex to;
  std::size_t size;
};

struct EquivalenceCertificate {
  bool equivalence = false;
  /// Per target object, when essentially surjective.
  std::vector<SurjectivityWitness> witnesses;
  /// Nonempty hom-sets mapped bijectively (all of them when `equivalence`).
  std::vector<HomSetCheck> hom_bijections;
  EquivalenceViolation violation = EquivalenceViolation::None;
  /// NotEssentiallySurjective: {y}. NotFaithful: {x, x', m1, m2} with
  /// F(m1) = F(m2). NotFull: {x, x', t} with t in hom(F x, F x') not hit.
  std::vector<std::uint64_t> violation_indices;

  std::string describe() const;
};

/// Essentially surjective and fully faithful, all checked exhaustively.
/// Faithfulness is checked before fullness for each source object.
EquivalenceCertificate is_equivalence(const CatFunctor& f);

struct FibrationCertificate {
  bool fibration = false;
  /// Number of (x, α) pairs checked, each with a lift.
  std::size_t lifted = 0;
  /// (x, α) where the isomorphism α: F(x) -> y has no lift out of x.
  std::optional<std::pair<ObjectIndex, MorphismIndex>> counterexample;

  std::string describe() const;
};

/// Every isomorphism α: F(x) -> y lifts to an isomorphism β: x -> x₁ with
/// F(β) = α.
FibrationCertificate is_fibration(const CatFunctor& f);

struct AcyclicFibrationCertificate {
  EquivalenceCertificate equivalence;
  FibrationCertificate fibration;
  bool holds() const { return equivalence.equivalence && fibration.fibration; }
};

AcyclicFibrationCertificate is_acyclic_fibration(const CatFunctor& f);

/// Aut(x) as a group: elements are the endomorphisms of x in index order,
/// and a·b is the classical composite a ∘ b (that is, compose(b, a)), so
/// the delooping of the result composes like the groupoid itself.
Subgroup automorphism_group(const Groupoid& g, ObjectIndex x);

struct SkeletonReport {
  std::vector<std::uint32_t> class_of;  // per object
  std::vector<std::vector<ObjectIndex>> classes;
  std::vector<ObjectIndex> representatives;  // least object of each class
  std::vector<Subgroup> automorphism_groups;  // embedding: endomorphism indices
  std::vector<MorphismIndex> transport;      // per object: rep -> object
  DisjointUnion model;                       // ⊔ 𝔹 Aut(rep)
  CatFunctor to_model;
  EquivalenceCertificate certificate;
};

/// Representatives are the least objects of their classes; transports are
/// found breadth-first from the representative.
SkeletonReport skeleton(const Groupoid& g);

struct EquivalenceComparison {
  bool equivalent = false;
  /// matching[i] = class of the second groupoid paired with class i.
  std::vector<std::size_t> matching;
  std::string reason;
};

/// Compares skeletons: same number of classes and a pairing of classes
/// with isomorphic automorphism groups.
EquivalenceComparison are_equivalent(const Groupoid& x, const Groupoid& y, Budget budget = {});

}  // namespace grpdlim
