#pragma once

#include <string>
#include <vector>

#include "grpdlim/colim.hpp"
#include "grpdlim/equiv.hpp"
#include "grpdlim/holim.hpp"

namespace grpdlim {

/// A point given by its neighbourhood system: a filtered index category
/// and a functor into 𝒞^op. The stalk of X is colim_i X(nbhd(i)).
struct SitePoint {
  std::string name;
  FiniteCategory index;
  CatFunctor nbhd;  // index -> 𝒞^op
};

/// A finite category 𝒞 with a declared list of points. No coverage is
/// stored; whether the points are enough is up to the caller.
class FiniteSite {
 public:
  FiniteSite() = default;
  /// Checks every point index is filtered and every neighbourhood functor
  /// lands in 𝒞^op.
  FiniteSite(FiniteCategory shape, std::vector<SitePoint> points);

  const FiniteCategory& shape() const { return shape_; }
  const FiniteCategory& opposite() const { return opposite_; }
  const std::vector<SitePoint>& points() const { return points_; }
  std::size_t point_index(const std::string& name) const;

 private:
  FiniteCategory shape_;
  FiniteCategory opposite_;
  std::vector<SitePoint> points_;
};

/// A strict presheaf of groupoids: a diagram over 𝒞^op. For m: U -> V in
/// 𝒞, restriction(m) runs X(V) -> X(U).
class SitePresheaf {
 public:
  SitePresheaf() = default;
  SitePresheaf(FiniteSite site, DiagramFunctor diagram);
  SitePresheaf(FiniteSite site, std::vector<Groupoid> sections,
               std::vector<CatFunctor> restrictions);
  static SitePresheaf constant(const FiniteSite& site, const Groupoid& g);

  const FiniteSite& site() const { return site_; }
  const DiagramFunctor& diagram() const { return diagram_; }
  const Groupoid& section(ObjectIndex u) const { return diagram_.vertex(u); }
  const CatFunctor& restriction(MorphismIndex m) const { return diagram_.edge(m); }

 private:
  FiniteSite site_;
  DiagramFunctor diagram_;
};

class PresheafMap {
 public:
  PresheafMap(SitePresheaf source, SitePresheaf target, std::vector<CatFunctor> components);
  static PresheafMap identity(const SitePresheaf& x);

  const SitePresheaf& source() const { return source_; }
  const SitePresheaf& target() const { return target_; }
  const CatFunctor& component(ObjectIndex u) const { return map_.component(u); }
  const DiagramMap& as_diagram_map() const { return map_; }

 private:
  SitePresheaf source_;
  SitePresheaf target_;
  DiagramMap map_;
};

/// The filtered diagram i ↦ X(nbhd(i)) at a point.
DiagramFunctor neighbourhood_diagram(const SitePresheaf& x, const SitePoint& p);

struct Stalk {
  DiagramFunctor diagram;
  FilteredColimit colim;
  const Groupoid& groupoid() const { return colim.groupoid; }
};

Stalk stalk(const SitePresheaf& x, const SitePoint& p, Budget budget = {});

/// f_p: X_p -> Y_p.
CatFunctor stalk_map(const PresheafMap& f, const SitePoint& p, const Stalk& source,
                     const Stalk& target);

struct PointCertificate {
  std::string point;
  EquivalenceCertificate equivalence;  // filled by the weak-equivalence check
  FibrationCertificate fibration;      // filled by the fibration check
};

struct LocalReport {
  bool holds = true;
  std::vector<PointCertificate> points;
  /// First failing point, or npos.
  std::size_t failing_point = npos;
};

LocalReport is_local_weak_equivalence(const PresheafMap& f, Budget budget = {});
LocalReport is_local_fibration(const PresheafMap& f, Budget budget = {});

struct SectionReport {
  bool holds = true;
  std::vector<EquivalenceCertificate> sections;  // per object of 𝒞
  std::size_t failing_section = npos;
};

SectionReport is_sectionwise_weak_equivalence(const PresheafMap& f);

/// A Γ-diagram of presheaves on one site: X_γ and X_f: X_γ -> X_γ'.
class PresheafDiagram {
 public:
  PresheafDiagram() = default;
  /// Checks identities and composites map to identities and composites.
  PresheafDiagram(FiniteCategory index, std::vector<SitePresheaf> vertices,
                  std::vector<PresheafMap> edges);

  const FiniteCategory& index() const { return index_; }
  const FiniteSite& site() const { return vertices_.front().site(); }
  const SitePresheaf& vertex(ObjectIndex g) const { return vertices_[g]; }
  const PresheafMap& edge(MorphismIndex f) const { return edges_[f]; }

  /// The same data as one diagram over Γ × 𝒞^op: edge (f, m) is X_γ(m)
  /// followed by (X_f) at the target section.
  const ProductCategory& product() const { return product_; }
  const DiagramFunctor& total() const { return total_; }

 private:
  FiniteCategory index_;
  std::vector<SitePresheaf> vertices_;
  std::vector<PresheafMap> edges_;
  ProductCategory product_;
  DiagramFunctor total_;
};

/// Reads a diagram over Γ × 𝒞^op (product_category(index, site.opposite()))
/// as a Γ-diagram of presheaves.
PresheafDiagram presheaf_diagram(const FiniteSite& site, const FiniteCategory& index,
                                 const DiagramFunctor& total);

/// holim_Γ X computed sectionwise, with restrictions the induced maps.
struct PresheafHolim {
  HolimFamily family;  // per object U of 𝒞: holim_Γ X(-, U)
  SitePresheaf presheaf;
};

PresheafHolim presheaf_holim(const PresheafDiagram& d, Budget budget = {});

/// A map of Γ-diagrams of presheaves: one presheaf map per γ, natural in γ.
struct PresheafDiagramMap {
  PresheafDiagram source;
  PresheafDiagram target;
  std::vector<PresheafMap> components;

  PresheafDiagramMap(PresheafDiagram source, PresheafDiagram target,
                     std::vector<PresheafMap> components);
};

/// Same reading for a map of diagrams over Γ × 𝒞^op.
PresheafDiagramMap presheaf_diagram_map(const FiniteSite& site, const FiniteCategory& index,
                                        const DiagramMap& total);

/// f_*: holim X -> holim Y as a presheaf map.
PresheafMap presheaf_holim_map(const PresheafDiagramMap& f, const PresheafHolim& source,
                               const PresheafHolim& target);

/// At a point p: (holim X)_p = colim_i holim_Γ X(nbhd i) -> holim_Γ X_p,
/// the colim/holim comparison over I × Γ.
struct StalkHolimComparison {
  ProductCategory product;  // I × Γ
  DiagramFunctor diagram;   // (i, γ) ↦ X_γ(nbhd i)
  ColimHolimComparison comparison;
  bool is_isomorphism = false;
};

StalkHolimComparison stalk_holim_compare(const PresheafDiagram& d, const SitePoint& p,
                                         Budget budget = {});

/// Sectionwise Fubini for a diagram of presheaves over A × B.
struct PresheafFubini {
  std::vector<FubiniResult> sections;
  bool holds = true;
};

PresheafFubini presheaf_fubini(const PresheafDiagram& d, const ProductCategory& pc,
                               Budget budget = {});

/// Two opens U ⊆ V (objects 0, 1 of the poset U ≤ V) and one point inside
/// U with neighbourhoods V ⊇ U. X is constant at 𝔹Z2; Y(V) = 𝔹Z2 ⊔ 𝔹Z2
/// restricts onto Y(U) = 𝔹Z2 by folding. f_V includes the first summand
/// and f_U is the identity, so every stalk map is an equivalence while f_V
/// is not.
struct SeparationWitness {
  FiniteSite site;
  SitePresheaf x;
  SitePresheaf y;
  PresheafMap f;
};

SeparationWitness separation_witness();

}  // namespace grpdlim
