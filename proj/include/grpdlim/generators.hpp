#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "grpdlim/constructions.hpp"
#include "grpdlim/limits.hpp"
#include "grpdlim/site.hpp"

// Random finite instances for property tests and gen-corpus. Diagrams are
// built from G-sets: an equivariant map induces a strict functor between
// action groupoids, so composites hold on the nose.
namespace grpdlim::gen {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [0, n); n > 0.
  std::size_t below(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
  }
  bool coin() { return below(2) == 1; }
  template <class T>
  const T& pick(const std::vector<T>& xs) {
    return xs[below(xs.size())];
  }

 private:
  std::mt19937_64 engine_;
};

/// Bounds on each generated vertex groupoid.
struct Limits {
  std::size_t max_objects = 6;
  std::size_t max_morphisms = 24;
};

enum class Shape {
  Terminal,
  Discrete2,
  Chain2,
  Chain3,
  Span,      // 1 <- 0 -> 2
  Cospan,    // 0 -> 1 <- 2, the pullback shape
  Square,    // chain2 × chain2
  BZ2,
  BZ3,
  Idempotent,
  RightZero  // {id, a, b} with x;y = y
};

const char* to_string(Shape s);
FiniteCategory shape_category(Shape s);
std::vector<Shape> all_shapes();
/// The filtered ones: Terminal, Chain2, Chain3, Cospan, Square, Idempotent,
/// RightZero.
std::vector<Shape> filtered_shapes();

/// Every subgroup of g as a sorted element list (by closure of pairs;
/// enough for the small groups used here).
std::vector<std::vector<ElementIndex>> subgroups(const FiniteGroup& g);
GSet coset_space(const FiniteGroup& g, const std::vector<ElementIndex>& h);
GSet disjoint(const FiniteGroup& g, const std::vector<GSet>& parts);
/// A nonempty union of coset spaces with at most `max_points` points.
GSet random_gset(Rng& rng, const FiniteGroup& g, std::size_t max_points);
/// A random equivariant map, or nullopt when none exists.
std::optional<std::vector<std::uint32_t>> random_equivariant(Rng& rng, const GSet& x,
                                                             const GSet& y);
CatFunctor equivariant_functor(const Groupoid& ex, const Groupoid& ey, std::size_t group_order,
                               const std::vector<std::uint32_t>& f);

/// Small groups: trivial, Z2, Z3, Z4, Klein, S3.
FiniteGroup random_group(Rng& rng);

/// A random diagram of action groupoids over the shape.
DiagramFunctor random_diagram(Rng& rng, Shape s, Limits limits = {});

/// A small connected or disconnected groupoid: codiscrete(k), BZn,
/// discrete(k), or a random action groupoid.
Groupoid random_groupoid(Rng& rng, Limits limits = {});

/// Vertexwise product d1 × d2 with its two projections.
struct ProductDiagram {
  DiagramFunctor diagram;
  std::vector<ProductGroupoid> products;
  DiagramMap first;
  DiagramMap second;
};
ProductDiagram diagram_product(const DiagramFunctor& a, const DiagramFunctor& b);

/// x ↦ (x, e_α) into d × e; nullopt unless the edges of e fix the points.
std::optional<DiagramMap> diagram_section(const ProductDiagram& p,
                                          const std::vector<ObjectIndex>& points);

/// X ∘ F for F: J -> index(X).
DiagramFunctor pullback_diagram(const DiagramFunctor& x, const CatFunctor& f);

/// (a, b) ↦ P(a) × Q(b) over pc = A × B.
DiagramFunctor external_product(const DiagramFunctor& p, const DiagramFunctor& q,
                                const ProductCategory& pc);

/// 𝔼Zn with Zn translating: a diagram over BZn.
DiagramFunctor translation_diagram(std::size_t n);

/// A componentwise map with the property the generator guarantees.
struct MapCase {
  std::string label;
  DiagramMap map;
  bool equivalence = false;
  bool fibration = false;
};

/// Projections off contractible factors, sections into them, projections
/// off arbitrary factors, and (for BZn) the diagonal 𝔼Zn projection.
MapCase random_componentwise_map(Rng& rng, Shape s);

/// Random diagram over A × B: external products, diagrams pulled back along
/// the projections, and for BZ2 × BZ2 or idempotent × idempotent along
/// the multiplication.
DiagramFunctor random_product_diagram(Rng& rng, Shape a, Shape b, const ProductCategory& pc,
                                      Limits limits = {});

/// Opens U ≤ V; point "u" inside U (neighbourhoods V ⊇ U), point "v" only in V.
FiniteSite two_open_site();
/// Opens U ≤ V ≤ W; point "u" in U (W ⊇ V ⊇ U) and "v" in V (W ⊇ V).
FiniteSite three_open_site();

/// Presheaf-diagram maps over Γ on a chain site whose components are local
/// weak equivalences (resp. local fibrations).
struct PresheafMapCase {
  std::string label;
  PresheafDiagramMap map;
  bool local_equivalence = false;
  bool local_fibration = false;
};
PresheafMapCase random_presheaf_map(Rng& rng, const FiniteSite& site, Shape gamma);

}  // namespace grpdlim::gen
