#pragma once

#include <string>
#include <vector>

#include "grpdlim/functor_cat.hpp"
#include "grpdlim/holim.hpp"
#include "grpdlim/limits.hpp"

namespace grpdlim {

enum class FilteredFailure { None, Empty, NoCocone, NoCoequalizer };

const char* to_string(FilteredFailure f);

struct FilteredCheck {
  bool filtered = false;
  FilteredFailure failure = FilteredFailure::None;
  /// NoCocone: {i, j}. NoCoequalizer: {u, v} parallel morphisms.
  std::vector<std::uint64_t> indices;

  std::string describe() const;
};

/// Nonempty, every pair of objects has a cocone, every parallel pair
/// u, v: i ⇉ j has some w: j -> k with u;w = v;w.
FilteredCheck is_filtered(const FiniteCategory& c);

/// colim_I X for a finite filtered I. Objects are the classes of pairs
/// (i, x) under (i, x) ~ (j, y) when both reach a common element at some k;
/// morphisms likewise. Classes are numbered by their least pair (i, x).
struct FilteredColimit {
  DiagramFunctor diagram;
  Groupoid groupoid;
  std::vector<CatFunctor> cocone;  // X(i) -> colim
  std::vector<std::pair<ObjectIndex, ObjectIndex>> object_reps;
  std::vector<std::pair<ObjectIndex, MorphismIndex>> morphism_reps;

  ObjectIndex object_class(ObjectIndex i, ObjectIndex x) const { return cocone[i].object(x); }
  MorphismIndex morphism_class(ObjectIndex i, MorphismIndex m) const {
    return cocone[i].morphism(m);
  }
};

/// Throws InvalidStructure (with the failing condition) when the index is
/// not filtered.
FilteredColimit filtered_colimit(const DiagramFunctor& d, Budget budget = {});

/// colim f: [i, x] ↦ [i, f_i(x)].
CatFunctor colim_map(const DiagramMap& f, const FilteredColimit& source,
                     const FilteredColimit& target);

/// The I-diagram i ↦ Map(K, X(i)), edges by postcomposition.
struct MappingDiagram {
  std::vector<FunctorGroupoid> maps;
  DiagramFunctor diagram;
};

MappingDiagram mapping_diagram(const FiniteCategory& k, const DiagramFunctor& d,
                               Budget budget = {});

struct MapColimComparison {
  FilteredColimit colim;       // colim X
  MappingDiagram mapping;      // i ↦ Map(K, X(i))
  FilteredColimit left;        // colim Map(K, X(i))
  FunctorGroupoid right;       // Map(K, colim X)
  CatFunctor comparison;       // [i, F] ↦ F ; cocone_i
  bool is_isomorphism = false;
};

MapColimComparison map_colim_compare(const FiniteCategory& k, const DiagramFunctor& d,
                                     Budget budget = {});

/// For d over I × Γ (I = pc.left filtered, Γ = pc.right finite):
/// colim_I holim_Γ d -> holim_Γ colim_I d.
struct ColimHolimComparison {
  HolimFamily inner;                   // i ↦ holim_Γ d(i, -)
  FilteredColimit left;                // colim_I of that
  std::vector<FilteredColimit> slices; // γ ↦ colim_I d(-, γ)
  DiagramFunctor colim_diagram;        // over Γ
  HomotopyLimit right;                 // holim_Γ colim_I d
  CatFunctor comparison;
  bool is_isomorphism = false;
};

ColimHolimComparison colim_holim_compare(const DiagramFunctor& d, const ProductCategory& pc,
                                         Budget budget = {});

struct ColimProductComparison {
  std::vector<FilteredColimit> factors;  // colim X_k
  DiagramFunctor product_diagram;        // i ↦ ∏_k X_k(i)
  std::vector<ProductGroupoid> products; // per i
  FilteredColimit left;                  // colim ∏
  ProductGroupoid right;                 // ∏ colim
  CatFunctor comparison;
  bool is_isomorphism = false;
};

ColimProductComparison colim_product_compare(const std::vector<DiagramFunctor>& ds,
                                             Budget budget = {});

}  // namespace grpdlim
