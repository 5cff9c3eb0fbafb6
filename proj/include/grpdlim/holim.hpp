#pragma once

#include <vector>

#include "grpdlim/functor_cat.hpp"
#include "grpdlim/limits.hpp"

namespace grpdlim {

/// holim_Γ X: the equalizer of
///   ∏_α Map((Γ↓α), X(α))  ⇉  ∏_{m: α→β} Map((Γ↓α), X(β)),
/// one map post-composing with X(m), the other pre-composing with
/// (Γ↓α) -> (Γ↓β). Identity m impose nothing and are skipped.
///
/// Objects are tuples (F_α) with F_α an object of factor α; morphisms are
/// tuples of natural transformations.
struct HomotopyLimit {
  DiagramFunctor diagram;
  std::vector<Overcategory> overcategories;
  std::vector<FunctorGroupoid> factors;
  KeyedGroupoid keyed;

  const Groupoid& groupoid() const { return keyed.groupoid(); }
  /// F_α of a holim object, as a functor index in factors[α].
  ObjectIndex factor_object(ObjectIndex x, ObjectIndex alpha) const {
    return keyed.object_key(x)[alpha];
  }
  MorphismIndex factor_morphism(MorphismIndex m, ObjectIndex alpha) const {
    return keyed.components(m)[alpha];
  }
  ObjectIndex find_object(std::span<const ObjectIndex> factor_objects) const {
    return keyed.find_object(factor_objects);
  }
  MorphismIndex find_morphism(ObjectIndex src, std::span<const MorphismIndex> factor_morphisms) const {
    return keyed.find_morphism(src, factor_morphisms);
  }
};

/// Enumerates the factors, then cuts out the equalizer jointly: a tuple is
/// extended factor by factor and every constraint is tested as soon as its
/// two factors are fixed, so the products are never materialized.
HomotopyLimit holim(const DiagramFunctor& d, Budget budget = {});

/// The same equalizer built literally: both products, both maps between
/// them, then equalizer(). Exponentially larger; used to cross-check holim.
struct HolimByProducts {
  ProductGroupoid source;  // ∏_α Map((Γ↓α), X(α))
  ProductGroupoid target;  // ∏_{m} Map((Γ↓α), X(β)) over non-identity m
  CatFunctor post;         // composition with X(m)
  CatFunctor pre;          // composition with (Γ↓α) -> (Γ↓β)
  Equalizer equalizer;
};
HolimByProducts holim_by_products(const DiagramFunctor& d, Budget budget = {});

/// f_*: holim X -> holim Y.
CatFunctor induced_map(const DiagramMap& f, const HomotopyLimit& source,
                       const HomotopyLimit& target);

/// lim X -> holim X: each x_α goes to the constant functor at x_α.
CatFunctor lim_to_holim(const StrictLimit& lim, const HomotopyLimit& h);

/// For d over A × B, the B-diagram b ↦ holim_A d(-, b) (over_first) or the
/// A-diagram a ↦ holim_B d(a, -) (over_second), with edges the induced maps.
struct HolimFamily {
  std::vector<DiagramFunctor> slices;
  std::vector<HomotopyLimit> limits;
  DiagramFunctor diagram;
};

/// The diagram over `index` obtained by fixing the other coordinate.
DiagramFunctor slice_diagram(const DiagramFunctor& d, const ProductCategory& pc, bool vary_first,
                             ObjectIndex fixed);

HolimFamily holim_over_first(const DiagramFunctor& d, const ProductCategory& pc,
                             Budget budget = {});
HolimFamily holim_over_second(const DiagramFunctor& d, const ProductCategory& pc,
                              Budget budget = {});

/// The canonical comparison holim_{A×B} d -> holim_outer holim_inner d,
/// using (A×B ↓ (a,b)) = (A↓a) × (B↓b). `outer_is_first` selects A as the
/// outer index; `family` must be the matching holim_over_second (resp.
/// holim_over_first) and `iterated` its holim.
CatFunctor curry_comparison(const HomotopyLimit& total, const ProductCategory& pc,
                            bool outer_is_first, const HolimFamily& family,
                            const HomotopyLimit& iterated);

struct FubiniResult {
  HomotopyLimit total;
  HolimFamily inner_second;       // a ↦ holim_B d(a, -)
  HomotopyLimit outer_first;      // holim_A holim_B d
  HolimFamily inner_first;        // b ↦ holim_A d(-, b)
  HomotopyLimit outer_second;     // holim_B holim_A d
  CatFunctor to_first_iterated;   // total -> holim_A holim_B d
  CatFunctor to_second_iterated;  // total -> holim_B holim_A d
  bool first_is_isomorphism = false;
  bool second_is_isomorphism = false;
};

FubiniResult fubini(const DiagramFunctor& d, const ProductCategory& pc, Budget budget = {});

}  // namespace grpdlim
