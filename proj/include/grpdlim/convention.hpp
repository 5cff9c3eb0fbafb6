#pragma once

#include "grpdlim/base.hpp"

namespace grpdlim {

// Left actions throughout: act(gh) = act(g) ∘ act(h) classically, which in
// diagrammatic order is then(act(h), act(g)).
//
// The cocycle law for a homotopy fixed point is classically
//   φ(gh) = gφ(h) ∘ φ(g),
// a path x -> gx -> ghx: first φ(g), then g applied to φ(h): x -> hx. In
// diagrammatic order that reads
//   φ(gh) = compose(φ(g), g·φ(h)).
// Group-valued cocycles obey the same shape, σ(gh) = σ(g) · (g·σ(h)), with
// the product in place of composition. Both are written through this one
// helper: `combine` is compose or multiply, `act(g, v)` is g·v.
template <class Combine, class Act, class Value>
Value cocycle_value(const Combine& combine, const Act& act, ElementIndex g, Value value_g,
                    Value value_h) {
  return combine(value_g, act(g, value_h));
}

}  // namespace grpdlim
