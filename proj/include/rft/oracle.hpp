#pragma once

#include "rft/potential.hpp"
#include "rft/transition.hpp"

namespace rft {

enum class QuadratureRule { midpoint, trapezoid };

// Reference implementations that evaluate the Dyson integrals by elementary
// time-domain quadrature, one frequency at a time. They share no transform
// or convolution code with the spectral pipeline on purpose: slow, literal,
// and independently checkable.

// c1(w) = (v_fi * A / (i hbar)) * Int_r^{r+T} V(t) e^{i (w - w_i) t} dt
// over the window [spec.offset, spec.offset + spec.window], sampled at every
// grid frequency.
Signal direct_first_order(const DualGrid& g, const TransitionSpec& spec,
                          const Potential& pot, QuadratureRule rule,
                          std::size_t steps);

// Full second-order double integral over the whole centered span,
//   c2(w) = A v_fk_ki / ((i hbar)^2 k_max) * sum_k Int dt1 V(t1)
//           e^{i (w - w_k) t1} Int_{-S/2}^{t1} dt2 V(t2) e^{i (w_k - w_i) t2},
// with the inner integral evaluated by a fresh quadrature for every outer
// node and level. The inner integral does not depend on the observation
// frequency, so it is computed once per (k, t1) pair; beyond that no
// algebraic shortcuts are taken.
Signal direct_second_order(const DualGrid& g, const TransitionSpec& spec,
                           const Potential& pot, QuadratureRule rule,
                           std::size_t steps_outer, std::size_t steps_inner);

}  // namespace rft
