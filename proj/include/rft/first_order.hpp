#pragma once

#include "rft/potential.hpp"
#include "rft/transition.hpp"

namespace rft {

// First-order transition amplitude as a function of final frequency,
// computed spectrally as the convolution of the window kernel W with the
// potential spectrum, centered on the initial level:
//   c1(w) = (v_fi * A / (i hbar sqrt(2 pi))) * sum_m Vt[m] W(w - w_i - w_m) dw.
// W is evaluated in closed form at every argument, including arguments past
// the grid edge, so the result equals the time-domain Dyson integral
//   (v_fi * A / (i hbar)) * Int_r^{r+T} V(t) e^{i (w - w_i) t} dt
// exactly for spike spectra and to rounding for smooth ones.
Signal first_order_amplitude(const DualGrid& g, const TransitionSpec& spec,
                             const Potential& pot);

// Tunneling variant: unit static barrier coupling, initial level shifted by
// the bias. Equivalent to first_order_amplitude with a unit constant
// potential; the bias enters through spec.bias_offset.
Signal bardeen_first_order(const DualGrid& g, const TransitionSpec& spec);

}  // namespace rft
