#pragma once

#include <vector>

#include "rft/potential.hpp"
#include "rft/transition.hpp"

namespace rft {

// Inner Dyson integral for intermediate level k, accumulated from the start
// r = spec.offset of the canonical window of length spec.window:
//   psi_k(t) = sqrt(2 pi) * Int_r^{r+t} V(t') e^{i (w_k - w_i) t'} dt',
// evaluated spectrally sample by sample,
//   psi_k[j] = dw * sum_m Vt[m] * W(w_k - w_i - w_m; j dt, r).
// Anchoring the trace to the actual window position keeps the restarted
// dynamics faithful for potentials that are not window-periodic.
// The kernel W is evaluated in closed form, so arguments beyond the grid edge
// are handled exactly. Returned trace has length window / dt.
std::vector<cplx> impulse_response(const DualGrid& g,
                                   const TransitionSpec& spec,
                                   const Potential& pot, long long k);

// Spectrum of the window-periodized inner integral: the trace above is tiled
// across the full span with period spec.window (aligned so a window starts at
// t = 0), transformed, scaled by sqrt(2 pi) to the plain Int dt e^{iwt}
// convention, and phase-shifted for a nonzero window offset. For the
// self-coupled level in spectral_delta mode this is replaced by the spike
// 2*pi*delta(w).
Signal transfer_function(const DualGrid& g, const TransitionSpec& spec,
                         const Potential& pot, long long k, SelfTermMode mode);

// Second-order transition amplitude, decoupled per intermediate level:
//   c2(w) = B / k_max * sum_k (W * Vt * Psi_k)(w - w_k),
//   B = A * v_fk_ki / (2 pi i hbar)^2.
Signal second_order_amplitude(const DualGrid& g, const TransitionSpec& spec,
                              const Potential& pot, SelfTermMode mode);

struct SeriesResult {
  Signal amplitude;
  // Levels dropped because the resolvent denominator fell under dw/2.
  std::vector<long long> skipped;
};

// Closed-form second-order amplitude for the resonant drive
// V(t) = s e^{-i w_d t}:
//   c2(w) = A v_fk_ki s^2 / ((i hbar)^2 k_max) * sum_k 1/(i D_k) *
//           [ W(w - w_i - 2 w_d) - e^{i D_k r} W(w - w_k - w_d) ],
// with D_k = w_k - w_i - w_d and W the full-span window kernel. Levels with
// |D_k| < dw/2 are skipped and reported.
SeriesResult second_order_golden_rule(const DualGrid& g,
                                      const TransitionSpec& spec,
                                      double strength, double omega_d);

// Static-barrier (tunneling) second order: the drive-free special case with
// unit strength; the initial level carries the bias shift.
SeriesResult bardeen_second_order(const DualGrid& g,
                                  const TransitionSpec& spec);

}  // namespace rft
