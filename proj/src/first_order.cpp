#include "rft/first_order.hpp"

#include <cmath>

namespace rft {

namespace {
constexpr double kSqrt2Pi = 2.50662827463100050242;

void validate_window(const DualGrid& g, const TransitionSpec& spec) {
  require(spec.window > 0.0 && spec.window <= g.time_span() * (1.0 + 1e-12),
          ErrorCode::invariant,
          "integration window must be positive and fit the grid span");
  require(spec.hbar > 0.0, ErrorCode::invariant, "hbar must be positive");
}
}  // namespace

Signal first_order_amplitude(const DualGrid& g, const TransitionSpec& spec,
                             const Potential& pot) {
  validate_window(g, spec);
  // The initial-level shift must stay bin-aligned so the output axis keeps
  // meaning final frequency; the kernel itself is evaluated in closed form.
  (void)bin_for_freq(g, spec.omega_i());

  const Signal vt = pot.spectrum(g);
  Signal amp(g, Domain::freq);

  // c1(w) = pref * (dw / sqrt(2 pi)) * sum_m Vt[m] W(w - w_i - w_m; T, r).
  // The kernel is evaluated in closed form for every argument, including
  // arguments beyond the grid edge, so no spectral tail is truncated and no
  // bin shifting is needed. A lattice convolution would drop exactly those
  // out-of-range kernel samples.
  const double wi = spec.omega_i();
  for (std::size_t n = 0; n < g.n; ++n) {
    const double x = g.freq_at(n) - wi;
    cplx acc(0.0, 0.0);
    for (std::size_t m = 0; m < g.n; ++m) {
      const cplx v = vt.values[m];
      if (v == cplx(0.0, 0.0)) continue;
      acc += v * windowed_sinc_value(x - g.freq_at(m), spec.window,
                                     spec.offset);
    }
    amp.values[n] = acc;
  }

  const cplx prefactor = spec.v_fi * spec.amplitude * g.dw /
                         (cplx(0.0, spec.hbar) * kSqrt2Pi);
  for (auto& v : amp.values) v *= prefactor;

  ensure_finite(amp, "first-order amplitude");
  return amp;
}

Signal bardeen_first_order(const DualGrid& g, const TransitionSpec& spec) {
  return first_order_amplitude(g, spec, Potential::constant(1.0));
}

}  // namespace rft
