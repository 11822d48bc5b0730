#include "rft/second_order.hpp"

#include <cmath>
#include <numbers>

namespace rft {

namespace {

constexpr double kSqrt2Pi = 2.50662827463100050242;
constexpr double kTwoPi = 6.28318530717958647692;

// Window sample count; the window must be a whole number of time steps so
// that tiling it across the span is exact.
std::size_t window_samples(const DualGrid& g, double window) {
  require(window > 0.0, ErrorCode::invariant,
          "integration window must be positive");
  const double ratio = window / g.dt;
  const auto len = static_cast<long long>(std::llround(ratio));
  require(len >= 1 && std::abs(ratio - static_cast<double>(len)) < 1e-9,
          ErrorCode::invariant,
          "window length must be a whole number of time steps");
  require(len <= static_cast<long long>(g.n), ErrorCode::invariant,
          "window does not fit on the grid");
  return static_cast<std::size_t>(len);
}

void validate_levels(const DualGrid& g, const TransitionSpec& spec) {
  require(spec.k_max >= 1, ErrorCode::invariant,
          "at least one intermediate level is required");
  require(spec.omega0 > 0.0, ErrorCode::invariant,
          "level spacing must be positive");
  require(spec.hbar > 0.0, ErrorCode::invariant, "hbar must be positive");
  // Shifting by w_k must stay inside the grid for every level, with a margin
  // so spectral content near the level is not silently aliased away.
  const double reach =
      (static_cast<double>(spec.k_max) + std::abs(static_cast<double>(
                                             spec.initial_index))) *
      spec.omega0;
  require(reach <= (static_cast<double>(g.n) / 2.0 - 1.0) * g.dw,
          ErrorCode::invariant,
          "intermediate levels exceed the representable frequency range");
}

}  // namespace

std::vector<cplx> impulse_response(const DualGrid& g,
                                   const TransitionSpec& spec,
                                   const Potential& pot, long long k) {
  const std::size_t len = window_samples(g, spec.window);
  const Signal vt = pot.spectrum(g);
  const double w_ki = spec.omega_k(k) - spec.omega_i();

  std::vector<cplx> trace(len);
  // trace[0] corresponds to zero elapsed time and is identically zero.
  for (std::size_t j = 1; j < len; ++j) {
    const double elapsed = static_cast<double>(j) * g.dt;
    cplx acc(0.0, 0.0);
    for (std::size_t m = 0; m < g.n; ++m) {
      if (vt.values[m] == cplx(0.0, 0.0)) continue;
      acc += vt.values[m] *
             windowed_sinc_value(w_ki - g.freq_at(m), elapsed, spec.offset);
    }
    trace[j] = acc * g.dw;
  }
  return trace;
}

Signal transfer_function(const DualGrid& g, const TransitionSpec& spec,
                         const Potential& pot, long long k,
                         SelfTermMode mode) {
  if (k == spec.initial_index && mode == SelfTermMode::spectral_delta) {
    Signal spike = unit_delta(g, 0.0);
    for (auto& v : spike.values) v *= kTwoPi;
    return spike;
  }

  const std::size_t len = window_samples(g, spec.window);
  const std::vector<cplx> trace = impulse_response(g, spec, pot, k);

  // Periodic tiling aligned so a window boundary falls on t = 0.
  Signal tiled(g, Domain::time);
  const auto l = static_cast<long long>(len);
  const auto half = static_cast<long long>(g.n / 2);
  for (long long nidx = 0; nidx < static_cast<long long>(g.n); ++nidx) {
    const long long j = (((nidx - half) % l) + l) % l;
    tiled.values[static_cast<std::size_t>(nidx)] =
        trace[static_cast<std::size_t>(j)];
  }

  Signal out = forward_ft(tiled);
  for (std::size_t i = 0; i < g.n; ++i) {
    out.values[i] *= kSqrt2Pi;
    if (spec.offset != 0.0)
      out.values[i] *= std::polar(1.0, g.freq_at(i) * spec.offset);
  }
  ensure_finite(out, "transfer function");
  return out;
}

Signal second_order_amplitude(const DualGrid& g, const TransitionSpec& spec,
                              const Potential& pot, SelfTermMode mode) {
  validate_levels(g, spec);

  // The outer integral always runs over the whole centered span; spec.window
  // only sets the restart period of the inner integral.
  const Signal window =
      windowed_sinc_spectrum(g, g.time_span(), -0.5 * g.time_span());
  const Signal vt = pot.spectrum(g);
  const Signal base = convolve(window, vt);

  Signal total(g, Domain::freq);
  for (long long k = -spec.k_max; k <= spec.k_max; ++k) {
    const Signal psi = transfer_function(g, spec, pot, k, mode);
    const long long bins = static_cast<long long>(
                               bin_for_freq(g, spec.omega_k(k))) -
                           static_cast<long long>(g.n / 2);
    const Signal term = convolve(base, shift_bins(psi, bins));
    for (std::size_t i = 0; i < g.n; ++i) total.values[i] += term.values[i];
  }

  const cplx denom = kTwoPi * cplx(0.0, spec.hbar);
  const cplx prefactor = spec.amplitude * spec.v_fk_ki /
                         (denom * denom * static_cast<double>(spec.k_max));
  for (auto& v : total.values) v *= prefactor;

  ensure_finite(total, "second-order amplitude");
  return total;
}

namespace {

// Shared resolvent series behind the drive and tunneling closed forms.
SeriesResult resolvent_series(const DualGrid& g, const TransitionSpec& spec,
                              double strength, double omega_d) {
  validate_levels(g, spec);

  // Exact double Dyson integral over the whole centered span; no restart
  // windows are involved, so spec.window plays no role here.
  const double span = g.time_span();
  const double start = spec.offset - 0.5 * span;

  SeriesResult res{Signal(g, Domain::freq), {}};
  const double w_center = spec.omega_i() + 2.0 * omega_d;

  for (long long k = -spec.k_max; k <= spec.k_max; ++k) {
    const double d_k = spec.omega_k(k) - spec.omega_i() - omega_d;
    if (std::abs(d_k) < 0.5 * g.dw) {
      res.skipped.push_back(k);
      continue;
    }
    const cplx gain = 1.0 / (cplx(0.0, d_k));
    const cplx boundary_phase = std::polar(1.0, d_k * start);
    const double w_sat = spec.omega_k(k) + omega_d;
    for (std::size_t i = 0; i < g.n; ++i) {
      const double w = g.freq_at(i);
      const cplx main = windowed_sinc_value(w - w_center, span, start);
      const cplx satellite = windowed_sinc_value(w - w_sat, span, start);
      res.amplitude.values[i] += gain * (main - boundary_phase * satellite);
    }
  }

  const cplx ih = cplx(0.0, spec.hbar);
  const cplx prefactor = spec.amplitude * spec.v_fk_ki * strength * strength /
                         (ih * ih * static_cast<double>(spec.k_max));
  for (auto& v : res.amplitude.values) v *= prefactor;

  ensure_finite(res.amplitude, "resolvent series amplitude");
  return res;
}

}  // namespace

SeriesResult second_order_golden_rule(const DualGrid& g,
                                      const TransitionSpec& spec,
                                      double strength, double omega_d) {
  return resolvent_series(g, spec, strength, omega_d);
}

SeriesResult bardeen_second_order(const DualGrid& g,
                                  const TransitionSpec& spec) {
  return resolvent_series(g, spec, 1.0, 0.0);
}

}  // namespace rft
