#include "rft/potential.hpp"

#include <cmath>
#include <numbers>

namespace rft {

namespace {
constexpr double kSqrt2Pi = 2.50662827463100050242;
}

Potential Potential::constant(double strength) {
  Potential p;
  p.kind_ = PotentialKind::constant_bias;
  p.strength_ = strength;
  return p;
}

Potential Potential::harmonic(double strength, double omega_d,
                              bool resonant_only) {
  Potential p;
  p.kind_ = PotentialKind::harmonic_drive;
  p.strength_ = strength;
  p.omega_d_ = omega_d;
  p.resonant_only_ = resonant_only;
  return p;
}

Potential Potential::gaussian(double strength, double tau) {
  require(tau > 0.0, ErrorCode::invalid_argument,
          "gaussian kick width must be positive");
  Potential p;
  p.kind_ = PotentialKind::gaussian_kick;
  p.strength_ = strength;
  p.tau_ = tau;
  return p;
}

Potential Potential::ramped(double strength, double omega_d, double epsilon) {
  require(epsilon > 0.0, ErrorCode::invalid_argument,
          "ramp rate must be positive");
  Potential p;
  p.kind_ = PotentialKind::ramped_oscillator;
  p.strength_ = strength;
  p.omega_d_ = omega_d;
  p.epsilon_ = epsilon;
  return p;
}

Potential Potential::tabulated_from(Signal spectrum) {
  require(spectrum.domain == Domain::freq, ErrorCode::invalid_argument,
          "tabulated potential must be a frequency-domain signal");
  Potential p;
  p.kind_ = PotentialKind::tabulated;
  p.strength_ = 1.0;
  p.table_ = std::move(spectrum);
  return p;
}

cplx Potential::value(double t) const {
  switch (kind_) {
    case PotentialKind::constant_bias:
      return cplx(strength_, 0.0);
    case PotentialKind::harmonic_drive: {
      const cplx down = std::polar(strength_, -omega_d_ * t);
      if (resonant_only_) return down;
      return down + std::polar(strength_, omega_d_ * t);
    }
    case PotentialKind::gaussian_kick:
      return cplx(strength_ * std::exp(-0.5 * t * t / (tau_ * tau_)), 0.0);
    case PotentialKind::ramped_oscillator:
      return std::polar(strength_ * std::exp(-epsilon_ * std::abs(t)),
                        -omega_d_ * t);
    case PotentialKind::tabulated: {
      // Band-limited interpolant through the tabulated spectrum; at grid
      // times this reproduces inverse_ft exactly.
      const DualGrid& g = table_.grid;
      cplx acc(0.0, 0.0);
      for (std::size_t k = 0; k < g.n; ++k)
        acc += table_.values[k] * std::polar(1.0, -g.freq_at(k) * t);
      return acc * (g.dw / kSqrt2Pi);
    }
  }
  fail(ErrorCode::invariant, "unreachable potential kind");
}

Signal Potential::spectrum(const DualGrid& g) const {
  switch (kind_) {
    case PotentialKind::constant_bias: {
      Signal s = unit_delta(g, 0.0);
      for (auto& v : s.values) v *= strength_ * kSqrt2Pi;
      return s;
    }
    case PotentialKind::harmonic_drive: {
      Signal s(g, Domain::freq);
      s.values[bin_for_freq(g, omega_d_)] += strength_ * kSqrt2Pi / g.dw;
      if (!resonant_only_)
        s.values[bin_for_freq(g, -omega_d_)] += strength_ * kSqrt2Pi / g.dw;
      return s;
    }
    case PotentialKind::gaussian_kick: {
      Signal s(g, Domain::freq);
      for (std::size_t k = 0; k < g.n; ++k) {
        const double w = g.freq_at(k);
        s.values[k] = strength_ * tau_ * std::exp(-0.5 * w * w * tau_ * tau_);
      }
      return s;
    }
    case PotentialKind::ramped_oscillator: {
      Signal s(g, Domain::freq);
      for (std::size_t k = 0; k < g.n; ++k) {
        const double d = g.freq_at(k) - omega_d_;
        s.values[k] =
            strength_ * 2.0 * epsilon_ / (kSqrt2Pi * (d * d + epsilon_ * epsilon_));
      }
      return s;
    }
    case PotentialKind::tabulated:
      require(table_.grid == g, ErrorCode::invalid_argument,
              "tabulated potential grid does not match the requested grid");
      return table_;
  }
  fail(ErrorCode::invariant, "unreachable potential kind");
}

Signal Potential::sample_time(const DualGrid& g) const {
  if (kind_ == PotentialKind::tabulated) {
    require(table_.grid == g, ErrorCode::invalid_argument,
            "tabulated potential grid does not match the requested grid");
    return inverse_ft(table_);
  }
  Signal s(g, Domain::time);
  for (std::size_t i = 0; i < g.n; ++i) s.values[i] = value(g.time_at(i));
  return s;
}

}  // namespace rft
