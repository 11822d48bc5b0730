#pragma once

#include "rft/fourier.hpp"
#include "rft/signal.hpp"

namespace rft {

enum class PotentialKind {
  constant_bias,
  harmonic_drive,
  gaussian_kick,
  ramped_oscillator,
  tabulated,
};

// Time-dependent perturbation model. Every kind provides both views of the
// same function and they agree exactly:
//   value(t)        continuum time sample
//   spectrum(g)     continuum Fourier transform, rendered on the grid
// Dirac components render as single bins of height (weight / dw), which is
// the exact identity element of convolve(). Keeping the two views consistent
// is what lets spectral pipelines be compared against time-domain quadrature
// without scale fudging.
class Potential {
 public:
  static Potential constant(double strength);
  // 2*strength*cos(w_d t); with resonant_only, just strength*e^{-i w_d t}.
  static Potential harmonic(double strength, double omega_d,
                            bool resonant_only);
  // strength * exp(-t^2 / (2 tau^2))
  static Potential gaussian(double strength, double tau);
  // strength * e^{-i w_d t} * e^{-eps |t|}; spectrum is the Lorentzian
  // 2*eps*strength / (sqrt(2 pi) ((w - w_d)^2 + eps^2)).
  static Potential ramped(double strength, double omega_d, double epsilon);
  // Arbitrary spectrum on a fixed grid; value(t) evaluates the band-limited
  // interpolant, so the pair stays exactly consistent.
  static Potential tabulated_from(Signal spectrum);

  PotentialKind kind() const { return kind_; }
  double strength() const { return strength_; }
  double omega_d() const { return omega_d_; }
  double tau() const { return tau_; }
  double epsilon() const { return epsilon_; }
  bool resonant_only() const { return resonant_only_; }

  cplx value(double t) const;
  Signal spectrum(const DualGrid& g) const;
  Signal sample_time(const DualGrid& g) const;

 private:
  Potential() = default;

  PotentialKind kind_ = PotentialKind::constant_bias;
  double strength_ = 0.0;
  double omega_d_ = 0.0;
  double tau_ = 0.0;
  double epsilon_ = 0.0;
  bool resonant_only_ = false;
  Signal table_;
};

}  // namespace rft
