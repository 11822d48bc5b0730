#pragma once

#include <cstddef>
#include <vector>

#include "rft/signal.hpp"

namespace rft {

// Degenerate-pump four-wave-mixing pair generation. The pump is Gaussian
// with spectral width sigma; the squared pump propagating under group
// velocity dispersion k2 over z in [-L, 0] is
//   P2(t, z) = (2 pi / a) * exp(-t^2 / a),   a(z) = 1/sigma^2 - i k2 z.
// A signal/idler pair at (w_s, w_idl) picks up the sum detuning
// nu = w_s + w_idl - 2 omega_c and the mismatch dk = (k2/4) (w_s - w_idl)^2,
// and the joint amplitude is
//   F(w_s, w_idl) = Int_-L^0 dz Int dt P2(t, z) e^{i nu t}
//                   e^{-i (dk + 2 gamma_p) z}.
struct JsaParams {
  double sigma = 1.0;    // pump spectral width
  double k2 = 0.0;       // group velocity dispersion of the pump
  double gamma_p = 0.0;  // nonlinear phase rate (nonlinearity times power)
  double length = 1.0;   // medium length
  double omega_c = 0.0;  // carrier frequency; map axes are centered on it
  // Pair-generation time window [-t_window/2, t_window/2]; zero or negative
  // selects the widest window the refined kernel can represent.
  double t_window = 0.0;
  // Resolution of the spectral kernel used by the decoupled evaluation.
  std::size_t refine = 8;
  std::size_t n_sum = 2048;
  // Resolution of the brute-force space/time quadrature.
  std::size_t z_steps = 256;
  std::size_t t_steps = 2048;
};

// n-by-n complex map sampled at w_s(i) = omega_c + freq_at(i) down rows and
// w_idl(j) across columns.
struct JsaMap {
  DualGrid grid;
  double omega_c = 0.0;
  std::vector<cplx> values;

  cplx& at(std::size_t i_s, std::size_t i_idl) {
    return values[i_s * grid.n + i_idl];
  }
  const cplx& at(std::size_t i_s, std::size_t i_idl) const {
    return values[i_s * grid.n + i_idl];
  }
};

// Dispersionless-pump closed form: the z integral collapses to the
// phase-matching kernel and the t integral to the pump-pair Gaussian,
//   F(w_s, w_idl) = 2 pi^{3/2} sigma L e^{i kappa L/2} sinc(kappa L/2)
//                   e^{-nu^2 / (4 sigma^2)},
//   kappa = dk + 2 gamma_p - nu^2 k2 / 4.
// Valid deep in the long-window, weak-dispersion regime.
JsaMap jsa_reference(const DualGrid& g, const JsaParams& p);

// Finite-window decoupled evaluation: the time window turns into a spectral
// convolution of the window kernel with the pump-pair Gaussian, and the z
// integral is carried per spectral sample,
//   F(w_s, w_idl) = sigma sqrt(pi) * Sum_{w'} W_T0(w') e^{-(nu-w')^2/4sigma^2}
//                   * W_z(dk + 2 gamma_p - (nu-w')^2 k2/4) * dw',
// on a sum-frequency axis `refine` times denser than the map axis.
JsaMap jsa_rft(const DualGrid& g, const JsaParams& p);

// Brute-force Riemann quadrature of the double integral with the exact
// z-dependent pump pair (no frozen radical); the reference the other two are
// judged against.
JsaMap jsa_direct(const DualGrid& g, const JsaParams& p);

// True when the dispersion is weak enough for the frozen-radical forms:
// |k2| * sigma^2 * L < 1.
bool jsa_weak_dispersion(const JsaParams& p);

double rel_l2(const JsaMap& a, const JsaMap& b);

}  // namespace rft
