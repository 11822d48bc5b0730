#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>

#include "rft/error.hpp"

namespace rft {

// Conjugate time/frequency lattice. Both axes are zero-centered:
//   t_n = (n - N/2) * dt,   w_k = (k - N/2) * dw,   n,k in [0, N).
// The spacings obey dw * dt = 2*pi / N exactly, which is what makes the
// discrete transform pair in fourier.hpp unitary and exactly invertible.
struct DualGrid {
  std::size_t n = 0;
  double dt = 0.0;
  double dw = 0.0;

  static DualGrid from_time_step(std::size_t n, double dt) {
    validate(n, dt);
    DualGrid g;
    g.n = n;
    g.dt = dt;
    g.dw = 2.0 * std::numbers::pi / (static_cast<double>(n) * dt);
    return g;
  }

  static DualGrid from_freq_step(std::size_t n, double dw) {
    validate(n, dw);
    DualGrid g;
    g.n = n;
    g.dw = dw;
    g.dt = 2.0 * std::numbers::pi / (static_cast<double>(n) * dw);
    return g;
  }

  double time_at(std::size_t i) const {
    return (static_cast<double>(i) - static_cast<double>(n) / 2.0) * dt;
  }

  double freq_at(std::size_t i) const {
    return (static_cast<double>(i) - static_cast<double>(n) / 2.0) * dw;
  }

  double time_span() const { return static_cast<double>(n) * dt; }
  double freq_span() const { return static_cast<double>(n) * dw; }

  bool operator==(const DualGrid& o) const {
    return n == o.n && dt == o.dt && dw == o.dw;
  }

 private:
  static void validate(std::size_t n, double step) {
    require(n >= 8 && (n & (n - 1)) == 0, ErrorCode::invariant,
            "grid size must be a power of two and at least 8");
    require(std::isfinite(step) && step > 0.0, ErrorCode::invariant,
            "grid step must be finite and positive");
  }
};

}  // namespace rft
