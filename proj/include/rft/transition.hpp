#pragma once

#include <cstdint>

#include "rft/grid.hpp"

namespace rft {

// Static data of a transition problem: level layout, couplings, and the
// integration window. Frequencies are angular throughout.
struct TransitionSpec {
  double hbar = 1.0;
  // Height of the integration window (overall amplitude of the process).
  double amplitude = 1.0;
  // First-order matrix element <f|V|i>.
  double v_fi = 1.0;
  // Product of second-order matrix elements <f|V|k><k|V|i>, taken equal for
  // every intermediate level.
  double v_fk_ki = 1.0;
  // Intermediate levels sit at w_k = k * omega0 for k in [-k_max, k_max].
  double omega0 = 0.0;
  long long initial_index = 0;
  long long k_max = 0;
  // Extra energy shift of the initial level (tunneling bias); must be a
  // multiple of dw but deliberately need not sit on the omega0 lattice.
  double bias_offset = 0.0;
  // Integration window [offset, offset + window].
  double window = 0.0;
  double offset = 0.0;

  double omega_i() const {
    return static_cast<double>(initial_index) * omega0 + bias_offset;
  }
  double omega_k(long long k) const { return static_cast<double>(k) * omega0; }
};

// How the self-coupled intermediate level (k equal to the initial index) is
// folded into the second-order sum. `spectral_delta` replaces its transfer
// function by the pure spike 2*pi*delta(w); `literal` keeps the transform of
// the actual linear-ramp trace.
enum class SelfTermMode { spectral_delta, literal };

}  // namespace rft
