#pragma once

#include <cstddef>
#include <vector>

#include "rft/signal.hpp"

namespace rft {

// Unnormalized radix-2 DFT, in place. sign = +1 applies e^{+2*pi*i*nk/N},
// sign = -1 applies e^{-2*pi*i*nk/N}; neither divides by N. Length must be a
// power of two.
void fft_inplace(std::vector<cplx>& a, int sign);

// Continuum-convention transform pair on the centered grid:
//   forward:  F[k] = (dt/sqrt(2*pi)) * sum_n f[n] * e^{+i w_k t_n}
//   inverse:  f[n] = (dw/sqrt(2*pi)) * sum_k F[k] * e^{-i w_k t_n}
// The pair is exactly unitary: inverse(forward(f)) == f to rounding, and
// sum |F|^2 dw == sum |f|^2 dt.
Signal forward_ft(const Signal& time_signal);
Signal inverse_ft(const Signal& freq_signal);

// Linear (non-circular) convolution of two spectra on the same grid:
//   c[n] = sum_m a[m] * b[n - m + N/2] * dw
// so that unit_delta(g, 0) is the exact identity element. Computed with
// zero-padding to 2N; no wraparound contributions exist by construction.
Signal convolve(const Signal& a, const Signal& b);

// Integral of e^{i x t} over the window t in [r, r+T]:
//   T * e^{i x (r + T/2)} * sinc(x T / 2),  sinc(u) = sin(u)/u.
// This is the finite-window kernel every windowed transform reduces to.
cplx windowed_sinc_value(double x, double window, double offset);

// The kernel above sampled on the grid's frequency axis.
Signal windowed_sinc_spectrum(const DualGrid& g, double window, double offset);

// Moves spectral content by a whole number of bins; samples shifted past
// either edge are dropped, vacated bins are zero.
Signal shift_bins(const Signal& s, long long bins);

// Frequency bin whose center is `omega`; throws unless omega sits on the
// lattice (within 1e-9 bins) and inside the grid.
std::size_t bin_for_freq(const DualGrid& g, double omega);

// Re-samples a spectrum on a `factor` times denser frequency axis by
// zero-extending its time trace. Exact (band-limited interpolation) whenever
// the underlying time content lies inside the original span. `factor` must be
// a power of two.
Signal refine_spectrum(const Signal& freq_signal, std::size_t factor);

// Throws a numeric error if any sample is NaN or infinite.
void ensure_finite(const Signal& s, const char* label);

}  // namespace rft
