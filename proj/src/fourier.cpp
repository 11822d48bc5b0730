#include "rft/fourier.hpp"

#include <cmath>
#include <numbers>

namespace rft {

namespace {

constexpr double kInvSqrt2Pi = 0.39894228040143267794;  // 1/sqrt(2*pi)

// Each twiddle comes straight from polar(), never from repeated
// multiplication, so rounding does not accumulate across stages.
std::vector<cplx> twiddle_table(std::size_t n, int sign) {
  std::vector<cplx> w(n / 2);
  const double step = sign * 2.0 * std::numbers::pi / static_cast<double>(n);
  for (std::size_t j = 0; j < n / 2; ++j)
    w[j] = std::polar(1.0, step * static_cast<double>(j));
  return w;
}

}  // namespace

void fft_inplace(std::vector<cplx>& a, int sign) {
  const std::size_t n = a.size();
  require(n >= 2 && (n & (n - 1)) == 0, ErrorCode::invariant,
          "fft length must be a power of two");
  require(sign == 1 || sign == -1, ErrorCode::invalid_argument,
          "fft sign must be +1 or -1");

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  const std::vector<cplx> w = twiddle_table(n, sign);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t base = 0; base < n; base += len) {
      for (std::size_t j = 0; j < len / 2; ++j) {
        const cplx u = a[base + j];
        const cplx v = a[base + j + len / 2] * w[j * stride];
        a[base + j] = u + v;
        a[base + j + len / 2] = u - v;
      }
    }
  }
}

namespace {

// The centered-axis phases e^{i w_k t_n} factor into (-1)^n, (-1)^k and a
// plain DFT once N is a multiple of 4 (i^N = 1), which the grid guarantees.
Signal transform(const Signal& in, Domain out_domain, int sign, double scale) {
  const std::size_t n = in.grid.n;
  Signal out(in.grid, out_domain);
  for (std::size_t i = 0; i < n; ++i) {
    const double flip = (i & 1) ? -1.0 : 1.0;
    out.values[i] = in.values[i] * flip;
  }
  fft_inplace(out.values, sign);
  for (std::size_t i = 0; i < n; ++i) {
    const double flip = (i & 1) ? -1.0 : 1.0;
    out.values[i] *= flip * scale;
  }
  return out;
}

}  // namespace

Signal forward_ft(const Signal& time_signal) {
  require(time_signal.domain == Domain::time, ErrorCode::invalid_argument,
          "forward transform expects a time-domain signal");
  return transform(time_signal, Domain::freq, +1,
                   time_signal.grid.dt * kInvSqrt2Pi);
}

Signal inverse_ft(const Signal& freq_signal) {
  require(freq_signal.domain == Domain::freq, ErrorCode::invalid_argument,
          "inverse transform expects a frequency-domain signal");
  return transform(freq_signal, Domain::time, -1,
                   freq_signal.grid.dw * kInvSqrt2Pi);
}

Signal convolve(const Signal& a, const Signal& b) {
  require(a.grid == b.grid, ErrorCode::invalid_argument,
          "convolution operands live on different grids");
  require(a.domain == Domain::freq && b.domain == Domain::freq,
          ErrorCode::invalid_argument,
          "convolution is defined on frequency-domain signals");
  const std::size_t n = a.grid.n;
  const std::size_t m = 2 * n;

  std::vector<cplx> fa(m), fb(m);
  std::copy(a.values.begin(), a.values.end(), fa.begin());
  std::copy(b.values.begin(), b.values.end(), fb.begin());
  fft_inplace(fa, -1);
  fft_inplace(fb, -1);
  for (std::size_t i = 0; i < m; ++i) fa[i] *= fb[i];
  fft_inplace(fa, +1);

  Signal out(a.grid, Domain::freq);
  const double scale = a.grid.dw / static_cast<double>(m);
  for (std::size_t i = 0; i < n; ++i) out.values[i] = fa[i + n / 2] * scale;
  return out;
}

cplx windowed_sinc_value(double x, double window, double offset) {
  const double u = 0.5 * x * window;
  double sinc;
  if (std::abs(u) < 1e-4) {
    const double u2 = u * u;
    sinc = 1.0 - u2 / 6.0 + u2 * u2 / 120.0;
  } else {
    sinc = std::sin(u) / u;
  }
  return window * sinc * std::polar(1.0, x * (offset + 0.5 * window));
}

Signal windowed_sinc_spectrum(const DualGrid& g, double window,
                              double offset) {
  require(window > 0.0, ErrorCode::invalid_argument,
          "window length must be positive");
  Signal out(g, Domain::freq);
  for (std::size_t k = 0; k < g.n; ++k)
    out.values[k] = windowed_sinc_value(g.freq_at(k), window, offset);
  return out;
}

Signal shift_bins(const Signal& s, long long bins) {
  Signal out(s.grid, s.domain);
  const auto n = static_cast<long long>(s.size());
  for (long long i = 0; i < n; ++i) {
    const long long src = i - bins;
    if (src >= 0 && src < n)
      out.values[static_cast<std::size_t>(i)] =
          s.values[static_cast<std::size_t>(src)];
  }
  return out;
}

std::size_t bin_for_freq(const DualGrid& g, double omega) {
  const double pos = omega / g.dw + static_cast<double>(g.n) / 2.0;
  const auto idx = static_cast<long long>(std::llround(pos));
  require(std::abs(pos - static_cast<double>(idx)) < 1e-9,
          ErrorCode::invalid_argument, "frequency is not grid aligned");
  require(idx >= 0 && idx < static_cast<long long>(g.n),
          ErrorCode::invalid_argument, "frequency lies outside the grid");
  return static_cast<std::size_t>(idx);
}

Signal refine_spectrum(const Signal& freq_signal, std::size_t factor) {
  require(freq_signal.domain == Domain::freq, ErrorCode::invalid_argument,
          "refinement expects a frequency-domain signal");
  require(factor >= 1 && (factor & (factor - 1)) == 0,
          ErrorCode::invalid_argument,
          "refinement factor must be a power of two");
  if (factor == 1) return freq_signal;

  const Signal trace = inverse_ft(freq_signal);
  const DualGrid big =
      DualGrid::from_time_step(freq_signal.grid.n * factor, trace.grid.dt);
  Signal padded(big, Domain::time);
  const std::size_t base = big.n / 2 - trace.grid.n / 2;
  for (std::size_t i = 0; i < trace.grid.n; ++i)
    padded.values[base + i] = trace.values[i];
  return forward_ft(padded);
}

void ensure_finite(const Signal& s, const char* label) {
  for (const auto& v : s.values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      fail(ErrorCode::numeric,
           std::string(label) + " produced a non-finite sample");
  }
}

}  // namespace rft
