#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "rft/grid.hpp"

namespace rft {

using cplx = std::complex<double>;

enum class Domain { time, freq };

// A sampled complex signal bound to its grid. `domain` says which axis the
// index runs over; values.size() == grid.n always holds after construction.
struct Signal {
  DualGrid grid;
  Domain domain = Domain::time;
  std::vector<cplx> values;

  Signal() = default;
  Signal(const DualGrid& g, Domain d) : grid(g), domain(d), values(g.n) {}
  Signal(const DualGrid& g, Domain d, std::vector<cplx> v)
      : grid(g), domain(d), values(std::move(v)) {
    require(values.size() == grid.n, ErrorCode::invariant,
            "signal length does not match its grid");
  }

  std::size_t size() const { return values.size(); }
  double axis_at(std::size_t i) const {
    return domain == Domain::time ? grid.time_at(i) : grid.freq_at(i);
  }
  double step() const { return domain == Domain::time ? grid.dt : grid.dw; }
};

// Discrete stand-in for a Dirac spike of unit integral at the bin nearest
// `omega`: one sample of height 1/dw. Convolving with it (see fourier.hpp)
// is the identity when omega = 0, a pure bin shift otherwise.
inline Signal unit_delta(const DualGrid& g, double omega) {
  Signal s(g, Domain::freq);
  double pos = omega / g.dw + static_cast<double>(g.n) / 2.0;
  auto idx = static_cast<long long>(std::llround(pos));
  require(std::abs(pos - static_cast<double>(idx)) < 1e-9,
          ErrorCode::invariant, "delta frequency is not grid aligned");
  require(idx >= 0 && idx < static_cast<long long>(g.n), ErrorCode::invariant,
          "delta frequency lies outside the grid");
  s.values[static_cast<std::size_t>(idx)] = cplx(1.0 / g.dw, 0.0);
  return s;
}

inline double norm_l2(const Signal& s) {
  double acc = 0.0;
  for (const auto& v : s.values) acc += std::norm(v);
  return std::sqrt(acc * s.step());
}

// Relative L2 distance ||a-b|| / ||b||; b is the reference.
inline double rel_l2(const Signal& a, const Signal& b) {
  require(a.size() == b.size(), ErrorCode::invalid_argument,
          "relative error needs signals of equal length");
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num += std::norm(a.values[i] - b.values[i]);
    den += std::norm(b.values[i]);
  }
  require(den > 0.0, ErrorCode::invalid_argument,
          "relative error reference is identically zero");
  return std::sqrt(num / den);
}

}  // namespace rft
