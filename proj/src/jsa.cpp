#include "rft/jsa.hpp"

#include <cmath>
#include <numbers>

#include "rft/fourier.hpp"

namespace rft {

namespace {

constexpr double kPi = std::numbers::pi;

void validate(const JsaParams& p) {
  require(p.sigma > 0.0, ErrorCode::invariant,
          "pump spectral width must be positive");
  require(p.length > 0.0, ErrorCode::invariant,
          "medium length must be positive");
  require(p.refine >= 1 && (p.refine & (p.refine - 1)) == 0,
          ErrorCode::invariant,
          "sum-frequency refinement must be a power of two");
  require(p.n_sum >= 2, ErrorCode::invariant,
          "sum-frequency kernel needs at least two samples");
  require(p.z_steps >= 1 && p.t_steps >= 1, ErrorCode::invariant,
          "quadrature step counts must be positive");
}

double mismatch(const JsaParams& p, double w_s, double w_idl) {
  const double d = w_s - w_idl;
  return 0.25 * p.k2 * d * d;
}

// Int_-L^0 e^{-i kappa z} dz
cplx phase_matching(double kappa, double length) {
  return windowed_sinc_value(-kappa, length, -length);
}

JsaMap make_map(const DualGrid& g, const JsaParams& p) {
  JsaMap m;
  m.grid = g;
  m.omega_c = p.omega_c;
  m.values.assign(g.n * g.n, cplx(0.0, 0.0));
  return m;
}

double effective_window(const DualGrid& g, const JsaParams& p) {
  const double dws = g.dw / static_cast<double>(p.refine);
  const double widest = 2.0 * kPi / dws;
  if (p.t_window <= 0.0) return widest;
  require(p.t_window <= widest * (1.0 + 1e-12), ErrorCode::invariant,
          "pair time window exceeds what the refined kernel resolves");
  return p.t_window;
}

}  // namespace

bool jsa_weak_dispersion(const JsaParams& p) {
  return std::abs(p.k2) * p.sigma * p.sigma * p.length < 1.0;
}

JsaMap jsa_reference(const DualGrid& g, const JsaParams& p) {
  validate(p);
  JsaMap m = make_map(g, p);
  const double scale =
      2.0 * std::pow(kPi, 1.5) * p.sigma * p.length;
  for (std::size_t i = 0; i < g.n; ++i) {
    for (std::size_t j = i; j < g.n; ++j) {
      const double w_s = g.freq_at(i);
      const double w_idl = g.freq_at(j);
      const double nu = w_s + w_idl;
      const double kappa =
          mismatch(p, w_s, w_idl) + 2.0 * p.gamma_p - 0.25 * nu * nu * p.k2;
      const double u = 0.5 * kappa * p.length;
      const double sinc =
          std::abs(u) < 1e-8 ? 1.0 - u * u / 6.0 : std::sin(u) / u;
      const cplx v = scale * sinc * std::polar(1.0, u) *
                     std::exp(-0.25 * nu * nu / (p.sigma * p.sigma));
      m.at(i, j) = v;
      m.at(j, i) = v;
    }
  }
  return m;
}

JsaMap jsa_rft(const DualGrid& g, const JsaParams& p) {
  validate(p);
  JsaMap m = make_map(g, p);
  const double dws = g.dw / static_cast<double>(p.refine);
  const double window = effective_window(g, p);
  const double inv4s2 = 0.25 / (p.sigma * p.sigma);

  // Window kernel samples on the refined sum-frequency axis. The window is
  // centered, so the kernel is real.
  std::vector<double> wk(p.n_sum);
  for (std::size_t q = 0; q < p.n_sum; ++q) {
    const double wp =
        (static_cast<double>(q) - static_cast<double>(p.n_sum) / 2.0) * dws;
    const double u = 0.5 * wp * window;
    const double sinc =
        std::abs(u) < 1e-8 ? 1.0 - u * u / 6.0 : std::sin(u) / u;
    wk[q] = window * sinc;
  }

  const double scale = p.sigma * std::sqrt(kPi) * dws;
  for (std::size_t i = 0; i < g.n; ++i) {
    for (std::size_t j = i; j < g.n; ++j) {
      const double nu = g.freq_at(i) + g.freq_at(j);
      const double dk = mismatch(p, g.freq_at(i), g.freq_at(j));
      cplx acc(0.0, 0.0);
      for (std::size_t q = 0; q < p.n_sum; ++q) {
        if (wk[q] == 0.0) continue;
        const double wp = (static_cast<double>(q) -
                           static_cast<double>(p.n_sum) / 2.0) *
                          dws;
        const double x = nu - wp;
        const double kappa = dk + 2.0 * p.gamma_p - 0.25 * x * x * p.k2;
        acc += wk[q] * std::exp(-x * x * inv4s2) *
               phase_matching(kappa, p.length);
      }
      const cplx v = scale * acc;
      m.at(i, j) = v;
      m.at(j, i) = v;
    }
  }
  return m;
}

JsaMap jsa_direct(const DualGrid& g, const JsaParams& p) {
  validate(p);
  JsaMap m = make_map(g, p);
  const double window = effective_window(g, p);

  const double dz = p.length / static_cast<double>(p.z_steps);
  const double dt = window / static_cast<double>(p.t_steps);

  // Pair-emission table over the quadrature lattice, then one time
  // transform per distinct sum frequency; the reordering is exact.
  std::vector<double> zs(p.z_steps), ts(p.t_steps);
  for (std::size_t q = 0; q < p.z_steps; ++q)
    zs[q] = -p.length + (static_cast<double>(q) + 0.5) * dz;
  for (std::size_t u = 0; u < p.t_steps; ++u)
    ts[u] = -0.5 * window + (static_cast<double>(u) + 0.5) * dt;

  std::vector<std::vector<cplx>> pair(p.z_steps,
                                      std::vector<cplx>(p.t_steps));
  for (std::size_t q = 0; q < p.z_steps; ++q) {
    const cplx a(1.0 / (p.sigma * p.sigma), -p.k2 * zs[q]);
    const cplx inv_a = 1.0 / a;
    for (std::size_t u = 0; u < p.t_steps; ++u)
      pair[q][u] =
          2.0 * kPi * inv_a * std::exp(-ts[u] * ts[u] * inv_a);
  }

  // nu takes 2n-1 distinct values across the map.
  const std::size_t n = g.n;
  std::vector<std::vector<cplx>> sum_t(2 * n - 1,
                                       std::vector<cplx>(p.z_steps));
  std::vector<cplx> phase(p.t_steps);
  for (std::size_t s = 0; s < 2 * n - 1; ++s) {
    const double nu = (static_cast<double>(s) - static_cast<double>(n)) * g.dw;
    for (std::size_t u = 0; u < p.t_steps; ++u)
      phase[u] = std::polar(dt, nu * ts[u]);
    for (std::size_t q = 0; q < p.z_steps; ++q) {
      cplx acc(0.0, 0.0);
      for (std::size_t u = 0; u < p.t_steps; ++u)
        acc += pair[q][u] * phase[u];
      sum_t[s][q] = acc;
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double dk = mismatch(p, g.freq_at(i), g.freq_at(j));
      const std::size_t s = i + j;
      cplx acc(0.0, 0.0);
      for (std::size_t q = 0; q < p.z_steps; ++q)
        acc += sum_t[s][q] * std::polar(dz, -(dk + 2.0 * p.gamma_p) * zs[q]);
      m.at(i, j) = acc;
      m.at(j, i) = acc;
    }
  }
  return m;
}

double rel_l2(const JsaMap& a, const JsaMap& b) {
  require(a.grid.n == b.grid.n, ErrorCode::invalid_argument,
          "map comparison needs equal sizes");
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    num += std::norm(a.values[i] - b.values[i]);
    den += std::norm(b.values[i]);
  }
  require(den > 0.0, ErrorCode::invalid_argument,
          "map comparison reference is identically zero");
  return std::sqrt(num / den);
}

}  // namespace rft
