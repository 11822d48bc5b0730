#include <doctest.h>

#include <cmath>

#include "rft/potential.hpp"

using namespace rft;

namespace {
constexpr double kSqrt2Pi = 2.50662827463100050242;

// The defining consistency property: the tabulated spectrum must be the
// transform of the time samples, with no leftover scale factors.
double spectrum_vs_sampled(const Potential& p, const DualGrid& g) {
  return rel_l2(p.spectrum(g), forward_ft(p.sample_time(g)));
}
}  // namespace

TEST_CASE("constant bias spectrum is an exact spike") {
  const DualGrid g = DualGrid::from_time_step(128, 0.1);
  const Potential p = Potential::constant(0.7);
  const Signal s = p.spectrum(g);
  CHECK(std::abs(s.values[g.n / 2] - cplx(0.7 * kSqrt2Pi / g.dw, 0.0)) <
        1e-12 / g.dw);
  CHECK(spectrum_vs_sampled(p, g) < 1e-12);
}

TEST_CASE("unit-strength scaled constant renders the identity delta") {
  const DualGrid g = DualGrid::from_time_step(64, 0.2);
  const Potential p = Potential::constant(1.0 / kSqrt2Pi);
  const Signal s = p.spectrum(g);
  const Signal d = unit_delta(g, 0.0);
  CHECK(rel_l2(s, d) < 1e-13);
}

TEST_CASE("harmonic drive spectrum holds one spike per tone") {
  const DualGrid g = DualGrid::from_time_step(128, 0.1);
  const double wd = 9.0 * g.dw;

  const Potential both = Potential::harmonic(0.5, wd, false);
  const Signal s = both.spectrum(g);
  CHECK(std::abs(s.values[bin_for_freq(g, wd)] -
                 cplx(0.5 * kSqrt2Pi / g.dw, 0.0)) < 1e-12 / g.dw);
  CHECK(std::abs(s.values[bin_for_freq(g, -wd)] -
                 cplx(0.5 * kSqrt2Pi / g.dw, 0.0)) < 1e-12 / g.dw);
  CHECK(spectrum_vs_sampled(both, g) < 1e-12);

  const Potential res = Potential::harmonic(0.5, wd, true);
  const Signal r = res.spectrum(g);
  CHECK(std::abs(r.values[bin_for_freq(g, -wd)]) == 0.0);
  CHECK(spectrum_vs_sampled(res, g) < 1e-12);
}

TEST_CASE("gaussian kick spectrum matches its sampled transform") {
  const DualGrid g = DualGrid::from_time_step(512, 0.1);
  const Potential p = Potential::gaussian(1.3, 0.9);
  CHECK(spectrum_vs_sampled(p, g) < 1e-12);
}

TEST_CASE("damped oscillator spectrum is the shifted lorentzian") {
  const DualGrid g = DualGrid::from_time_step(1024, 0.05);
  const double eps = 8.0 * g.dw;
  const double wd = 16.0 * g.dw;
  const Potential p = Potential::ramped(0.6, wd, eps);

  const Signal s = p.spectrum(g);
  const double peak = 2.0 * 0.6 / (eps * kSqrt2Pi);
  CHECK(std::abs(s.values[bin_for_freq(g, wd)].real() - peak) < 1e-12 * peak);

  // The |t| kink gives the spectrum 1/w^2 tails, and whatever lies beyond
  // the Nyquist edge wraps back into the sampled transform. That aliasing
  // floor, not the identity, limits the agreement here. Halving dt pushes
  // the tails twice as far out, shrinking the wrapped floor fourfold per
  // bin; the doubled band dilutes that to sqrt(2)/4 in relative L2.
  const double gap = spectrum_vs_sampled(p, g);
  CHECK(gap < 5e-3);
  const DualGrid dense = DualGrid::from_time_step(2048, 0.025);
  const double gap_dense = spectrum_vs_sampled(p, dense);
  CHECK(gap_dense < 0.40 * gap);
}

TEST_CASE("tabulated potential interpolates consistently") {
  const DualGrid g = DualGrid::from_time_step(128, 0.1);
  const Potential analytic = Potential::gaussian(0.8, 0.7);
  const Potential tab = Potential::tabulated_from(analytic.spectrum(g));

  CHECK(rel_l2(tab.spectrum(g), analytic.spectrum(g)) == 0.0);

  // At grid times the interpolant equals the inverse transform.
  const Signal grid_trace = tab.sample_time(g);
  const Signal direct = inverse_ft(analytic.spectrum(g));
  CHECK(rel_l2(grid_trace, direct) < 1e-13);

  // Off the grid it evaluates the band-limited interpolant, which for a
  // well-resolved gaussian is the gaussian itself.
  for (double t : {0.033, -1.27, 2.501}) {
    CHECK(std::abs(tab.value(t) - analytic.value(t)) < 1e-10);
  }

  const DualGrid other = DualGrid::from_time_step(64, 0.1);
  CHECK_THROWS_AS(tab.spectrum(other), rft::Error);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(Potential::gaussian(1.0, 0.0), rft::Error);
  CHECK_THROWS_AS(Potential::ramped(1.0, 1.0, -2.0), rft::Error);
}
