#include <doctest.h>

#include <cmath>

#include "rft/oracle.hpp"
#include "rft/second_order.hpp"

using namespace rft;

namespace {

constexpr double kSqrt2Pi = 2.50662827463100050242;
constexpr double kTwoPi = 6.28318530717958647692;

// Levels aligned with the restart window (one full oscillation per window):
// the regime where the window decoupling is exact for detuned levels.
TransitionSpec aligned_spec(const DualGrid& g, std::size_t fraction,
                            long long k_max, long long initial) {
  TransitionSpec s;
  s.window = g.time_span() / static_cast<double>(fraction);
  s.offset = 0.0;
  s.omega0 = static_cast<double>(fraction) * g.dw;
  s.k_max = k_max;
  s.initial_index = initial;
  return s;
}

Potential unit_delta_potential() {
  return Potential::constant(1.0 / kSqrt2Pi);
}

}  // namespace

TEST_CASE("impulse response of a flat spectrum follows the closed form") {
  const DualGrid g = DualGrid::from_time_step(64, 0.2);
  const TransitionSpec spec = aligned_spec(g, 4, 2, 0);
  const Potential pot = unit_delta_potential();

  const auto self = impulse_response(g, spec, pot, 0);
  REQUIRE(self.size() == 16);
  for (std::size_t j = 0; j < self.size(); ++j) {
    // Resonant level: the accumulated integral is a linear ramp.
    CHECK(std::abs(self[j] - cplx(static_cast<double>(j) * g.dt, 0.0)) <
          1e-12);
  }

  const auto detuned = impulse_response(g, spec, pot, 2);
  const double w_ki = 2.0 * spec.omega0;
  for (std::size_t j = 0; j < detuned.size(); ++j) {
    const double t = static_cast<double>(j) * g.dt;
    const cplx expect =
        (std::polar(1.0, w_ki * t) - cplx(1.0, 0.0)) / cplx(0.0, w_ki);
    CHECK(std::abs(detuned[j] - expect) < 1e-12);
  }
}

TEST_CASE("self level in spike mode is exactly 2 pi delta") {
  const DualGrid g = DualGrid::from_time_step(64, 0.2);
  const TransitionSpec spec = aligned_spec(g, 4, 2, 0);
  const Signal tf = transfer_function(g, spec, unit_delta_potential(), 0,
                                      SelfTermMode::spectral_delta);
  for (std::size_t i = 0; i < g.n; ++i) {
    const cplx expect =
        (i == g.n / 2) ? cplx(kTwoPi / g.dw, 0.0) : cplx(0.0, 0.0);
    CHECK(std::abs(tf.values[i] - expect) < 1e-12);
  }
}

TEST_CASE("detuned transfer function carries the two-spike resolvent") {
  const DualGrid g = DualGrid::from_time_step(128, 0.1);
  const TransitionSpec spec = aligned_spec(g, 8, 3, 0);
  const Potential pot = unit_delta_potential();

  for (long long k : {-3LL, -1LL, 2LL}) {
    const Signal tf =
        transfer_function(g, spec, pot, k, SelfTermMode::literal);
    const double w_ki = spec.omega_k(k) - spec.omega_i();

    // Spike of weight -2 pi i / w_ki at -w_ki, +2 pi i / w_ki at zero;
    // stored bin values are weights divided by dw.
    const cplx lead = cplx(0.0, -kTwoPi / w_ki) / g.dw;
    for (std::size_t i = 0; i < g.n; ++i) {
      cplx expect(0.0, 0.0);
      if (i == bin_for_freq(g, -w_ki)) expect = lead;
      if (i == g.n / 2) expect = -lead;
      CHECK(std::abs(tf.values[i] - expect) < 1e-9 * std::abs(lead));
    }
  }
}

TEST_CASE("literal self transfer transforms the sawtooth ramp faithfully") {
  const DualGrid g = DualGrid::from_time_step(64, 0.25);
  const TransitionSpec spec = aligned_spec(g, 4, 2, 0);
  const Signal tf = transfer_function(g, spec, unit_delta_potential(), 0,
                                      SelfTermMode::literal);

  Signal scaled(g, Domain::freq);
  for (std::size_t i = 0; i < g.n; ++i)
    scaled.values[i] = tf.values[i] / kSqrt2Pi;
  const Signal trace = inverse_ft(scaled);

  const std::size_t len = 16;
  for (std::size_t i = 0; i < g.n; ++i) {
    const long long half = static_cast<long long>(g.n / 2);
    const long long l = static_cast<long long>(len);
    const long long j =
        (((static_cast<long long>(i) - half) % l) + l) % l;
    const cplx expect(static_cast<double>(j) * g.dt, 0.0);
    CHECK(std::abs(trace.values[i] - expect) < 1e-11);
  }
}

TEST_CASE("decoupled second order matches the double integral exactly "
          "for aligned detuned levels") {
  const DualGrid g = DualGrid::from_time_step(64, 0.2);
  TransitionSpec spec = aligned_spec(g, 4, 2, 3);  // initial level detached
  spec.v_fk_ki = 1.4;
  spec.amplitude = 0.9;

  const Potential pot = unit_delta_potential();
  const Signal fast =
      second_order_amplitude(g, spec, pot, SelfTermMode::literal);
  const Signal slow = direct_second_order(
      g, spec, pot, QuadratureRule::midpoint, 1024, 1024);
  CHECK(rel_l2(fast, slow) < 3e-3);
}

TEST_CASE("resonant-drive closed form agrees with the double integral") {
  const DualGrid g = DualGrid::from_time_step(64, 0.2);
  TransitionSpec spec;
  spec.window = g.time_span();
  spec.omega0 = 3.0 * g.dw;
  spec.k_max = 2;
  spec.initial_index = 0;
  spec.v_fk_ki = 0.8;

  const double strength = 1.2;
  const double wd = 5.0 * g.dw;
  const Potential pot = Potential::harmonic(strength, wd, true);

  const SeriesResult series =
      second_order_golden_rule(g, spec, strength, wd);
  CHECK(series.skipped.empty());

  const Signal slow = direct_second_order(
      g, spec, pot, QuadratureRule::midpoint, 1024, 1024);
  CHECK(rel_l2(series.amplitude, slow) < 3e-3);
}

TEST_CASE("tunneling closed form agrees with the double integral") {
  const DualGrid g = DualGrid::from_time_step(64, 0.2);
  TransitionSpec spec;
  spec.window = g.time_span();
  spec.omega0 = 3.0 * g.dw;
  spec.k_max = 2;
  spec.initial_index = 0;
  spec.bias_offset = 7.0 * g.dw;  // off the level lattice

  const SeriesResult series = bardeen_second_order(g, spec);
  CHECK(series.skipped.empty());

  const Signal slow =
      direct_second_order(g, spec, Potential::constant(1.0),
                          QuadratureRule::midpoint, 1024, 1024);
  CHECK(rel_l2(series.amplitude, slow) < 3e-3);
}

TEST_CASE("near-resonant levels are skipped and reported") {
  const DualGrid g = DualGrid::from_time_step(64, 0.2);
  TransitionSpec spec;
  spec.window = g.time_span();
  spec.omega0 = 4.0 * g.dw;
  spec.k_max = 2;
  spec.initial_index = 0;

  // Drive exactly on the k=1 resonance.
  const SeriesResult series =
      second_order_golden_rule(g, spec, 1.0, 4.0 * g.dw);
  REQUIRE(series.skipped.size() == 1);
  CHECK(series.skipped[0] == 1);
  for (const auto& v : series.amplitude.values)
    CHECK(std::isfinite(std::abs(v)));
}

TEST_CASE("levels beyond the representable range are rejected") {
  const DualGrid g = DualGrid::from_time_step(64, 0.2);
  TransitionSpec spec;
  spec.window = g.time_span() / 4.0;
  spec.omega0 = 8.0 * g.dw;
  spec.k_max = 5;  // reach 40 dw > 31 dw
  spec.initial_index = 0;

  CHECK_THROWS_AS(second_order_amplitude(g, spec, unit_delta_potential(),
                                         SelfTermMode::literal),
                  rft::Error);
}
