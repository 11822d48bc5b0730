#include "rft/oracle.hpp"

#include <cmath>
#include <vector>

namespace rft {

namespace {

struct Nodes {
  std::vector<double> t;
  std::vector<double> w;
};

Nodes quadrature_nodes(QuadratureRule rule, double start, double length,
                       std::size_t steps) {
  require(steps >= 1, ErrorCode::invalid_argument,
          "quadrature needs at least one step");
  require(length > 0.0, ErrorCode::invalid_argument,
          "quadrature interval must have positive length");
  Nodes n;
  const double h = length / static_cast<double>(steps);
  if (rule == QuadratureRule::midpoint) {
    n.t.resize(steps);
    n.w.assign(steps, h);
    for (std::size_t j = 0; j < steps; ++j)
      n.t[j] = start + (static_cast<double>(j) + 0.5) * h;
  } else {
    n.t.resize(steps + 1);
    n.w.assign(steps + 1, h);
    n.w.front() = 0.5 * h;
    n.w.back() = 0.5 * h;
    for (std::size_t j = 0; j <= steps; ++j)
      n.t[j] = start + static_cast<double>(j) * h;
  }
  return n;
}

}  // namespace

Signal direct_first_order(const DualGrid& g, const TransitionSpec& spec,
                          const Potential& pot, QuadratureRule rule,
                          std::size_t steps) {
  require(spec.window > 0.0, ErrorCode::invariant,
          "integration window must be positive");
  const Nodes nodes = quadrature_nodes(rule, spec.offset, spec.window, steps);

  std::vector<cplx> v(nodes.t.size());
  for (std::size_t j = 0; j < nodes.t.size(); ++j)
    v[j] = pot.value(nodes.t[j]);

  Signal out(g, Domain::freq);
  const double w_i = spec.omega_i();
  for (std::size_t i = 0; i < g.n; ++i) {
    const double x = g.freq_at(i) - w_i;
    cplx acc(0.0, 0.0);
    for (std::size_t j = 0; j < nodes.t.size(); ++j)
      acc += v[j] * std::polar(nodes.w[j], x * nodes.t[j]);
    out.values[i] = acc;
  }

  const cplx prefactor = spec.v_fi * spec.amplitude / cplx(0.0, spec.hbar);
  for (auto& s : out.values) s *= prefactor;
  return out;
}

Signal direct_second_order(const DualGrid& g, const TransitionSpec& spec,
                           const Potential& pot, QuadratureRule rule,
                           std::size_t steps_outer, std::size_t steps_inner) {
  require(spec.k_max >= 1, ErrorCode::invariant,
          "at least one intermediate level is required");
  require(spec.hbar > 0.0, ErrorCode::invariant, "hbar must be positive");

  const double span = g.time_span();
  const double start = -0.5 * span;
  const Nodes outer = quadrature_nodes(rule, start, span, steps_outer);
  const std::size_t m = outer.t.size();

  std::vector<cplx> v1(m);
  for (std::size_t j = 0; j < m; ++j) v1[j] = pot.value(outer.t[j]);

  // Inner integrals are frequency independent; everything else is evaluated
  // node by node with no reuse across levels.
  const double w_i = spec.omega_i();
  std::vector<cplx> level_sum(m, cplx(0.0, 0.0));
  for (long long k = -spec.k_max; k <= spec.k_max; ++k) {
    const double w_k = spec.omega_k(k);
    const double w_ki = w_k - w_i;
    for (std::size_t j = 0; j < m; ++j) {
      const double upto = outer.t[j] - start;
      cplx inner(0.0, 0.0);
      if (upto > 0.0) {
        const Nodes in = quadrature_nodes(rule, start, upto, steps_inner);
        for (std::size_t q = 0; q < in.t.size(); ++q)
          inner += pot.value(in.t[q]) * std::polar(in.w[q], w_ki * in.t[q]);
      }
      level_sum[j] += inner * std::polar(1.0, -w_k * outer.t[j]);
    }
  }

  Signal out(g, Domain::freq);
  for (std::size_t i = 0; i < g.n; ++i) {
    const double w = g.freq_at(i);
    cplx acc(0.0, 0.0);
    for (std::size_t j = 0; j < m; ++j)
      acc += v1[j] * level_sum[j] * std::polar(outer.w[j], w * outer.t[j]);
    out.values[i] = acc;
  }

  const cplx ih = cplx(0.0, spec.hbar);
  const cplx prefactor = spec.amplitude * spec.v_fk_ki /
                         (ih * ih * static_cast<double>(spec.k_max));
  for (auto& s : out.values) s *= prefactor;
  return out;
}

}  // namespace rft
