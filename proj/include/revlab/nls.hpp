#pragma once

#include <cmath>
#include <stdexcept>

#include "revlab/evolution.hpp"
#include "revlab/state.hpp"
#include "revlab/transforms.hpp"

namespace revlab {

// Split-step configuration for the cubic Schroedinger flow
//   d/dt z = i z_xx + i |z|^2 z   (periodic),
// plus the gauge data for the quasi-periodic wrapper.
struct NlsConfig {
  int J = 256;
  size_t N = 1024;  // collocation grid, N >= 2J+1
  double dt = 1e-3;
  double T = 1.0;
  ThetaValue theta = ThetaValue::parse("1/4");
  bool nonlinear = true;  // disable to run the bare linear flow
  bool dealias = true;    // 2/3-rule truncation after each nonlinear substep

  void validate() const {
    if (dt <= 0) throw std::invalid_argument("nls needs dt > 0");
    if (T < 0) throw std::invalid_argument("nls needs T >= 0");
    if (N < static_cast<size_t>(2 * J + 1)) throw std::invalid_argument("nls needs N >= 2J+1");
  }
};

namespace detail {

// Pointwise nonlinear phase flow u <- u e^{i |u|^2 dt}. |u| is conserved along
// this flow, so the sampled update is its exact solution.
inline void nonlinear_substep(const SpectralState& in, SpectralState& out, size_t N, double dt,
                              bool dealias) {
  GridProfile grid = synthesize(in, N);
  for (auto& v : grid.samples()) v *= cis(std::norm(v) * dt);
  out = analyze(grid, in.J(), Basis::periodic);
  if (dealias) {
    const std::int64_t cut = (2 * in.J()) / 3;
    for (std::int64_t j = -in.J(); j <= in.J(); ++j)
      if (std::abs(j) > cut) out.at(j) = 0.0;
  }
}

}  // namespace detail

// One Strang step: half nonlinear flow, full linear flow e^{-i j^2 dt}, half
// nonlinear flow.
inline SpectralState nls_step_periodic(const SpectralState& state, size_t N, double dt,
                                       bool nonlinear = true, bool dealias = true) {
  if (state.basis() != Basis::periodic) throw std::invalid_argument("nls steps act on periodic states");
  SpectralState cur = state;
  if (nonlinear) detail::nonlinear_substep(cur, cur, N, 0.5 * dt, dealias);
  cur = apply_group(cur, 2, dt);
  if (nonlinear) detail::nonlinear_substep(cur, cur, N, 0.5 * dt, dealias);
  return cur;
}

inline SpectralState nls_evolve_periodic(const SpectralState& z0, const NlsConfig& cfg) {
  cfg.validate();
  SpectralState z = z0;
  const auto steps = static_cast<long>(std::floor(cfg.T / cfg.dt + 1e-12));
  for (long s = 0; s < steps; ++s) z = nls_step_periodic(z, cfg.N, cfg.dt, cfg.nonlinear, cfg.dealias);
  const double remainder = cfg.T - static_cast<double>(steps) * cfg.dt;
  if (remainder > 1e-14)
    z = nls_step_periodic(z, cfg.N, remainder, cfg.nonlinear, cfg.dealias);
  return z;
}

// Quasi-periodic cubic Schroedinger evolution via the Galilean wrapper: evolve
// the periodic problem from the same coefficients, then apply
// u_hat(j,T) = z_hat(j,T) e^{-i theta^2 T} e^{-i 2 theta T j} and re-tag.
inline SpectralState nls_evolve_quasi(const SpectralState& u0, const NlsConfig& cfg) {
  if (u0.basis() != Basis::quasi) throw std::invalid_argument("nls_evolve_quasi needs a quasi state");
  cfg.validate();
  const ThetaValue theta = u0.theta();
  SpectralState z = nls_evolve_periodic(u0.retagged(Basis::periodic), cfg);
  const double th = theta.value();
  detail::dd tt = detail::dd_div(detail::dd_from_double(cfg.T), detail::kTwoPiDd);
  detail::dd thd = detail::dd_from_double(th);
  PhasePolynomial wrapper = PhasePolynomial::from_dd(
      {detail::dd_mul(detail::dd_mul(thd, thd), tt), detail::dd_mul(detail::dd_mul(thd, 2.0), tt)});
  SpectralState u = z.retagged(Basis::quasi, theta);
  for (std::int64_t j = -u.J(); j <= u.J(); ++j) u.at(j) *= wrapper.factor(j);
  return u;
}

}  // namespace revlab
