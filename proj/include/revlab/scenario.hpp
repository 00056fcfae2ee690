#pragma once

#include <string>
#include <vector>

#include "revlab/analysis.hpp"
#include "revlab/composition.hpp"
#include "revlab/correspondence.hpp"
#include "revlab/evolution.hpp"
#include "revlab/transforms.hpp"

namespace revlab {

enum class EvolveMethod { direct, correspondence, composition };

inline const char* to_string(EvolveMethod m) {
  switch (m) {
    case EvolveMethod::direct: return "direct";
    case EvolveMethod::correspondence: return "correspondence";
    default: return "composition";
  }
}

struct EvolveRequest {
  DispersionPolynomial P = DispersionPolynomial::monomial(3);
  ThetaValue theta = ThetaValue::parse("1/4");
  TimeValue time = TimeValue::rational(RationalTime(1, 3));
  int J = 1024;
  size_t N = 0;  // 0 -> 4J
  EvolveMethod method = EvolveMethod::direct;
  CompositionMode composition_mode = CompositionMode::diagonal;

  size_t grid() const { return N == 0 ? static_cast<size_t>(4 * J) : N; }
};

struct EvolveOutcome {
  SpectralState state;      // final state, quasi basis
  GridProfile profile;
  double initial_norm = 0.0;
  double final_norm = 0.0;
  double method_residual = 0.0;  // max coefficient gap against the direct route
};

// Evolves u0 by the requested route and synthesizes the profile. Every route
// ends in the quasi basis; the non-direct routes also report their coefficient
// gap against the direct diagonal evolution.
inline EvolveOutcome run_evolve(const EvolveRequest& req, const SpectralState& u0) {
  if (u0.basis() != Basis::quasi) throw std::invalid_argument("run_evolve expects quasi initial data");
  const SpectralState direct = evolve_quasi(u0, req.P, req.time);
  SpectralState final_state = direct;
  if (req.method == EvolveMethod::correspondence) {
    auto A = transform_polynomial(req.P, req.theta);
    SpectralState z = evolve_periodic(u0.retagged(Basis::periodic), A, req.time);
    final_state = periodic_to_quasi(z, req.P, req.theta, req.time);
  } else if (req.method == EvolveMethod::composition) {
    auto plan = composition_plan(req.P, req.theta, req.time);
    SpectralState z = evolve_by_composition(u0.retagged(Basis::periodic), plan, req.composition_mode);
    final_state = periodic_to_quasi(z, req.P, req.theta, req.time);
  }

  ProfileMeta meta;
  meta.polynomial = req.P.describe();
  meta.theta = req.theta.describe();
  if (req.time.is_rational()) {
    meta.time = req.time.as_turns().to_string() + " turns";
  } else {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", req.time.seconds());
    meta.time = buf;
  }
  meta.method = to_string(req.method);

  EvolveOutcome out{final_state, synthesize(final_state, req.grid(), meta)};
  out.initial_norm = u0.norm();
  out.final_norm = final_state.norm();
  out.method_residual = req.method == EvolveMethod::direct ? 0.0 : revival_residual(direct, final_state);
  return out;
}

inline SpectralState make_initial_box(const ThetaValue& theta, int J) {
  return box_coefficients_closed_form(theta, J);
}

// Smooth wave packet exp(-4 (x - pi)^2), analyzed into the quasi basis. Decays
// to ~1e-17 at the wrap, so its coefficients fall off fast; handy as smooth
// test data where the box is too rough.
inline SpectralState make_initial_gaussian(const ThetaValue& theta, int J) {
  const size_t N = std::max<size_t>(static_cast<size_t>(4 * J), 1024);
  std::vector<cplx> samples(N);
  for (size_t k = 0; k < N; ++k) {
    const double x = kTwoPi * static_cast<double>(k) / static_cast<double>(N);
    const double d = x - std::numbers::pi;
    samples[k] = std::exp(-4.0 * d * d);
  }
  return analyze(GridProfile(std::move(samples)), J, Basis::quasi, theta);
}

// Calibration graphs for the box-counting estimator.
inline GridProfile line_profile(size_t N) {
  std::vector<cplx> values(N);
  for (size_t k = 0; k < N; ++k) values[k] = static_cast<double>(k) / static_cast<double>(N);
  return GridProfile(std::move(values));
}

// Truncated Weierstrass-type sum with Hurst exponent 1/2; graph dimension 3/2.
inline GridProfile weierstrass_profile(size_t N, int levels = 14) {
  std::vector<cplx> values(N);
  for (size_t k = 0; k < N; ++k) {
    const double x = kTwoPi * static_cast<double>(k) / static_cast<double>(N);
    double acc = 0.0;
    for (int level = 0; level <= levels; ++level)
      acc += std::pow(2.0, -0.5 * level) * std::cos(std::pow(2.0, level) * x);
    values[k] = acc;
  }
  return GridProfile(std::move(values));
}

// The eight evolution panels of the reference figure set: orders 3..5 for the
// rational and irrational theta, then the two second-order panels. All at
// t = 2*pi/3 with the box initial state.
struct FigurePanel {
  int figure;
  std::string name;
  EvolveRequest request;
};

inline std::vector<FigurePanel> figure_panels(int J = 1024, size_t N = 0) {
  std::vector<FigurePanel> panels;
  auto t = TimeValue::rational(RationalTime(1, 3));
  auto quarter = ThetaValue::parse("1/4");
  auto root2 = ThetaValue::parse("sqrt(2)/4");
  for (int n : {3, 4, 5}) {
    panels.push_back({2, "fig2_n" + std::to_string(n),
                      {DispersionPolynomial::monomial(n), quarter, t, J, N}});
    panels.push_back({3, "fig3_n" + std::to_string(n),
                      {DispersionPolynomial::monomial(n), root2, t, J, N}});
  }
  panels.push_back({4, "fig4_theta_1_4", {DispersionPolynomial::monomial(2), quarter, t, J, N}});
  panels.push_back({4, "fig4_theta_sqrt2_4", {DispersionPolynomial::monomial(2), root2, t, J, N}});
  return panels;
}

}  // namespace revlab
