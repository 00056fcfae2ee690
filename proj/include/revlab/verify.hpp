#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "revlab/analysis.hpp"
#include "revlab/composition.hpp"
#include "revlab/correspondence.hpp"
#include "revlab/parallel.hpp"
#include "revlab/revival.hpp"
#include "revlab/scenario.hpp"

namespace revlab {

struct VerifyCheck {
  std::string name;
  std::string params;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyReport {
  std::string suite;
  std::vector<VerifyCheck> checks;
  bool pass = true;

  void add(std::string name, std::string params, double max_error, double tolerance) {
    bool ok = max_error < tolerance;
    checks.push_back({std::move(name), std::move(params), max_error, tolerance, ok});
    pass = pass && ok;
  }
};

namespace detail {

inline SpectralState seeded_state(int J, Basis basis, std::optional<ThetaValue> theta, unsigned seed) {
  SpectralState s(J, basis, std::move(theta));
  std::mt19937 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  for (auto& c : s.coeffs()) c = {g(rng), g(rng)};
  return s;
}

inline std::vector<ThetaValue> verify_thetas() {
  return {ThetaValue::parse("1/4"), ThetaValue::parse("3/7"), ThetaValue::parse("sqrt(2)/4"),
          ThetaValue::parse("0.318309886")};
}

inline DispersionPolynomial seeded_polynomial(int n, std::mt19937& rng, std::int64_t max_coeff) {
  std::uniform_int_distribution<std::int64_t> coeff(-max_coeff, max_coeff);
  std::vector<std::int64_t> alpha(static_cast<size_t>(n) + 1);
  for (auto& a : alpha) a = coeff(rng);
  if (alpha.back() == 0) alpha.back() = 1;
  return DispersionPolynomial(alpha);
}

}  // namespace detail

// Transform round trips, orthonormality and norm preservation.
inline VerifyReport verify_modes(int J) {
  VerifyReport rep;
  rep.suite = "modes";
  const auto theta = ThetaValue::parse("sqrt(2)/4");

  {
    SpectralState s = detail::seeded_state(J, Basis::periodic, std::nullopt, 11);
    SpectralState back = analyze(synthesize(s, static_cast<size_t>(2 * J + 2)), J, Basis::periodic);
    rep.add("analyze(synthesize) round trip, periodic", "J=" + std::to_string(J),
            revival_residual(s, back), 1e-12);
  }
  {
    SpectralState s = detail::seeded_state(J, Basis::quasi, theta, 12);
    SpectralState back = analyze(synthesize(s, static_cast<size_t>(2 * J + 2)), J, Basis::quasi, theta);
    rep.add("analyze(synthesize) round trip, quasi", "J=" + std::to_string(J) + " theta=sqrt(2)/4",
            revival_residual(s, back), 1e-12);
  }
  {
    double worst = 0.0;
    SpectralState e = SpectralState::periodic(8);
    e.at(5) = 1.0;
    SpectralState back = analyze(synthesize(e, 64), 8, Basis::periodic);
    for (std::int64_t j = -8; j <= 8; ++j)
      worst = std::max(worst, std::abs(back.at(j) - (j == 5 ? cplx{1.0, 0.0} : cplx{0.0, 0.0})));
    rep.add("single-mode orthonormality", "e_5, N=64", worst, 1e-12);
  }
  {
    auto P = DispersionPolynomial({1, -2, 0, 1, 1});
    auto A = transform_polynomial(P, theta);
    SpectralState q = detail::seeded_state(J, Basis::quasi, theta, 13);
    SpectralState p = detail::seeded_state(J, Basis::periodic, std::nullopt, 14);
    double worst = std::abs(evolve_quasi(q, P, 1.37).norm() / q.norm() - 1.0);
    worst = std::max(worst, std::abs(evolve_periodic(p, A, 2.11).norm() / p.norm() - 1.0));
    worst = std::max(worst, std::abs(translate(p, 0.9).norm() / p.norm() - 1.0));
    worst = std::max(worst, std::abs(apply_group(p, 4, 0.51).norm() / p.norm() - 1.0));
    worst = std::max(worst, std::abs(apply_revival(p, revival_weights(3, 2, 7)).norm() / p.norm() - 1.0));
    rep.add("unitarity of diagonal and revival operations", "J=" + std::to_string(J), worst, 1e-12);
  }
  {
    SpectralState p = detail::seeded_state(J, Basis::periodic, std::nullopt, 15);
    SpectralState two = translate(translate(p, 0.375), 1.25);
    SpectralState one = translate(p, 1.625);
    rep.add("translation group law", "s=0.375+1.25", revival_residual(two, one), 1e-12);
  }
  return rep;
}

// Weight residue identity over all orders and denominators in range.
inline VerifyReport verify_revival(int n_max, int q_max) {
  VerifyReport rep;
  rep.suite = "revival";
  for (int n = 2; n <= n_max; ++n) {
    std::vector<double> per_q(static_cast<size_t>(q_max) + 1, 0.0);
    parallel_chunks(static_cast<size_t>(q_max), [&](size_t, size_t begin, size_t end) {
      for (size_t qi = begin; qi < end; ++qi) {
        auto q = static_cast<std::int64_t>(qi + 1);
        double worst = 0.0;
        for (std::int64_t p = 1; p < std::max<std::int64_t>(q, 2); ++p) {
          if (std::gcd(p, q) != 1) continue;
          worst = std::max(worst, revival_residue_error(revival_weights(n, p, q)));
        }
        per_q[qi] = worst;
      }
    });
    double worst = *std::max_element(per_q.begin(), per_q.end());
    rep.add("revival residue identity", "n=" + std::to_string(n) + " q<=" + std::to_string(q_max),
            worst, 1e-11);
  }
  return rep;
}

// Composition representation against the diagonal evolution on random
// integer-coefficient polynomials (fixed seed).
inline VerifyReport verify_composition(int n_max, int J, int trials = 50) {
  VerifyReport rep;
  rep.suite = "composition";
  std::mt19937 rng(20240901);
  auto thetas = detail::verify_thetas();
  std::vector<TimeValue> times = {TimeValue::rational(RationalTime(1, 3)), TimeValue::raw(1.0),
                                  TimeValue::rational(RationalTime(2, 5))};
  double worst = 0.0;
  double worst_commute = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    int n = 3 + static_cast<int>(rng() % static_cast<unsigned>(std::max(1, n_max - 2)));
    auto P = detail::seeded_polynomial(n, rng, n >= 6 ? 2 : 5);
    const auto& theta = thetas[trial % thetas.size()];
    const auto& t = times[trial % times.size()];
    auto A = transform_polynomial(P, theta);
    auto plan = composition_plan(P, theta, t);
    SpectralState z0 =
        detail::seeded_state(J, Basis::periodic, std::nullopt, 1000 + static_cast<unsigned>(trial));
    SpectralState diag = evolve_periodic(z0, A, t);
    SpectralState comp = evolve_by_composition(z0, plan);
    worst = std::max(worst, revival_residual(diag, comp));

    CompositionPlan shuffled = plan;
    std::shuffle(shuffled.factors.begin(), shuffled.factors.end(), rng);
    worst_commute = std::max(worst_commute, revival_residual(comp, evolve_by_composition(z0, shuffled)));
  }
  rep.add("composition equals diagonal evolution",
          "trials=" + std::to_string(trials) + " n<=" + std::to_string(n_max) + " J=" + std::to_string(J),
          worst, 1e-10);
  rep.add("factor order is immaterial", "shuffled plans", worst_commute, 1e-12);
  return rep;
}

// Per-mode identity e^{-iP(j+theta)t} = e^{-iA(j)t} e^{-iP(theta)t} e^{-i s j t}.
inline VerifyReport verify_correspondence(int n_max, int J) {
  VerifyReport rep;
  rep.suite = "correspondence";
  const std::int64_t j_cap = std::min<std::int64_t>(J, 2048);
  auto thetas = detail::verify_thetas();
  std::vector<TimeValue> times = {TimeValue::rational(RationalTime(1, 3)), TimeValue::raw(1.0)};
  std::mt19937 rng(424242);
  for (int n = 3; n <= n_max; ++n) {
    double worst = 0.0;
    for (const auto& P : {DispersionPolynomial::monomial(n), detail::seeded_polynomial(n, rng, 2)}) {
      auto size = static_cast<size_t>(2 * j_cap + 1);
      for (const auto& theta : thetas) {
        auto A = transform_polynomial(P, theta);
        for (const auto& t : times) {
          PhasePolynomial lhs = quasi_phase(P, theta, t);
          PhasePolynomial rhs_A = periodic_phase(A, t);
          PhasePolynomial rhs_c = correspondence_phase(P, theta, t);
          std::vector<double> chunk_worst(size, 0.0);
          parallel_chunks(size, [&](size_t, size_t begin, size_t end) {
            for (size_t i = begin; i < end; ++i) {
              std::int64_t j = static_cast<std::int64_t>(i) - j_cap;
              chunk_worst[i] = std::abs(lhs.factor(j) - rhs_A.factor(j) * rhs_c.factor(j));
            }
          });
          worst = std::max(worst, *std::max_element(chunk_worst.begin(), chunk_worst.end()));
        }
      }
    }
    rep.add("per-mode correspondence identity",
            "n=" + std::to_string(n) + " |j|<=" + std::to_string(j_cap), worst, 1e-9);
  }
  return rep;
}

inline std::vector<VerifyReport> verify_all(int n_max, int q_max, int J) {
  return {verify_modes(J), verify_revival(n_max, q_max), verify_composition(n_max, J),
          verify_correspondence(n_max, J)};
}

}  // namespace revlab
