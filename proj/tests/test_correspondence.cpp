#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "revlab/analysis.hpp"
#include "revlab/composition.hpp"
#include "revlab/correspondence.hpp"
#include "revlab/transforms.hpp"

using namespace revlab;

namespace {

const ThetaValue kQuarter = ThetaValue::parse("1/4");

SpectralState random_quasi(int J, const ThetaValue& theta, unsigned seed) {
  SpectralState s = SpectralState::quasi(J, theta);
  std::mt19937 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  for (auto& c : s.coeffs()) c = {g(rng), g(rng)};
  return s;
}

double phase_identity_error(const DispersionPolynomial& P, const ThetaValue& theta,
                            const TimeValue& t, std::int64_t J) {
  auto A = transform_polynomial(P, theta);
  PhasePolynomial lhs = quasi_phase(P, theta, t);
  PhasePolynomial rhs_A = periodic_phase(A, t);
  PhasePolynomial rhs_corr = correspondence_phase(P, theta, t);
  double worst = 0.0;
  for (std::int64_t j = -J; j <= J; ++j)
    worst = std::max(worst, std::abs(lhs.factor(j) - rhs_A.factor(j) * rhs_corr.factor(j)));
  return worst;
}

}  // namespace

TEST_CASE("per-mode correspondence identity across polynomials, thetas and times") {
  std::vector<ThetaValue> thetas = {kQuarter, ThetaValue::parse("3/7"), ThetaValue::parse("sqrt(2)/4"),
                                    ThetaValue::parse("0.318309886")};
  std::vector<TimeValue> times = {TimeValue::rational(RationalTime(1, 3)), TimeValue::raw(1.0)};
  std::mt19937 rng(31);
  std::uniform_int_distribution<std::int64_t> coeff(-2, 2);
  for (int n = 3; n <= 6; ++n) {
    std::vector<std::int64_t> alpha(static_cast<size_t>(n) + 1);
    for (auto& a : alpha) a = coeff(rng);
    if (alpha.back() == 0) alpha.back() = 1;
    for (const auto& P : {DispersionPolynomial::monomial(n), DispersionPolynomial(alpha)})
      for (const auto& theta : thetas)
        for (const auto& t : times) {
          INFO("n=" << n << " theta=" << theta.describe() << " t=" << t.seconds());
          CHECK(phase_identity_error(P, theta, t, 2048) < 1e-9);
        }
  }
}

TEST_CASE("quasi_to_periodic and periodic_to_quasi round trip") {
  auto P = DispersionPolynomial::monomial(3);
  SpectralState u = random_quasi(64, kQuarter, 41);
  auto t = TimeValue::rational(RationalTime(1, 3));

  auto z = quasi_to_periodic(u, P, t);
  SECTION("phases are unimodular so coefficient magnitudes survive") {
    for (size_t i = 0; i < u.size(); ++i)
      CHECK(std::abs(std::abs(z.state.coeffs()[i]) - std::abs(u.coeffs()[i])) < 1e-13);
  }
  SECTION("round trip restores the state") {
    SpectralState back = periodic_to_quasi(z, P, kQuarter, t);
    for (size_t i = 0; i < u.size(); ++i) CHECK(std::abs(back.coeffs()[i] - u.coeffs()[i]) < 1e-12);
  }
  SECTION("t = 0 keeps the coefficient vector and unit phase") {
    auto z0 = quasi_to_periodic(u, P, TimeValue::raw(0.0));
    CHECK(std::abs(z0.global_phase - cplx{1.0, 0.0}) < 1e-15);
    for (size_t i = 0; i < u.size(); ++i) CHECK(z0.state.coeffs()[i] == u.coeffs()[i]);
  }
  SECTION("basis mismatches are rejected") {
    CHECK_THROWS_AS(quasi_to_periodic(u.retagged(Basis::periodic), P, t), std::invalid_argument);
    CHECK_THROWS_AS(periodic_to_quasi(u, P, kQuarter, t), std::invalid_argument);
  }
}

TEST_CASE("full pipeline: periodic evolution plus pullback equals quasi evolution") {
  std::vector<ThetaValue> thetas = {kQuarter, ThetaValue::parse("sqrt(2)/4")};
  for (const auto& theta : thetas) {
    for (int n : {3, 4, 5}) {
      auto P = DispersionPolynomial::monomial(n);
      auto A = transform_polynomial(P, theta);
      auto t = TimeValue::rational(RationalTime(1, 3));
      SpectralState u0 = box_coefficients_closed_form(theta, 512);
      SpectralState direct = evolve_quasi(u0, P, t);
      SpectralState z = evolve_periodic(u0.retagged(Basis::periodic), A, t);
      SpectralState via = periodic_to_quasi(z, P, theta, t);
      INFO("n=" << n << " theta=" << theta.describe());
      CHECK(revival_residual(direct, via) < 1e-10);
    }
  }
}

TEST_CASE("composition evolution equals the diagonal periodic evolution") {
  std::mt19937 rng(2718);
  std::uniform_int_distribution<std::int64_t> coeff(-5, 5);
  std::vector<ThetaValue> thetas = {kQuarter, ThetaValue::parse("3/7"), ThetaValue::parse("sqrt(2)/4"),
                                    ThetaValue::parse("0.318309886")};
  for (int trial = 0; trial < 12; ++trial) {
    int n = 3 + static_cast<int>(rng() % 4);
    std::vector<std::int64_t> alpha(static_cast<size_t>(n) + 1);
    for (auto& a : alpha) a = coeff(rng);
    if (alpha.back() == 0) alpha.back() = 1;
    DispersionPolynomial P(alpha);
    const auto& theta = thetas[trial % thetas.size()];
    auto t = trial % 3 == 2 ? TimeValue::raw(1.0) : TimeValue::rational(RationalTime(1, 3));
    auto A = transform_polynomial(P, theta);
    auto plan = composition_plan(P, theta, t);
    SpectralState z0 = random_quasi(1024, theta, 100 + static_cast<unsigned>(trial)).retagged(Basis::periodic);
    SpectralState diag = evolve_periodic(z0, A, t);
    SpectralState comp = evolve_by_composition(z0, plan, CompositionMode::diagonal);
    INFO("trial " << trial << " n=" << n << " theta=" << theta.describe());
    CHECK(revival_residual(diag, comp) < 1e-10);
  }
}

TEST_CASE("composition factors commute") {
  auto P = DispersionPolynomial({0, 0, 2, -1, 1});
  auto theta = ThetaValue::parse("sqrt(2)/4");
  auto t = TimeValue::rational(RationalTime(2, 5));
  auto plan = composition_plan(P, theta, t);
  REQUIRE(plan.factors.size() >= 3);
  SpectralState z0 = random_quasi(256, theta, 77).retagged(Basis::periodic);
  SpectralState forward = evolve_by_composition(z0, plan);
  std::mt19937 rng(7);
  for (int shuffle = 0; shuffle < 4; ++shuffle) {
    CompositionPlan permuted = plan;
    std::shuffle(permuted.factors.begin(), permuted.factors.end(), rng);
    SpectralState out = evolve_by_composition(z0, permuted);
    CHECK(revival_residual(forward, out) < 1e-12);
  }
}

TEST_CASE("revival-where-rational composition matches the diagonal route") {
  SECTION("rational theta: every factor runs through revival weights") {
    auto P = DispersionPolynomial::monomial(3);
    auto t = TimeValue::rational(RationalTime(1, 3));
    auto plan = composition_plan(P, kQuarter, t);
    SpectralState z0 = random_quasi(512, kQuarter, 90).retagged(Basis::periodic);
    SpectralState diag = evolve_by_composition(z0, plan, CompositionMode::diagonal);
    SpectralState rev = evolve_by_composition(z0, plan, CompositionMode::revival_where_rational);
    CHECK(revival_residual(diag, rev) < 1e-10);
    SpectralState rev_only = evolve_by_composition(z0, plan, CompositionMode::revival_only);
    CHECK(revival_residual(diag, rev_only) < 1e-10);
  }
  SECTION("irrational theta: the mixed route still matches, the pure one throws") {
    auto theta = ThetaValue::parse("sqrt(2)/4");
    auto P = DispersionPolynomial::monomial(3);
    auto t = TimeValue::rational(RationalTime(1, 3));
    auto plan = composition_plan(P, theta, t);
    SpectralState z0 = random_quasi(512, theta, 91).retagged(Basis::periodic);
    SpectralState diag = evolve_by_composition(z0, plan, CompositionMode::diagonal);
    SpectralState rev = evolve_by_composition(z0, plan, CompositionMode::revival_where_rational);
    CHECK(revival_residual(diag, rev) < 1e-10);
    CHECK_THROWS_AS(evolve_by_composition(z0, plan, CompositionMode::revival_only),
                    std::invalid_argument);
  }
}

TEST_CASE("rational theta: the whole evolution is one finite translation combination") {
  for (int n : {3, 4, 5}) {
    auto P = DispersionPolynomial::monomial(n);
    auto t = TimeValue::rational(RationalTime(1, 3));
    auto A = transform_polynomial(P, kQuarter);
    auto plan = composition_plan(P, kQuarter, t);
    ComposedWeights cw = plan_composed_weights(plan);
    SpectralState z0 = box_coefficients_closed_form(kQuarter, 1024).retagged(Basis::periodic);
    SpectralState direct = evolve_periodic(z0, A, t);
    SpectralState via = apply_composed_weights(z0, cw);
    INFO("n=" << n << " Q=" << cw.Q);
    CHECK(revival_residual(direct, via) < 1e-10);
  }
}

TEST_CASE("second order wrapper route equals the direct quasi evolution") {
  // group + correspondence phases against the direct (j+theta)^2 path
  for (const auto& theta : {kQuarter, ThetaValue::parse("sqrt(2)/4")}) {
    SpectralState u0 = box_coefficients_closed_form(theta, 512);
    auto t = TimeValue::rational(RationalTime(1, 3));
    SpectralState direct = evolve_second_order(u0, {0, 0, 1}, t);

    DispersionPolynomial fls({0, 0, 1});
    SpectralState z = apply_group(u0.retagged(Basis::periodic), 2, t);
    SpectralState via = periodic_to_quasi(z, fls, theta, t);
    CHECK(revival_residual(direct, via) < 1e-12);

    // revival form of the group factor
    SpectralState z_rev = apply_revival(u0.retagged(Basis::periodic), revival_weights(2, 1, 3));
    SpectralState via_rev = periodic_to_quasi(z_rev, fls, theta, t);
    CHECK(revival_residual(direct, via_rev) < 1e-10);
  }
}
