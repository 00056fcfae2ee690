#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "revlab/analysis.hpp"
#include "revlab/composition.hpp"
#include "revlab/revival.hpp"

using namespace revlab;

namespace {

SpectralState random_periodic(int J, unsigned seed) {
  SpectralState s = SpectralState::periodic(J);
  std::mt19937 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  for (auto& c : s.coeffs()) c = {g(rng), g(rng)};
  return s;
}

// Brute-force weight sum with plain double phases, kept free of the modular
// reduction the implementation uses.
cplx oracle_weight( int n, std::int64_t p, std::int64_t q, std::int64_t k) {
  cplx acc{0.0, 0.0};
  for (std::int64_t m = 0; m < q; ++m) {
    double mn = 1.0;
    for (int e = 0; e < n; ++e) mn *= static_cast<double>(m);
    acc += cis(kTwoPi * (-mn * static_cast<double>(p) / static_cast<double>(q) +
                         static_cast<double>(m) * static_cast<double>(k) / static_cast<double>(q)));
  }
  return acc / static_cast<double>(q);
}

}  // namespace

TEST_CASE("revival weights at the worked examples") {
  SECTION("order 2, half period: pure half translation") {
    auto rw = revival_weights(2, 1, 2);
    REQUIRE(rw.w.size() == 2);
    CHECK(std::abs(rw.w[0]) < 1e-15);
    CHECK(std::abs(rw.w[1] - cplx{1.0, 0.0}) < 1e-15);
  }
  SECTION("order 3 at 2 pi/3: pure third translation") {
    auto rw = revival_weights(3, 1, 3);
    REQUIRE(rw.w.size() == 3);
    CHECK(std::abs(rw.w[0]) < 1e-15);
    CHECK(std::abs(rw.w[1] - cplx{1.0, 0.0}) < 1e-14);
    CHECK(std::abs(rw.w[2]) < 1e-15);
  }
  SECTION("q = 1 is the identity") {
    auto rw = revival_weights(4, 3, 1);
    REQUIRE(rw.w.size() == 1);
    CHECK(std::abs(rw.w[0] - cplx{1.0, 0.0}) < 1e-15);
  }
}

TEST_CASE("revival weights match the brute-force sum for small q") {
  for (int n = 2; n <= 4; ++n)
    for (std::int64_t q = 1; q <= 9; ++q)
      for (std::int64_t p = 1; p < std::max<std::int64_t>(q, 2); ++p) {
        if (std::gcd(p, q) != 1) continue;
        auto rw = revival_weights(n, p, q);
        for (std::int64_t k = 0; k < q; ++k)
          CHECK(std::abs(rw.w[static_cast<size_t>(k)] - oracle_weight(n, p, q, k)) < 1e-11);
      }
}

TEST_CASE("revival weights reject non-coprime and non-positive input") {
  CHECK_THROWS_AS(revival_weights(3, 2, 4), std::invalid_argument);
  CHECK_THROWS_AS(revival_weights(3, 0, 4), std::invalid_argument);
  CHECK_THROWS_AS(revival_weights(1, 1, 4), std::invalid_argument);
}

TEST_CASE("weights are unit-norm and satisfy the residue identity") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    std::int64_t q = 1 + static_cast<std::int64_t>(rng() % 64);
    std::int64_t p = 1 + static_cast<std::int64_t>(rng() % (2 * q));
    p = p % q == 0 ? 1 : p;
    while (std::gcd(p, q) != 1) ++p;
    auto rw = revival_weights(n, p, q);
    double sum2 = 0.0;
    for (const auto& w : rw.w) sum2 += std::norm(w);
    CHECK(std::abs(sum2 - 1.0) < 1e-12);
    CHECK(revival_residue_error(rw) < 1e-11);
  }
}

TEST_CASE("apply_revival equals apply_group at the rational time") {
  SECTION("order 3 at 2 pi/3 acts as a translation") {
    SpectralState s = random_periodic(64, 3);
    SpectralState via = apply_revival(s, revival_weights(3, 1, 3));
    SpectralState direct = translate(s, TimeValue::rational(RationalTime(1, 3)));
    CHECK(revival_residual(direct, via) < 1e-12);
  }
  SECTION("q = 1 is the identity") {
    SpectralState s = random_periodic(16, 4);
    SpectralState via = apply_revival(s, revival_weights(5, 2, 1));
    CHECK(revival_residual(s, via) < 1e-15);
  }
  SECTION("order 4 at 2 pi/5") {
    SpectralState s = random_periodic(128, 5);
    SpectralState via = apply_revival(s, revival_weights(4, 1, 5));
    SpectralState direct = apply_group(s, 4, TimeValue::rational(RationalTime(1, 5)));
    CHECK(revival_residual(direct, via) < 1e-12);
  }
  SECTION("norm is preserved") {
    SpectralState s = random_periodic(128, 6);
    CHECK(std::abs(apply_revival(s, revival_weights(3, 2, 7)).norm() / s.norm() - 1.0) < 1e-12);
  }
  SECTION("basis mismatch is rejected") {
    SpectralState q = SpectralState::quasi(4, ThetaValue::parse("1/4"));
    CHECK_THROWS_AS(apply_revival(q, revival_weights(2, 1, 2)), std::invalid_argument);
  }
}

TEST_CASE("composed weights reproduce the factor product") {
  SpectralState s = random_periodic(96, 8);
  std::vector<RevivalWeights> factors = {revival_weights(3, 1, 3), revival_weights(2, 1, 4)};
  ComposedWeights cw = compose_weights(factors);
  CHECK(cw.Q == 12);
  SpectralState via = apply_composed_weights(s, cw);
  SpectralState direct = apply_revival(apply_revival(s, factors[0]), factors[1]);
  CHECK(revival_residual(direct, via) < 1e-12);
}
