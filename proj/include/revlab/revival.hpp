#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "revlab/detail/modmath.hpp"
#include "revlab/evolution.hpp"
#include "revlab/state.hpp"

namespace revlab {

// Weights of the order-n revival operator at rational time 2*pi*p/q:
//   R_n(2*pi*p/q) = sum_{k=0}^{q-1} w_k T_{2*pi*k/q},
//   w_k = (1/q) sum_{m=0}^{q-1} e^{2*pi*i(-m^n p/q + m k/q)}.
// m^n is reduced mod q by modular exponentiation before the phase is formed.
struct RevivalWeights {
  int order = 2;
  std::int64_t p = 1;
  std::int64_t q = 1;
  std::vector<cplx> w;
};

inline RevivalWeights revival_weights(int n, std::int64_t p, std::int64_t q) {
  if (n < 2) throw std::invalid_argument("revival order must be >= 2");
  if (p < 1 || q < 1) throw std::invalid_argument("revival time needs p, q >= 1");
  if (std::gcd(p, q) != 1) throw std::invalid_argument("revival time p/q must be coprime");
  RevivalWeights rw;
  rw.order = n;
  rw.p = p;
  rw.q = q;
  rw.w.resize(static_cast<size_t>(q));
  const auto uq = static_cast<std::uint64_t>(q);
  for (std::int64_t k = 0; k < q; ++k) {
    cplx acc{0.0, 0.0};
    for (std::int64_t m = 0; m < q; ++m) {
      std::uint64_t mn = detail::powmod(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(n), uq);
      std::uint64_t neg = (uq - detail::mulmod(mn, static_cast<std::uint64_t>(p), uq)) % uq;
      std::uint64_t arg = (neg + detail::mulmod(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(k), uq)) % uq;
      acc += cis(kTwoPi * static_cast<double>(arg) / static_cast<double>(q));
    }
    rw.w[static_cast<size_t>(k)] = acc / static_cast<double>(q);
  }
  return rw;
}

// Largest violation of sum_k w_k e^{-2*pi*i*r*k/q} = e^{-2*pi*i*r^n*p/q}
// over residues r. This is the oracle the weights are validated against.
inline double revival_residue_error(const RevivalWeights& rw) {
  const auto q = rw.q;
  const auto uq = static_cast<std::uint64_t>(q);
  double worst = 0.0;
  for (std::int64_t r = 0; r < q; ++r) {
    cplx lhs{0.0, 0.0};
    for (std::int64_t k = 0; k < q; ++k)
      lhs += rw.w[static_cast<size_t>(k)] *
             cis(-kTwoPi * static_cast<double>(detail::mulmod(static_cast<std::uint64_t>(r),
                                                              static_cast<std::uint64_t>(k), uq)) /
                 static_cast<double>(q));
    std::uint64_t rn = detail::powmod(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(rw.order), uq);
    cplx rhs = cis(-kTwoPi * static_cast<double>(detail::mulmod(rn, static_cast<std::uint64_t>(rw.p), uq)) /
                   static_cast<double>(q));
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

// Applies the weighted translation combination in coefficient space. Each mode
// picks up sum_k w_k e^{-2*pi*i*j*k/q}, accumulated in fixed k order.
inline SpectralState apply_revival(const SpectralState& state, const RevivalWeights& rw) {
  if (state.basis() != Basis::periodic) throw std::invalid_argument("apply_revival acts on periodic states only");
  const auto q = rw.q;
  const auto uq = static_cast<std::uint64_t>(q);
  std::vector<cplx> multiplier(static_cast<size_t>(q));
  for (std::int64_t r = 0; r < q; ++r) {
    cplx acc{0.0, 0.0};
    for (std::int64_t k = 0; k < q; ++k) {
      std::uint64_t arg = detail::mulmod(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(k), uq);
      acc += rw.w[static_cast<size_t>(k)] * cis(-kTwoPi * static_cast<double>(arg) / static_cast<double>(q));
    }
    multiplier[static_cast<size_t>(r)] = acc;
  }
  SpectralState out = state;
  for (std::int64_t j = -state.J(); j <= state.J(); ++j) {
    std::uint64_t r = detail::to_residue(j, uq);
    out.at(j) *= multiplier[static_cast<size_t>(r)];
  }
  return out;
}

// Composed translation combination over the grid 2*pi/Q, Q = lcm of the factor
// denominators: convolving the per-factor weights gives one weight vector for
// the whole rational-time evolution.
struct ComposedWeights {
  std::int64_t Q = 1;
  std::vector<cplx> w;
};

inline ComposedWeights compose_weights(const std::vector<RevivalWeights>& factors) {
  std::int64_t Q = 1;
  for (const auto& f : factors) Q = std::lcm(Q, f.q);
  ComposedWeights cw;
  cw.Q = Q;
  cw.w.assign(static_cast<size_t>(Q), cplx{0.0, 0.0});
  cw.w[0] = 1.0;
  for (const auto& f : factors) {
    std::vector<cplx> next(static_cast<size_t>(Q), cplx{0.0, 0.0});
    const std::int64_t stride = Q / f.q;
    for (std::int64_t i = 0; i < Q; ++i) {
      if (cw.w[static_cast<size_t>(i)] == cplx{0.0, 0.0}) continue;
      for (std::int64_t k = 0; k < f.q; ++k) {
        std::int64_t idx = (i + k * stride) % Q;
        next[static_cast<size_t>(idx)] += cw.w[static_cast<size_t>(i)] * f.w[static_cast<size_t>(k)];
      }
    }
    cw.w = std::move(next);
  }
  return cw;
}

inline SpectralState apply_composed_weights(const SpectralState& state, const ComposedWeights& cw) {
  RevivalWeights as_weights;
  as_weights.order = 1;
  as_weights.p = 1;
  as_weights.q = cw.Q;
  as_weights.w = cw.w;
  return apply_revival(state, as_weights);
}

}  // namespace revlab
