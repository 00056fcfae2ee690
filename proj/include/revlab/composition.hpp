#pragma once

#include <stdexcept>

#include "revlab/evolution.hpp"
#include "revlab/polynomial.hpp"
#include "revlab/revival.hpp"
#include "revlab/state.hpp"

namespace revlab {

enum class CompositionMode { diagonal, revival_where_rational, revival_only };

namespace detail {

// Rational factor time reduced to a revival operator argument. R_k(2*pi*r)
// depends on r only through r mod 1; a zero residue is the identity.
inline std::optional<RevivalWeights> factor_weights(const CompositionFactor& f) {
  Rational frac = f.turns->mod_one();
  if (frac.is_zero()) return std::nullopt;
  return revival_weights(f.order, static_cast<std::int64_t>(frac.num()),
                         static_cast<std::int64_t>(frac.den()));
}

}  // namespace detail

// Runs a composition plan against a periodic state. Every factor is the
// diagonal multiplier e^{-i j^k tau}; in the revival modes, factors with
// rational time are instead applied as their finite translation combination.
// Both routes agree with evolve_periodic on the matching transformed problem.
inline SpectralState evolve_by_composition(const SpectralState& state, const CompositionPlan& plan,
                                           CompositionMode mode = CompositionMode::diagonal) {
  if (state.basis() != Basis::periodic)
    throw std::invalid_argument("evolve_by_composition acts on periodic states only");
  SpectralState out = state;
  for (const auto& f : plan.factors) {
    const bool rational = f.time_is_rational && f.turns.has_value();
    if (mode != CompositionMode::diagonal && rational) {
      if (auto rw = detail::factor_weights(f)) out = apply_revival(out, *rw);
      continue;
    }
    if (mode == CompositionMode::revival_only && !rational)
      throw std::invalid_argument("revival-only composition hit a factor with irrational time");
    if (rational) {
      out = apply_group(out, f.order, TimeValue::turns(*f.turns));
    } else {
      std::vector<detail::dd> c(static_cast<size_t>(f.order) + 1);
      c.back() = f.turns_dd;
      out = detail::apply_diagonal(out, PhasePolynomial::from_dd(std::move(c)));
    }
  }
  return out;
}

// Collapses all rational factors of a plan into one composed weight vector
// over the common translation grid. Requires every factor to be rational.
inline ComposedWeights plan_composed_weights(const CompositionPlan& plan) {
  std::vector<RevivalWeights> factors;
  for (const auto& f : plan.factors) {
    if (!f.time_is_rational || !f.turns)
      throw std::invalid_argument("composed weights need every factor time rational");
    if (auto rw = detail::factor_weights(f)) factors.push_back(std::move(*rw));
  }
  return compose_weights(factors);
}

}  // namespace revlab
