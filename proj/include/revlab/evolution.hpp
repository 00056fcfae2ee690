#pragma once

#include <stdexcept>

#include "revlab/polynomial.hpp"
#include "revlab/state.hpp"

namespace revlab {

namespace detail {

inline SpectralState apply_diagonal(const SpectralState& state, const PhasePolynomial& phase) {
  SpectralState out = state;
  for (std::int64_t j = -state.J(); j <= state.J(); ++j) out.at(j) *= phase.factor(j);
  return out;
}

}  // namespace detail

// Quasi-periodic evolution: c_j <- c_j e^{-i P(j+theta) t}.
inline SpectralState evolve_quasi(const SpectralState& state, const DispersionPolynomial& P,
                                  const TimeValue& t) {
  if (state.basis() != Basis::quasi) throw std::invalid_argument("evolve_quasi needs a quasi state");
  return detail::apply_diagonal(state, quasi_phase(P, state.theta(), t));
}

inline SpectralState evolve_quasi(const SpectralState& state, const DispersionPolynomial& P, double t) {
  return evolve_quasi(state, P, TimeValue::raw(t));
}

// Periodic evolution under the transformed polynomial: c_j <- c_j e^{-i A(j) t}.
inline SpectralState evolve_periodic(const SpectralState& state, const TransformedPolynomial& A,
                                     const TimeValue& t) {
  if (state.basis() != Basis::periodic) throw std::invalid_argument("evolve_periodic needs a periodic state");
  return detail::apply_diagonal(state, periodic_phase(A, t));
}

inline SpectralState evolve_periodic(const SpectralState& state, const TransformedPolynomial& A, double t) {
  return evolve_periodic(state, A, TimeValue::raw(t));
}

// Periodic translation T_s: c_j <- c_j e^{-i j s}. Quasi states are rejected;
// translating them silently would drop the e^{-i(j+theta)s} twist that the
// correspondence phases carry instead.
inline SpectralState translate(const SpectralState& state, const TimeValue& s) {
  if (state.basis() != Basis::periodic) throw std::invalid_argument("translate acts on periodic states only");
  PhasePolynomial phase = s.is_rational()
                              ? PhasePolynomial::from_rationals({Rational(), s.as_turns()})
                              : PhasePolynomial::from_dd({detail::dd{}, detail::time_turns_dd(s)});
  return detail::apply_diagonal(state, phase);
}

inline SpectralState translate(const SpectralState& state, double s) {
  return translate(state, TimeValue::raw(s));
}

// Monomial unitary group R_n(t): c_j <- c_j e^{-i j^n t}. R_1 is translation.
inline SpectralState apply_group(const SpectralState& state, int n, const TimeValue& t) {
  if (state.basis() != Basis::periodic) throw std::invalid_argument("apply_group acts on periodic states only");
  if (n < 1) throw std::invalid_argument("group order must be >= 1");
  return detail::apply_diagonal(state, group_phase(n, t));
}

inline SpectralState apply_group(const SpectralState& state, int n, double t) {
  return apply_group(state, n, TimeValue::raw(t));
}

// Second-order quasi evolution with eigenvalues sum_{m=0}^{2} alpha_m (j+theta)^m.
inline SpectralState evolve_second_order(const SpectralState& state,
                                         const std::array<std::int64_t, 3>& alpha,
                                         const TimeValue& t) {
  if (state.basis() != Basis::quasi) throw std::invalid_argument("evolve_second_order needs a quasi state");
  if (alpha[2] == 0) throw std::invalid_argument("second-order evolution needs alpha_2 != 0");
  DispersionPolynomial P({alpha[0], alpha[1], alpha[2]});
  return detail::apply_diagonal(state, quasi_phase(P, state.theta(), t));
}

inline SpectralState evolve_second_order(const SpectralState& state,
                                         const std::array<std::int64_t, 3>& alpha, double t) {
  return evolve_second_order(state, alpha, TimeValue::raw(t));
}

}  // namespace revlab
