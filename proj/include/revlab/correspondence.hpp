#pragma once

#include <stdexcept>

#include "revlab/evolution.hpp"
#include "revlab/polynomial.hpp"
#include "revlab/state.hpp"

namespace revlab {

// Quasi solution at time t mapped to the transformed periodic problem. The
// coefficient relation is z_hat(j,t) = u_hat(j,t) e^{+i P(theta) t} e^{+i j s_theta t};
// the j-independent factor is returned separately so the inverse below undoes
// the pair exactly. The full periodic coefficients are global_phase * state.
struct CorrespondenceResult {
  SpectralState state;
  cplx global_phase{1.0, 0.0};
};

inline CorrespondenceResult quasi_to_periodic(const SpectralState& u, const DispersionPolynomial& P,
                                              const TimeValue& t) {
  if (u.basis() != Basis::quasi) throw std::invalid_argument("quasi_to_periodic needs a quasi state");
  const ThetaValue theta = u.theta();
  PhasePolynomial phase = correspondence_phase(P, theta, t);
  SpectralState z = u.retagged(Basis::periodic);
  // phase.factor(j) = e^{-i(P(theta) + j s_theta) t}; conjugate gives the forward map.
  for (std::int64_t j = -u.J(); j <= u.J(); ++j)
    z.at(j) *= std::conj(phase.factor(j) / phase.factor(0));
  return {std::move(z), std::conj(phase.factor(0))};
}

// Periodic solution pulled back to the quasi basis:
// u_hat(j,t) = z_hat(j,t) e^{-i P(theta) t} e^{-i j s_theta t}.
inline SpectralState periodic_to_quasi(const SpectralState& z, const DispersionPolynomial& P,
                                       const ThetaValue& theta, const TimeValue& t) {
  if (z.basis() != Basis::periodic) throw std::invalid_argument("periodic_to_quasi needs a periodic state");
  PhasePolynomial phase = correspondence_phase(P, theta, t);
  SpectralState u = z.retagged(Basis::quasi, theta);
  for (std::int64_t j = -z.J(); j <= z.J(); ++j) u.at(j) *= phase.factor(j);
  return u;
}

inline SpectralState periodic_to_quasi(const CorrespondenceResult& cr, const DispersionPolynomial& P,
                                       const ThetaValue& theta, const TimeValue& t) {
  return periodic_to_quasi(cr.state.scaled(cr.global_phase), P, theta, t);
}

}  // namespace revlab
