#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "revlab/detail/fft.hpp"
#include "revlab/state.hpp"

namespace revlab {

inline constexpr double kSqrtTwoPi = 2.5066282746310002;  // sqrt(2*pi)

// Samples -> coefficients by exact DFT quadrature of the basis inner products.
// Band-limited input (modes within [-J, J]) is recovered exactly; general
// input picks up the usual O(1/N) quadrature error. For the quasi basis the
// samples are demodulated by e^{-i theta x_k} first.
inline SpectralState analyze(const GridProfile& profile, int J, Basis basis,
                             std::optional<ThetaValue> theta = std::nullopt) {
  const size_t N = profile.N();
  if (N < static_cast<size_t>(2 * J + 1)) throw std::invalid_argument("analyze needs N >= 2J+1");
  std::vector<cplx> work = profile.samples();
  if (basis == Basis::quasi) {
    if (!theta) throw std::invalid_argument("quasi analyze needs theta");
    const double th = theta->value();
    for (size_t k = 0; k < N; ++k) work[k] *= cis(-th * profile.x(k));
  }
  detail::dft_forward(work);
  SpectralState state(J, basis, theta);
  const double scale = kSqrtTwoPi / static_cast<double>(N);
  for (std::int64_t j = -J; j <= J; ++j) {
    size_t idx = static_cast<size_t>(((j % static_cast<std::int64_t>(N)) + static_cast<std::int64_t>(N)) %
                                     static_cast<std::int64_t>(N));
    state.at(j) = work[idx] * scale;
  }
  return state;
}

// Coefficients -> samples. Zero-padded inverse DFT; the quasi basis multiplies
// the periodic synthesis pointwise by e^{+i theta x_k}.
inline GridProfile synthesize(const SpectralState& state, size_t N, ProfileMeta meta = {}) {
  const int J = state.J();
  if (N < static_cast<size_t>(2 * J + 1)) throw std::invalid_argument("synthesize needs N >= 2J+1");
  std::vector<cplx> work(N, cplx{0.0, 0.0});
  for (std::int64_t j = -J; j <= J; ++j) {
    size_t idx = static_cast<size_t>(((j % static_cast<std::int64_t>(N)) + static_cast<std::int64_t>(N)) %
                                     static_cast<std::int64_t>(N));
    work[idx] = state.at(j) / kSqrtTwoPi;
  }
  detail::dft_backward(work);
  if (state.basis() == Basis::quasi) {
    const double th = state.theta().value();
    for (size_t k = 0; k < N; ++k)
      work[k] *= cis(th * kTwoPi * static_cast<double>(k) / static_cast<double>(N));
  }
  meta.J = J;
  return GridProfile(std::move(work), std::move(meta));
}

// Evaluates the truncated expansion directly at one point. O(J) per call;
// used for end-point diagnostics where the uniform grid does not reach.
inline cplx evaluate_state_at(const SpectralState& state, double x) {
  const double th = state.basis() == Basis::quasi ? state.theta().value() : 0.0;
  cplx sum{0.0, 0.0};
  for (std::int64_t j = -state.J(); j <= state.J(); ++j)
    sum += state.at(j) * cis((static_cast<double>(j) + th) * x);
  return sum / kSqrtTwoPi;
}

// Closed-form coefficients of the indicator of (pi/2, 3*pi/2) in the quasi
// basis: c_j = (i/sqrt(2*pi)) (e^{-3*pi*i(j+theta)/2} - e^{-pi*i(j+theta)/2}) / (j+theta).
inline SpectralState box_coefficients_closed_form(const ThetaValue& theta, int J) {
  SpectralState state = SpectralState::quasi(J, theta);
  const double th = theta.value();
  const cplx i_unit{0.0, 1.0};
  for (std::int64_t j = -J; j <= J; ++j) {
    const double jt = static_cast<double>(j) + th;
    state.at(j) = i_unit / kSqrtTwoPi * (cis(-1.5 * std::numbers::pi * jt) - cis(-0.5 * std::numbers::pi * jt)) / jt;
  }
  return state;
}

// Exact samples of the same box indicator on the uniform grid (open interval,
// endpoints excluded).
inline GridProfile box_profile(size_t N, ProfileMeta meta = {}) {
  std::vector<cplx> samples(N, cplx{0.0, 0.0});
  for (size_t k = 0; k < N; ++k) {
    const double x = kTwoPi * static_cast<double>(k) / static_cast<double>(N);
    if (x > std::numbers::pi / 2 && x < 3 * std::numbers::pi / 2) samples[k] = 1.0;
  }
  return GridProfile(std::move(samples), std::move(meta));
}

}  // namespace revlab
