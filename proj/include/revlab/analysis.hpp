#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "revlab/parallel.hpp"
#include "revlab/state.hpp"
#include "revlab/transforms.hpp"

namespace revlab {

enum class Part { re, im, abs };

inline double part_value(cplx v, Part p) {
  switch (p) {
    case Part::re: return v.real();
    case Part::im: return v.imag();
    default: return std::abs(v);
  }
}

inline double parseval_norm(const SpectralState& state) { return state.norm(); }

// Discrete total variation, including the periodic wrap term.
inline double total_variation(const GridProfile& profile, Part part) {
  const auto& s = profile.samples();
  double tv = 0.0;
  for (size_t k = 0; k < s.size(); ++k) {
    size_t next = (k + 1) % s.size();
    tv += std::abs(part_value(s[next], part) - part_value(s[k], part));
  }
  return tv;
}

// Window oscillation around a point, per radius.
struct OscillationReport {
  double center = 0.0;
  std::vector<double> radii;         // descending
  std::vector<double> oscillation;   // max - min of the requested part
  enum class Verdict { jump_persists, decays } verdict = Verdict::jump_persists;
};

// max - min of the requested part over the samples within `radius` of x0
// (circular distance), optionally dropping the `exclude_nearest` samples
// closest to x0. The exclusion implements the Gibbs window for metrics taken
// at candidate discontinuities.
inline double window_oscillation(const GridProfile& profile, double x0, double radius, Part part,
                                 int exclude_nearest = 0) {
  const size_t N = profile.N();
  std::vector<std::pair<double, double>> in_window;  // (distance, value)
  for (size_t k = 0; k < N; ++k) {
    double d = std::remainder(profile.x(k) - x0, kTwoPi);
    if (std::abs(d) <= radius) in_window.emplace_back(std::abs(d), part_value(profile.samples()[k], part));
  }
  if (exclude_nearest > 0) {
    std::sort(in_window.begin(), in_window.end());
    if (static_cast<size_t>(exclude_nearest) >= in_window.size()) return 0.0;
    in_window.erase(in_window.begin(), in_window.begin() + exclude_nearest);
  }
  if (in_window.empty()) return 0.0;
  double lo = in_window.front().second, hi = lo;
  for (const auto& [d, v] : in_window) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return hi - lo;
}

// Verdict: decays iff the oscillation at the smallest radius has dropped below
// half the oscillation at the largest.
inline OscillationReport oscillation_at(const GridProfile& profile, double x0,
                                        std::vector<double> radii, Part part,
                                        int exclude_nearest = 0) {
  if (radii.empty()) throw std::invalid_argument("oscillation_at needs at least one radius");
  const double min_radius = 2.0 * profile.dx();
  std::sort(radii.rbegin(), radii.rend());
  for (double r : radii)
    if (r < min_radius) throw std::invalid_argument("oscillation radius below 2 grid spacings");
  OscillationReport rep;
  rep.center = x0 - kTwoPi * std::floor(x0 / kTwoPi);
  rep.radii = radii;
  for (double r : radii)
    rep.oscillation.push_back(window_oscillation(profile, rep.center, r, part, exclude_nearest));
  rep.verdict = rep.oscillation.back() < 0.5 * rep.oscillation.front()
                    ? OscillationReport::Verdict::decays
                    : OscillationReport::Verdict::jump_persists;
  return rep;
}

// |e^{2*pi*i*theta} u(0) - u(2*pi)| evaluated from the truncated expansion.
inline double boundary_twist_residual(const SpectralState& state) {
  const double theta = state.basis() == Basis::quasi ? state.theta().value() : 0.0;
  cplx left = evaluate_state_at(state, 0.0);
  cplx right = evaluate_state_at(state, kTwoPi);
  return std::abs(cis(kTwoPi * theta) * left - right);
}

// Sampled variant. The grid stops short of 2*pi, so the right end value is
// extrapolated by a 4-point one-sided polynomial fit.
inline double boundary_twist_residual(const GridProfile& profile, const ThetaValue& theta) {
  const size_t N = profile.N();
  if (N < 4) throw std::invalid_argument("boundary residual needs at least 4 samples");
  cplx right{0.0, 0.0};
  // Lagrange extrapolation at x = 2*pi from the last four samples.
  for (size_t a = 0; a < 4; ++a) {
    size_t ka = N - 4 + a;
    double num = 1.0, den = 1.0;
    for (size_t b = 0; b < 4; ++b) {
      if (a == b) continue;
      size_t kb = N - 4 + b;
      num *= kTwoPi - profile.x(kb);
      den *= profile.x(ka) - profile.x(kb);
    }
    right += profile.samples()[ka] * (num / den);
  }
  return std::abs(cis(kTwoPi * theta.value()) * profile.samples()[0] - right);
}

// Box-counting report for the graph of one real part of a profile.
struct BoxCountReport {
  std::vector<double> scales;      // dyadic epsilon values, coarse to fine
  std::vector<long> counts;        // occupied boxes per scale
  double dimension = 1.0;          // fitted slope of log N vs log 1/eps
  size_t fit_begin = 0;            // index range of the fitted window
  size_t fit_end = 0;
  double r_squared = 1.0;
};

// Column-sweep box counting on the graph normalized to [0,1]^2. Scales run
// over eps = 2^-k, k = 2 .. floor(log2 N) - 2; the least-squares fit drops the
// two coarsest and two finest scales. The raw slope is reported unclamped,
// with r^2 exposing bad fits. A flat profile reports dimension 1 by
// convention.
inline BoxCountReport box_dimension(const GridProfile& profile, Part part) {
  const size_t N = profile.N();
  if (N < (1u << 10)) throw std::invalid_argument("box_dimension needs N >= 1024");
  if (part == Part::abs) throw std::invalid_argument("box_dimension takes re or im");
  std::vector<double> y(N);
  for (size_t k = 0; k < N; ++k) y[k] = part_value(profile.samples()[k], part);
  const auto [lo_it, hi_it] = std::minmax_element(y.begin(), y.end());
  const double lo = *lo_it, hi = *hi_it;
  BoxCountReport rep;
  if (hi == lo) return rep;  // flat graph
  for (auto& v : y) v = (v - lo) / (hi - lo);

  const int kmax = static_cast<int>(std::floor(std::log2(static_cast<double>(N)))) - 2;
  for (int k = 2; k <= kmax; ++k) {
    const size_t columns = size_t{1} << k;
    const double eps = std::pow(2.0, -k);
    std::vector<long> col_counts(columns, 0);
    parallel_chunks(columns, [&](size_t, size_t begin, size_t end) {
      for (size_t c = begin; c < end; ++c) {
        // samples with floor(k * columns / N) == c
        size_t first = (c * N + columns - 1) / columns;
        size_t last = std::min(N, ((c + 1) * N + columns - 1) / columns);
        double cmin = y[first], cmax = y[first];
        for (size_t i = first + 1; i < last; ++i) {
          cmin = std::min(cmin, y[i]);
          cmax = std::max(cmax, y[i]);
        }
        col_counts[c] = static_cast<long>(std::ceil((cmax - cmin) / eps)) + 1;
      }
    });
    long total = std::accumulate(col_counts.begin(), col_counts.end(), 0L);
    rep.scales.push_back(eps);
    rep.counts.push_back(total);
  }

  const size_t n_scales = rep.scales.size();
  if (n_scales < 5) throw std::invalid_argument("box_dimension needs at least 5 scales");
  rep.fit_begin = 2;
  rep.fit_end = n_scales - 2;
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  const double m = static_cast<double>(rep.fit_end - rep.fit_begin);
  for (size_t i = rep.fit_begin; i < rep.fit_end; ++i) {
    double X = std::log(1.0 / rep.scales[i]);
    double Y = std::log(static_cast<double>(rep.counts[i]));
    sx += X;
    sy += Y;
    sxx += X * X;
    sxy += X * Y;
    syy += Y * Y;
  }
  const double denom = m * sxx - sx * sx;
  rep.dimension = (m * sxy - sx * sy) / denom;
  const double ss_tot = syy - sy * sy / m;
  const double intercept = (sy - rep.dimension * sx) / m;
  double ss_res = 0;
  for (size_t i = rep.fit_begin; i < rep.fit_end; ++i) {
    double X = std::log(1.0 / rep.scales[i]);
    double Y = std::log(static_cast<double>(rep.counts[i]));
    double r = Y - (rep.dimension * X + intercept);
    ss_res += r * r;
  }
  rep.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
  return rep;
}

// max_j |direct_j - via_j| between two coefficient vectors of the same shape.
inline double revival_residual(const SpectralState& direct, const SpectralState& via) {
  if (direct.J() != via.J() || direct.basis() != via.basis())
    throw std::invalid_argument("revival_residual needs matching states");
  double worst = 0.0;
  for (size_t i = 0; i < direct.size(); ++i)
    worst = std::max(worst, std::abs(direct.coeffs()[i] - via.coeffs()[i]));
  return worst;
}

}  // namespace revlab
