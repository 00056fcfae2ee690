#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "revlab/phase.hpp"
#include "revlab/theta.hpp"

namespace revlab {

enum class Basis { periodic, quasi };

// Truncated coefficient vector over modes j in [-J, J]. In the quasi basis the
// coefficients expand against e^{i(j+theta)x}/sqrt(2*pi); in the periodic
// basis against e^{ijx}/sqrt(2*pi). Re-tagging the basis keeps the vector and
// reinterprets the expansion (the e^{-i theta x} gauge map in sample space).
class SpectralState {
 public:
  SpectralState(int J, Basis basis, std::optional<ThetaValue> theta = std::nullopt)
      : J_(J), basis_(basis), theta_(std::move(theta)), coeffs_(static_cast<size_t>(2 * J + 1)) {
    if (J < 0) throw std::invalid_argument("negative truncation order");
    if (basis == Basis::quasi && !theta_) throw std::invalid_argument("quasi basis needs theta");
    if (basis == Basis::periodic) theta_.reset();
  }

  static SpectralState periodic(int J) { return SpectralState(J, Basis::periodic); }
  static SpectralState quasi(int J, const ThetaValue& theta) {
    return SpectralState(J, Basis::quasi, theta);
  }

  int J() const { return J_; }
  size_t size() const { return coeffs_.size(); }
  Basis basis() const { return basis_; }
  const ThetaValue& theta() const {
    if (!theta_) throw std::logic_error("periodic state has no theta");
    return *theta_;
  }

  const cplx& at(std::int64_t j) const { return coeffs_[index(j)]; }
  cplx& at(std::int64_t j) { return coeffs_[index(j)]; }
  const std::vector<cplx>& coeffs() const { return coeffs_; }
  std::vector<cplx>& coeffs() { return coeffs_; }

  SpectralState retagged(Basis basis, std::optional<ThetaValue> theta = std::nullopt) const {
    SpectralState out(J_, basis, std::move(theta));
    out.coeffs_ = coeffs_;
    return out;
  }

  SpectralState scaled(cplx factor) const {
    SpectralState out = *this;
    for (auto& c : out.coeffs_) c *= factor;
    return out;
  }

  double norm() const {
    double s = 0.0;
    for (const auto& c : coeffs_) s += std::norm(c);
    return std::sqrt(s);
  }

 private:
  size_t index(std::int64_t j) const {
    if (j < -J_ || j > J_) throw std::out_of_range("mode index outside [-J, J]");
    return static_cast<size_t>(j + J_);
  }

  int J_;
  Basis basis_;
  std::optional<ThetaValue> theta_;
  std::vector<cplx> coeffs_;
};

// Metadata attached to sampled profiles, carried into manifests.
struct ProfileMeta {
  std::string polynomial;
  std::string theta;
  std::string time;
  std::string method;
  int J = 0;
};

// N uniform complex samples at x_k = 2*pi*k/N, k = 0..N-1.
class GridProfile {
 public:
  GridProfile(std::vector<cplx> samples, ProfileMeta meta = {})
      : samples_(std::move(samples)), meta_(std::move(meta)) {
    if (samples_.size() < 2) throw std::invalid_argument("profile needs at least 2 samples");
  }

  size_t N() const { return samples_.size(); }
  double x(size_t k) const { return kTwoPi * static_cast<double>(k) / static_cast<double>(N()); }
  double dx() const { return kTwoPi / static_cast<double>(N()); }
  const std::vector<cplx>& samples() const { return samples_; }
  std::vector<cplx>& samples() { return samples_; }
  const ProfileMeta& meta() const { return meta_; }
  ProfileMeta& meta() { return meta_; }

 private:
  std::vector<cplx> samples_;
  ProfileMeta meta_;
};

}  // namespace revlab
