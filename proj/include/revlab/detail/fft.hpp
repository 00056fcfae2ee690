#pragma once

#include <complex>
#include <map>
#include <mutex>
#include <vector>

#include <fftw3.h>

namespace revlab::detail {

// Minimal FFTW front end. Plans are cached per (size, direction) and created
// with FFTW_ESTIMATE | FFTW_UNALIGNED, so execution is deterministic and may
// run concurrently on caller-owned buffers. The planner itself is not
// thread-safe and is serialized by a mutex.
class FftPlans {
 public:
  static FftPlans& instance() {
    static FftPlans p;
    return p;
  }

  void execute(std::vector<std::complex<double>>& data, int sign) {
    fftw_plan plan = acquire(static_cast<int>(data.size()), sign);
    auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(plan, ptr, ptr);
  }

 private:
  fftw_plan acquire(int n, int sign) {
    std::scoped_lock lock(mutex_);
    auto key = std::pair{n, sign};
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;
    std::vector<std::complex<double>> scratch(static_cast<size_t>(n));
    auto* ptr = reinterpret_cast<fftw_complex*>(scratch.data());
    fftw_plan plan = fftw_plan_dft_1d(n, ptr, ptr, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans_.emplace(key, plan);
    return plan;
  }

  std::mutex mutex_;
  std::map<std::pair<int, int>, fftw_plan> plans_;
};

// F_m = sum_k f_k e^{-2*pi*i*m*k/N}, in place.
inline void dft_forward(std::vector<std::complex<double>>& data) {
  FftPlans::instance().execute(data, FFTW_FORWARD);
}

// f_k = sum_m F_m e^{+2*pi*i*m*k/N}, in place, unnormalized.
inline void dft_backward(std::vector<std::complex<double>>& data) {
  FftPlans::instance().execute(data, FFTW_BACKWARD);
}

}  // namespace revlab::detail
