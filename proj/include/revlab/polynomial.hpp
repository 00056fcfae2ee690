#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "revlab/detail/dd.hpp"
#include "revlab/detail/modmath.hpp"
#include "revlab/phase.hpp"
#include "revlab/rational.hpp"
#include "revlab/theta.hpp"

namespace revlab {

// Dispersion polynomial P(x) = sum_{m=0}^{n} alpha_m x^m with integer
// coefficients and alpha_n != 0. Orders below 2 are rejected; order 2 is the
// special second-order path, everything from 3 up feeds the full pipeline.
class DispersionPolynomial {
 public:
  explicit DispersionPolynomial(std::vector<std::int64_t> alpha) : alpha_(std::move(alpha)) {
    if (alpha_.size() < 3) throw std::invalid_argument("dispersion polynomial needs order >= 2");
    if (alpha_.back() == 0) throw std::invalid_argument("leading dispersion coefficient must be nonzero");
  }

  static DispersionPolynomial monomial(int n) {
    if (n < 2) throw std::invalid_argument("dispersion polynomial needs order >= 2");
    std::vector<std::int64_t> a(static_cast<size_t>(n) + 1, 0);
    a.back() = 1;
    return DispersionPolynomial(std::move(a));
  }

  int order() const { return static_cast<int>(alpha_.size()) - 1; }
  std::span<const std::int64_t> alpha() const { return alpha_; }
  std::int64_t alpha(int m) const { return alpha_[static_cast<size_t>(m)]; }

  std::string describe() const {
    std::string s;
    for (size_t i = 0; i < alpha_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(alpha_[i]);
    }
    return s;
  }

 private:
  std::vector<std::int64_t> alpha_;
};

inline double eval_P(const DispersionPolynomial& P, double x) {
  double acc = 0.0;
  for (auto it = P.alpha().rbegin(); it != P.alpha().rend(); ++it) acc = acc * x + static_cast<double>(*it);
  return acc;
}

inline Rational eval_P_exact(const DispersionPolynomial& P, const Rational& x) {
  Rational acc;
  for (auto it = P.alpha().rbegin(); it != P.alpha().rend(); ++it)
    acc = acc * x + Rational::from_int(*it);
  return acc;
}

// Drift constant: the derivative P'(theta).
inline double drift(const DispersionPolynomial& P, const ThetaValue& theta) {
  double acc = 0.0;
  int n = P.order();
  for (int m = n; m >= 1; --m) acc = acc * theta.value() + static_cast<double>(m) * static_cast<double>(P.alpha(m));
  return acc;
}

inline Rational drift_exact(const DispersionPolynomial& P, const Rational& theta) {
  Rational acc;
  for (int m = P.order(); m >= 1; --m)
    acc = acc * theta + Rational::from_int(m) * Rational::from_int(P.alpha(m));
  return acc;
}

// Transformed dispersion polynomial A(x) = sum_{k=2}^{n} a_k x^k with
// a_k = sum_{m=k}^{n} alpha_m C(m,k) theta^{m-k}. Satisfies
// A(x) = P(x+theta) - P(theta) - P'(theta) x at every point. Coefficients are
// kept as float64, as double-double, and (for rational theta within 128-bit
// range) exactly.
class TransformedPolynomial {
 public:
  TransformedPolynomial(const DispersionPolynomial& source, const ThetaValue& theta)
      : source_(source), theta_(theta) {
    int n = source.order();
    if (n < 2) throw std::invalid_argument("transform needs order >= 2");
    a_dd_.assign(static_cast<size_t>(n) + 1, detail::dd{});
    detail::dd th = detail::dd_from_double(theta.value());
    for (int k = 2; k <= n; ++k) {
      detail::dd acc{};
      detail::dd power{1.0, 0.0};
      for (int m = k; m <= n; ++m) {
        int128 c = detail::binomial(m, k);
        acc = detail::dd_add(acc, detail::dd_mul(power, static_cast<double>(c) * static_cast<double>(source.alpha(m))));
        power = detail::dd_mul(power, th);
      }
      a_dd_[static_cast<size_t>(k)] = acc;
    }
    if (auto exact_theta = theta.exact()) {
      try {
        std::vector<Rational> exact(static_cast<size_t>(n) + 1);
        for (int k = 2; k <= n; ++k) {
          Rational acc;
          for (int m = k; m <= n; ++m)
            acc = acc + Rational::from_int(source.alpha(m)) * Rational(detail::binomial(m, k), 1) *
                            exact_theta->pow(static_cast<unsigned>(m - k));
          exact[static_cast<size_t>(k)] = acc;
        }
        a_exact_ = std::move(exact);
      } catch (const overflow_error&) {
        // fall back to the dd coefficients only
      }
    }
  }

  int order() const { return source_.order(); }
  const DispersionPolynomial& source() const { return source_; }
  const ThetaValue& theta() const { return theta_; }

  double coefficient(int k) const { return detail::dd_to_double(a_dd_[static_cast<size_t>(k)]); }
  detail::dd coefficient_dd(int k) const { return a_dd_[static_cast<size_t>(k)]; }
  const std::optional<std::vector<Rational>>& exact_coefficients() const { return a_exact_; }

  double eval(double x) const {
    double acc = 0.0;
    for (int k = order(); k >= 2; --k) acc = acc * x + coefficient(k);
    return acc * x * x;
  }

 private:
  DispersionPolynomial source_;
  ThetaValue theta_;
  std::vector<detail::dd> a_dd_;                    // index = power, entries 0,1 unused
  std::optional<std::vector<Rational>> a_exact_;    // same layout, rational theta only
};

inline TransformedPolynomial transform_polynomial(const DispersionPolynomial& P, const ThetaValue& theta) {
  return TransformedPolynomial(P, theta);
}

// Eigenvalue of the quasi-periodic operator on mode j.
inline double quasi_eigenvalue(const DispersionPolynomial& P, const ThetaValue& theta, std::int64_t j) {
  return eval_P(P, static_cast<double>(j) + theta.value());
}

inline Rational quasi_eigenvalue_exact(const DispersionPolynomial& P, const Rational& theta, std::int64_t j) {
  return eval_P_exact(P, Rational::from_int(j) + theta);
}

// One unitary-group factor R_order(time) of the composition representation.
// turns_dd carries time / 2*pi to double-double precision; the float64 `time`
// field alone would let j^order amplify its rounding far past the identity
// tolerances.
struct CompositionFactor {
  int order = 2;
  double time = 0.0;                   // seconds
  bool time_is_rational = false;
  std::optional<Rational> turns;       // time / 2*pi when rational (signed)
  detail::dd turns_dd{};               // time / 2*pi, always populated
};

struct CompositionPlan {
  std::vector<CompositionFactor> factors;
};

// Splits e^{-i A(j) t} into monomial-group factors: R_l(alpha_l t) for
// l = 2..n, then R_k(alpha_{m+1} C(m+1,k) theta^{m+1-k} t) for m = 2..n-1,
// k = 2..m. Zero-coefficient factors are dropped. The factors commute, so the
// recorded order matters only for reproducibility.
inline CompositionPlan composition_plan(const DispersionPolynomial& P, const ThetaValue& theta,
                                        const TimeValue& t) {
  int n = P.order();
  if (n < 3) throw std::invalid_argument("composition plan needs order >= 3");
  CompositionPlan plan;

  const std::optional<Rational> t_turns = t.exact_turns();
  const std::optional<Rational> theta_exact = theta.exact();
  const detail::dd t_turns_dd = detail::time_turns_dd(t);
  const detail::dd theta_dd = detail::dd_from_double(theta.value());

  for (int l = 2; l <= n; ++l) {
    if (P.alpha(l) == 0) continue;
    CompositionFactor f;
    f.order = l;
    f.turns_dd = detail::dd_mul(t_turns_dd, static_cast<double>(P.alpha(l)));
    f.time = static_cast<double>(P.alpha(l)) * t.seconds();
    if (t_turns) {
      try {
        f.turns = Rational::from_int(P.alpha(l)) * *t_turns;
        f.time_is_rational = true;
        f.time = kTwoPi * f.turns->to_double();
      } catch (const overflow_error&) {
      }
    }
    plan.factors.push_back(std::move(f));
  }

  for (int m = 2; m <= n - 1; ++m) {
    if (P.alpha(m + 1) == 0) continue;
    for (int k = 2; k <= m; ++k) {
      int128 binom = detail::binomial(m + 1, k);
      int e = m + 1 - k;
      CompositionFactor f;
      f.order = k;
      detail::dd theta_pow{1.0, 0.0};
      for (int i = 0; i < e; ++i) theta_pow = detail::dd_mul(theta_pow, theta_dd);
      f.turns_dd = detail::dd_mul(detail::dd_mul(t_turns_dd, theta_pow),
                                  static_cast<double>(P.alpha(m + 1)) * static_cast<double>(binom));
      f.time = detail::dd_to_double(f.turns_dd) * kTwoPi;
      if (t_turns && theta_exact) {
        try {
          f.turns = Rational::from_int(P.alpha(m + 1)) * Rational(binom, 1) *
                    theta_exact->pow(static_cast<unsigned>(e)) * *t_turns;
          f.time_is_rational = true;
          f.time = kTwoPi * f.turns->to_double();
        } catch (const overflow_error&) {
        }
      }
      plan.factors.push_back(std::move(f));
    }
  }
  return plan;
}

// ---- phase-coefficient builders ----------------------------------------
//
// Every diagonal operator in the pipeline is e^{-2*pi*i f(j)} for a low-degree
// polynomial f. These build the PhasePolynomial for each family, routing
// through exact rationals whenever theta and t allow it.

namespace detail {

inline std::optional<std::vector<Rational>> quasi_turns_exact(const DispersionPolynomial& P,
                                                              const Rational& theta,
                                                              const Rational& t_turns) {
  int n = P.order();
  try {
    std::vector<Rational> c(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
      Rational acc;
      for (int m = k; m <= n; ++m)
        acc = acc + Rational::from_int(P.alpha(m)) * Rational(binomial(m, k), 1) *
                        theta.pow(static_cast<unsigned>(m - k));
      c[static_cast<size_t>(k)] = acc * t_turns;
    }
    return c;
  } catch (const overflow_error&) {
    return std::nullopt;
  }
}

inline std::vector<dd> quasi_turns_dd(const DispersionPolynomial& P, const ThetaValue& theta,
                                      const TimeValue& t) {
  int n = P.order();
  dd tt = time_turns_dd(t);
  dd th = dd_from_double(theta.value());
  std::vector<dd> c(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    dd acc{};
    dd power{1.0, 0.0};
    for (int m = k; m <= n; ++m) {
      acc = dd_add(acc, dd_mul(power, static_cast<double>(binomial(m, k)) * static_cast<double>(P.alpha(m))));
      power = dd_mul(power, th);
    }
    c[static_cast<size_t>(k)] = dd_mul(acc, tt);
  }
  return c;
}

}  // namespace detail

// Multiplier for the quasi-periodic evolution: f(j) = P(j + theta) * t / 2*pi.
inline PhasePolynomial quasi_phase(const DispersionPolynomial& P, const ThetaValue& theta,
                                   const TimeValue& t) {
  if (theta.exact() && t.is_rational())
    if (auto exact = detail::quasi_turns_exact(P, *theta.exact(), t.as_turns()))
      return PhasePolynomial::from_rationals(*exact);
  return PhasePolynomial::from_dd(detail::quasi_turns_dd(P, theta, t));
}

// Multiplier for the transformed periodic evolution: f(j) = A(j) * t / 2*pi.
inline PhasePolynomial periodic_phase(const TransformedPolynomial& A, const TimeValue& t) {
  if (A.exact_coefficients() && t.is_rational()) {
    try {
      std::vector<Rational> c(A.exact_coefficients()->size());
      for (size_t k = 2; k < c.size(); ++k) c[k] = (*A.exact_coefficients())[k] * t.as_turns();
      return PhasePolynomial::from_rationals(c);
    } catch (const overflow_error&) {
    }
  }
  detail::dd tt = detail::time_turns_dd(t);
  std::vector<detail::dd> c(static_cast<size_t>(A.order()) + 1);
  for (int k = 2; k <= A.order(); ++k) c[static_cast<size_t>(k)] = detail::dd_mul(A.coefficient_dd(k), tt);
  return PhasePolynomial::from_dd(std::move(c));
}

// Multiplier applied when pulling a periodic solution back to the quasi basis:
// f(j) = (P(theta) + s_theta * j) * t / 2*pi.
inline PhasePolynomial correspondence_phase(const DispersionPolynomial& P, const ThetaValue& theta,
                                            const TimeValue& t) {
  if (theta.exact() && t.is_rational()) {
    try {
      Rational c0 = eval_P_exact(P, *theta.exact()) * t.as_turns();
      Rational c1 = drift_exact(P, *theta.exact()) * t.as_turns();
      return PhasePolynomial::from_rationals({c0, c1});
    } catch (const overflow_error&) {
    }
  }
  detail::dd tt = detail::time_turns_dd(t);
  detail::dd th = detail::dd_from_double(theta.value());
  detail::dd p0{};
  detail::dd p1{};
  for (int m = P.order(); m >= 0; --m) {
    if (m >= 1) p1 = detail::dd_add(detail::dd_mul(p1, th), static_cast<double>(m) * static_cast<double>(P.alpha(m)));
    p0 = detail::dd_add(detail::dd_mul(p0, th), static_cast<double>(P.alpha(m)));
  }
  return PhasePolynomial::from_dd({detail::dd_mul(p0, tt), detail::dd_mul(p1, tt)});
}

// Multiplier of the monomial group R_order: f(j) = j^order * time / 2*pi.
inline PhasePolynomial group_phase(int order, const TimeValue& time) {
  if (order < 1) throw std::invalid_argument("group order must be >= 1");
  if (time.is_rational()) {
    std::vector<Rational> c(static_cast<size_t>(order) + 1);
    c.back() = time.as_turns();
    return PhasePolynomial::from_rationals(c);
  }
  std::vector<detail::dd> c(static_cast<size_t>(order) + 1);
  c.back() = detail::time_turns_dd(time);
  return PhasePolynomial::from_dd(std::move(c));
}

}  // namespace revlab
