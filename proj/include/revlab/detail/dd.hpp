#pragma once

#include <cmath>

namespace revlab::detail {

// Double-double value (~31 significant decimal digits). Needed because the
// per-mode phase arguments grow like j^n * t, which exceeds what a single
// double can carry down to the 1e-10 radian level at j ~ 2^11, n = 6.
struct dd {
  double hi = 0.0;
  double lo = 0.0;
};

inline dd two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

inline dd quick_two_sum(double a, double b) {
  double s = a + b;
  return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline dd dd_add(dd a, dd b) {
  dd s = two_sum(a.hi, b.hi);
  s.lo += a.lo + b.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline dd dd_add(dd a, double b) { return dd_add(a, dd{b, 0.0}); }

inline dd dd_neg(dd a) { return {-a.hi, -a.lo}; }

inline dd dd_sub(dd a, dd b) { return dd_add(a, dd_neg(b)); }

inline dd dd_mul(dd a, dd b) {
  dd p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline dd dd_mul(dd a, double b) { return dd_mul(a, dd{b, 0.0}); }

inline dd dd_div(dd a, dd b) {
  double q1 = a.hi / b.hi;
  dd r = dd_sub(a, dd_mul(b, q1));
  double q2 = r.hi / b.hi;
  r = dd_sub(r, dd_mul(b, q2));
  double q3 = r.hi / b.hi;
  dd q = quick_two_sum(q1, q2);
  return dd_add(q, q3);
}

inline dd dd_from_double(double v) { return {v, 0.0}; }

// Fractional part in [0, 1). Valid for |v| below ~2^103, where hi and lo
// still carry integer information exactly.
inline dd dd_frac(dd v) {
  double f1 = std::floor(v.hi);
  dd r = dd_add(dd{v.hi - f1, 0.0}, dd{v.lo, 0.0});
  double f2 = std::floor(r.hi);
  r = dd_add(r, dd{-f2, 0.0});
  if (r.hi < 0.0) r = dd_add(r, dd{1.0, 0.0});
  if (r.hi >= 1.0) r = dd_add(r, dd{-1.0, 0.0});
  return r;
}

inline double dd_to_double(dd v) { return v.hi + v.lo; }

// Horner evaluation of sum_k c_k x^k with dd coefficients.
template <typename Coeffs>
inline dd dd_horner(const Coeffs& coeffs, dd x) {
  if (coeffs.empty()) return {};
  dd acc = coeffs.back();
  for (auto it = coeffs.rbegin() + 1; it != coeffs.rend(); ++it)
    acc = dd_add(dd_mul(acc, x), *it);
  return acc;
}

}  // namespace revlab::detail
