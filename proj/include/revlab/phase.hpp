#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "revlab/detail/dd.hpp"
#include "revlab/detail/modmath.hpp"
#include "revlab/rational.hpp"
#include "revlab/theta.hpp"

namespace revlab {

using cplx = std::complex<double>;

inline cplx cis(double radians) { return {std::cos(radians), std::sin(radians)}; }

namespace detail {

struct PhaseExactRepr {
  std::uint64_t den = 1;           // common denominator D
  std::vector<std::uint64_t> num;  // numerators mod D, index = power of j
};

struct PhaseDdRepr {
  std::vector<dd> coeffs;
};

}  // namespace detail

// Diagonal phase multiplier e^{-2*pi*i * f(j)} for a polynomial f(j) = sum_k c_k j^k
// over integer mode indices j.
//
// Two evaluation routes:
//  * exact    - every c_k is rational and the common denominator D fits in 62
//               bits. f(j) mod 1 is then reduced with pure modular integer
//               arithmetic, so the phase stays accurate for arbitrarily large
//               j^k t products (the revival identities depend on this).
//  * dd       - double-double Horner evaluation followed by mod-1 reduction.
//               Carries ~31 digits, which keeps the absolute phase error near
//               1e-10 turns for |f| up to ~1e20.
// Construction picks exact whenever possible and silently falls back to dd.
class PhasePolynomial {
 public:
  static PhasePolynomial from_rationals(const std::vector<Rational>& coeffs) {
    PhasePolynomial p;
    if (auto exact = try_exact(coeffs)) {
      p.repr_ = std::move(*exact);
      return p;
    }
    std::vector<detail::dd> dds;
    dds.reserve(coeffs.size());
    for (const auto& c : coeffs)
      dds.push_back(detail::dd_div(detail::dd_from_double(static_cast<double>(c.num())),
                                   detail::dd_from_double(static_cast<double>(c.den()))));
    p.repr_ = DdRepr{std::move(dds)};
    return p;
  }

  static PhasePolynomial from_dd(std::vector<detail::dd> coeffs) {
    PhasePolynomial p;
    p.repr_ = DdRepr{std::move(coeffs)};
    return p;
  }

  bool exact() const { return std::holds_alternative<ExactRepr>(repr_); }

  // e^{-2*pi*i * f(j)}
  cplx factor(std::int64_t j) const {
    return cis(-kTwoPi * turns_mod_one(j));
  }

  // f(j) mod 1, in [0, 1).
  double turns_mod_one(std::int64_t j) const {
    if (const auto* e = std::get_if<ExactRepr>(&repr_)) {
      std::uint64_t jm = detail::to_residue(j, e->den);
      std::uint64_t acc = 0;
      for (auto it = e->num.rbegin(); it != e->num.rend(); ++it)
        acc = (detail::mulmod(acc, jm, e->den) + *it) % e->den;
      return static_cast<double>(acc) / static_cast<double>(e->den);
    }
    const auto& c = std::get<DdRepr>(repr_).coeffs;
    detail::dd f = detail::dd_horner(c, detail::dd_from_double(static_cast<double>(j)));
    return detail::dd_to_double(detail::dd_frac(f));
  }

 private:
  using ExactRepr = detail::PhaseExactRepr;
  using DdRepr = detail::PhaseDdRepr;

  static std::optional<ExactRepr> try_exact(const std::vector<Rational>& coeffs) {
    constexpr int128 kDenLimit = int128(1) << 62;
    int128 den = 1;
    try {
      for (const auto& c : coeffs) {
        int128 g = detail::gcd128(den, c.den());
        den = detail::checked_mul(den / g, c.den());
        if (den >= kDenLimit) return std::nullopt;
      }
    } catch (const overflow_error&) {
      return std::nullopt;
    }
    ExactRepr e;
    e.den = static_cast<std::uint64_t>(den);
    e.num.reserve(coeffs.size());
    for (const auto& c : coeffs) {
      int128 scaled = c.num() % den;  // avoid the full c.num * (den/c.den) product
      scaled = detail::checked_mul(scaled, den / c.den()) % den;
      e.num.push_back(detail::to_residue(scaled, e.den));
    }
    return e;
  }

  std::variant<ExactRepr, DdRepr> repr_;
};

namespace detail {

// 2*pi to double-double precision.
inline constexpr dd kTwoPiDd{6.283185307179586, 2.4492935982947064e-16};

// t as a dd number of turns (t / 2*pi).
inline dd time_turns_dd(const TimeValue& t) {
  if (t.is_rational()) {
    const Rational& r = t.as_turns();
    return dd_div(dd_from_double(static_cast<double>(r.num())),
                  dd_from_double(static_cast<double>(r.den())));
  }
  return dd_div(dd_from_double(t.seconds()), kTwoPiDd);
}

}  // namespace detail

}  // namespace revlab
