#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "revlab/rational.hpp"

namespace revlab {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi_v<double>;

// Boundary parameter descriptor. Three input forms share one numeric value:
//   rational  p/q        (kept exact)
//   sqrt-form sqrt(k)/m  (collapses to rational when k is a perfect square)
//   decimal   literal
// The value must lie strictly inside (0, 1); `unchecked` skips that test and
// exists for test oracles only.
class ThetaValue {
 public:
  enum class Kind { rational, sqrt_form, decimal };

  static ThetaValue rational(const Rational& r) {
    check_range(r.to_double());
    ThetaValue t;
    t.kind_ = Kind::rational;
    t.rational_ = r;
    t.value_ = r.to_double();
    t.text_ = r.to_string();
    return t;
  }

  static ThetaValue sqrt_form(std::int64_t k, std::int64_t m) {
    if (k <= 0 || m <= 0) throw std::invalid_argument("sqrt-form theta needs positive k, m");
    auto root = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(k))));
    if (root * root == k) return rational(Rational(root, m));
    ThetaValue t;
    t.kind_ = Kind::sqrt_form;
    t.sqrt_k_ = k;
    t.sqrt_m_ = m;
    t.value_ = std::sqrt(static_cast<double>(k)) / static_cast<double>(m);
    check_range(t.value_);
    t.text_ = "sqrt(" + std::to_string(k) + ")/" + std::to_string(m);
    return t;
  }

  static ThetaValue decimal(double v) {
    check_range(v);
    ThetaValue t;
    t.kind_ = Kind::decimal;
    t.value_ = v;
    t.text_ = format_decimal(v);
    return t;
  }

  // Bypasses the (0,1) range check. Intended for internal oracles, e.g. the
  // theta = 0 collapse of the transformed polynomial.
  static ThetaValue unchecked(double v) {
    ThetaValue t;
    t.kind_ = Kind::decimal;
    t.value_ = v;
    t.text_ = format_decimal(v);
    if (v == 0.0) t.rational_ = Rational(0, 1);
    return t;
  }

  // Grammar: "p/q" | decimal literal | "sqrt(k)/m".
  static ThetaValue parse(std::string_view text) {
    if (text.starts_with("sqrt(")) {
      auto close = text.find(')');
      if (close == std::string_view::npos || close + 1 >= text.size() || text[close + 1] != '/')
        throw std::invalid_argument("theta sqrt form must be sqrt(k)/m");
      std::int64_t k = parse_int(text.substr(5, close - 5));
      std::int64_t m = parse_int(text.substr(close + 2));
      return sqrt_form(k, m);
    }
    if (text.find('/') != std::string_view::npos) return rational(Rational::parse(text));
    if (text.empty()) throw std::invalid_argument("empty theta");
    size_t pos = 0;
    double v = std::stod(std::string(text), &pos);
    if (pos != text.size()) throw std::invalid_argument("bad theta literal");
    return decimal(v);
  }

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::rational; }
  double value() const { return value_; }

  const Rational& as_rational() const {
    if (!rational_) throw std::logic_error("theta is not rational");
    return *rational_;
  }

  // Exact rational form when one exists (rational kind, or the unchecked 0).
  std::optional<Rational> exact() const { return rational_; }

  const std::string& describe() const { return text_; }

 private:
  static void check_range(double v) {
    if (!(v > 0.0 && v < 1.0)) throw std::invalid_argument("theta must lie in (0,1)");
  }

  static std::int64_t parse_int(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("bad integer in theta");
    std::int64_t v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') throw std::invalid_argument("bad integer in theta");
      v = v * 10 + (c - '0');
    }
    return v;
  }

  static std::string format_decimal(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
  }

  Kind kind_ = Kind::decimal;
  std::optional<Rational> rational_;
  std::int64_t sqrt_k_ = 0;
  std::int64_t sqrt_m_ = 0;
  double value_ = 0.0;
  std::string text_;
};

// Rational time 2*pi*p/q with p, q coprime and at least 1.
struct RationalTime {
  std::int64_t p = 1;
  std::int64_t q = 1;

  RationalTime(std::int64_t p_in, std::int64_t q_in) {
    if (p_in < 1 || q_in < 1) throw std::invalid_argument("rational time needs p, q >= 1");
    auto g = std::gcd(p_in, q_in);
    p = p_in / g;
    q = q_in / g;
  }

  double seconds() const { return kTwoPi * static_cast<double>(p) / static_cast<double>(q); }
  Rational turns() const { return Rational(p, q); }
};

// A time point for the evolution operators: either an exact rational number
// of turns (t / 2*pi) or a raw float64 in seconds.
class TimeValue {
 public:
  static TimeValue rational(const RationalTime& rt) {
    TimeValue t;
    t.turns_ = rt.turns();
    t.seconds_ = rt.seconds();
    return t;
  }

  static TimeValue turns(const Rational& r) {
    TimeValue t;
    t.turns_ = r;
    t.seconds_ = kTwoPi * r.to_double();
    return t;
  }

  static TimeValue raw(double seconds) {
    TimeValue t;
    t.seconds_ = seconds;
    return t;
  }

  bool is_rational() const { return turns_.has_value(); }
  const Rational& as_turns() const {
    if (!turns_) throw std::logic_error("time is not rational");
    return *turns_;
  }
  std::optional<Rational> exact_turns() const { return turns_; }
  double seconds() const { return seconds_; }

 private:
  std::optional<Rational> turns_;
  double seconds_ = 0.0;
};

}  // namespace revlab
