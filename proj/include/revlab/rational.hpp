#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace revlab {

using int128 = __int128;

// Raised when a 128-bit rational operation would wrap around.
class overflow_error : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

namespace detail {

inline int128 checked_add(int128 a, int128 b) {
  int128 r;
  if (__builtin_add_overflow(a, b, &r)) throw overflow_error("rational add overflow");
  return r;
}

inline int128 checked_mul(int128 a, int128 b) {
  int128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("rational mul overflow");
  return r;
}

inline int128 abs128(int128 v) { return v < 0 ? -v : v; }

inline int128 gcd128(int128 a, int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline std::string int128_to_string(int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                            : static_cast<unsigned __int128>(v);
  std::string s;
  while (u != 0) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.insert(s.begin(), '-');
  return s;
}

}  // namespace detail

// Exact rational number with 128-bit numerator and denominator.
// Always normalized: den > 0 and gcd(|num|, den) == 1. Arithmetic is exact;
// anything that would wrap 128 bits raises revlab::overflow_error.
class Rational {
 public:
  constexpr Rational() = default;

  Rational(int128 num, int128 den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    int128 g = detail::gcd128(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    num_ = num;
    den_ = den;
  }

  static Rational from_int(int128 v) { return Rational(v, 1); }

  int128 num() const { return num_; }
  int128 den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const { return Rational(-num_, den_); }

  Rational operator+(const Rational& o) const {
    using detail::checked_add;
    using detail::checked_mul;
    int128 g = detail::gcd128(den_, o.den_);
    int128 da = den_ / g;
    int128 db = o.den_ / g;
    int128 num = checked_add(checked_mul(num_, db), checked_mul(o.num_, da));
    int128 den = checked_mul(checked_mul(da, g), db);
    return Rational(num, den);
  }

  Rational operator-(const Rational& o) const { return *this + (-o); }

  Rational operator*(const Rational& o) const {
    int128 g1 = detail::gcd128(num_, o.den_);
    int128 g2 = detail::gcd128(o.num_, den_);
    int128 num = detail::checked_mul(num_ / g1, o.num_ / g2);
    int128 den = detail::checked_mul(den_ / g2, o.den_ / g1);
    return Rational(num, den);
  }

  Rational operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::invalid_argument("rational division by zero");
    return *this * Rational(o.den_, o.num_);
  }

  bool operator==(const Rational& o) const = default;

  bool operator<(const Rational& o) const {
    // den > 0 on both sides, so cross multiplication keeps the order.
    return detail::checked_mul(num_, o.den_) < detail::checked_mul(o.num_, den_);
  }

  // Fractional part in [0, 1).
  Rational mod_one() const {
    int128 r = num_ % den_;
    if (r < 0) r += den_;
    return Rational(r, den_);
  }

  Rational pow(unsigned e) const {
    Rational acc = from_int(1);
    for (unsigned i = 0; i < e; ++i) acc = acc * *this;
    return acc;
  }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  std::string to_string() const {
    std::string s = detail::int128_to_string(num_);
    if (den_ != 1) s += "/" + detail::int128_to_string(den_);
    return s;
  }

  // Parses "p/q" or a plain integer literal.
  static Rational parse(std::string_view text) {
    auto slash = text.find('/');
    auto to_int = [](std::string_view s) -> int128 {
      if (s.empty()) throw std::invalid_argument("empty integer in rational");
      bool neg = false;
      size_t i = 0;
      if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        i = 1;
      }
      if (i == s.size()) throw std::invalid_argument("bad integer in rational");
      int128 v = 0;
      for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad integer in rational");
        v = detail::checked_add(detail::checked_mul(v, 10), s[i] - '0');
      }
      return neg ? -v : v;
    };
    if (slash == std::string_view::npos) return from_int(to_int(text));
    return Rational(to_int(text.substr(0, slash)), to_int(text.substr(slash + 1)));
  }

 private:
  int128 num_ = 0;
  int128 den_ = 1;
};

}  // namespace revlab
