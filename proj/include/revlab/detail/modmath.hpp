#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "revlab/rational.hpp"

namespace revlab::detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t r = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

inline std::uint64_t to_residue(int128 v, std::uint64_t m) {
  int128 r = v % static_cast<int128>(m);
  if (r < 0) r += static_cast<int128>(m);
  return static_cast<std::uint64_t>(r);
}

// Binomial coefficients C(n, 0..n) in exact 128-bit arithmetic.
inline std::vector<int128> binomial_row(int n) {
  std::vector<int128> row(static_cast<size_t>(n) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int k = i; k > 0; --k)
      row[static_cast<size_t>(k)] = checked_add(row[static_cast<size_t>(k)], row[static_cast<size_t>(k) - 1]);
  return row;
}

inline int128 binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  return binomial_row(n)[static_cast<size_t>(k)];
}

}  // namespace revlab::detail
