#pragma once

// Exact integer helpers shared by every module: big integers, binomial and
// multiset coefficients, Stirling numbers of the second kind.

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oseries {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& v) { return v.str(); }

namespace detail {

constexpr std::size_t pascal_rows = 96;

// Pascal's triangle for the small arguments that dominate the sweeps.
inline const std::vector<std::vector<BigInt>>& pascal_table()
{
  static const std::vector<std::vector<BigInt>> table = [] {
    std::vector<std::vector<BigInt>> t(pascal_rows);
    for (std::size_t n = 0; n < pascal_rows; ++n) {
      t[n].resize(n + 1);
      t[n][0] = 1;
      t[n][n] = 1;
      for (std::size_t k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
    }
    return t;
  }();
  return table;
}

}  // namespace detail

/// Combinatorial binomial coefficient. Zero when k < 0, n < 0 or k > n.
inline BigInt binomial(std::int64_t n, std::int64_t k)
{
  if (n < 0 || k < 0 || k > n) return 0;
  if (static_cast<std::size_t>(n) < detail::pascal_rows) {
    return detail::pascal_table()[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

/// Binomial coefficient as a polynomial in the upper argument:
/// x (x-1) ... (x-k+1) / k!, valid for every integer x (including negative).
inline BigInt binomial_poly(const BigInt& x, std::int64_t k)
{
  if (k < 0) return 0;
  BigInt num = 1;
  BigInt den = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    num *= (x - i);
    den *= (i + 1);
  }
  return num / den;
}

/// Multiset coefficient <<n, m>> = C(n+m-1, m): m-multisets drawn from n types.
/// <<n, 0>> = 1 for every n; zero for m < 0 or (n <= 0 and m > 0).
inline BigInt multiset(std::int64_t n, std::int64_t m)
{
  if (m < 0) return 0;
  if (m == 0) return 1;
  if (n <= 0) return 0;
  return binomial(n + m - 1, m);
}

/// Stirling number of the second kind {n brace k}.
inline BigInt stirling2(std::int64_t n, std::int64_t k)
{
  if (n < 0 || k < 0) return 0;
  if (n == 0 && k == 0) return 1;
  if (n == 0 || k == 0 || k > n) return 0;
  std::vector<BigInt> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;
  for (std::int64_t i = 1; i <= n; ++i) {
    for (std::int64_t j = std::min(i, k); j >= 1; --j) {
      row[static_cast<std::size_t>(j)] =
          BigInt(j) * row[static_cast<std::size_t>(j)] + row[static_cast<std::size_t>(j - 1)];
    }
    row[0] = 0;
  }
  return row[static_cast<std::size_t>(k)];
}

inline BigInt factorial(std::int64_t n)
{
  BigInt r = 1;
  for (std::int64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

/// (-1)^e for any integer exponent.
inline int sign_pow(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace oseries
