#pragma once

// Test-side helpers. Power-series oracles here use plain truncated-series
// arithmetic (repeated prefix sums, convolution) and never the library's
// binomial-based expansion.

#include <cstddef>
#include <random>
#include <vector>

#include "oseries/oseries.hpp"

namespace oseries::tsup {

using Poly = std::vector<BigInt>;

/// Multiplies a truncated series by 1/(1-x).
inline Poly prefix_sum(Poly p)
{
  for (std::size_t m = 1; m < p.size(); ++m) p[m] += p[m - 1];
  return p;
}

/// x^shift / (1-x)^power truncated to degree N.
inline Poly rational_term(std::size_t shift, std::size_t power, std::size_t N)
{
  Poly p(N + 1, 0);
  if (shift <= N) p[shift] = 1;
  for (std::size_t r = 0; r < power; ++r) p = prefix_sum(std::move(p));
  return p;
}

inline Poly truncated(const ChainSeries& f, std::size_t N)
{
  Poly out(N + 1, 0);
  for (const auto& [i, a] : f.coeffs()) {
    Poly t = rational_term(i, i + 1, N);
    for (std::size_t m = 0; m <= N; ++m) out[m] += a * t[m];
  }
  return out;
}

inline Poly truncated(const NonStrictSeries& f, std::size_t N)
{
  Poly out(N + 1, 0);
  for (const auto& [i, b] : f.coeffs()) {
    Poly t = rational_term(1, i + 1, N);
    for (std::size_t m = 0; m <= N; ++m) out[m] += b * t[m];
  }
  return out;
}

inline Poly cauchy(const Poly& a, const Poly& b)
{
  Poly out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

inline Poly pointwise(const Poly& a, const Poly& b)
{
  Poly out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

inline Poly as_poly(const SeriesExpansion& e) { return e.coefficients; }

inline Poly as_poly(const std::vector<std::uint64_t>& v)
{
  Poly out;
  for (auto x : v) out.emplace_back(x);
  return out;
}

/// Random chain series with indices in [lo, hi] and coefficients in [1, cmax].
inline ChainSeries random_series(std::mt19937_64& rng, std::size_t lo, std::size_t hi, int cmax,
                                 bool allow_negative = false)
{
  std::uniform_int_distribution<std::size_t> idx(lo, hi);
  std::uniform_int_distribution<int> coeff(allow_negative ? -cmax : 1, cmax);
  std::uniform_int_distribution<int> terms(1, 4);
  ChainSeries f;
  const int t = terms(rng);
  for (int r = 0; r < t; ++r) f.add_term(idx(rng), coeff(rng));
  if (f.is_zero()) f.add_term(lo, 1);
  return f;
}

}  // namespace oseries::tsup
