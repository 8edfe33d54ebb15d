#pragma once

// Multivariate negative hypergeometric distribution with exact rationals.
// W draws with repetition among N classes split into groups n_1..n_k;
// v_i counts the draws landing in group i.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "oseries/combinatorics.hpp"
#include "oseries/error.hpp"

namespace oseries {

struct NHGParams {
  std::vector<std::int64_t> groups;  // n_1..n_k, each >= 1
  std::int64_t draws = 0;            // W

  std::int64_t total() const
  {
    std::int64_t n = 0;
    for (auto g : groups) n += g;
    return n;
  }
};

/// Reduced fraction with positive denominator.
struct ExactProbability {
  BigInt numerator = 0;
  BigInt denominator = 1;

  ExactProbability() = default;
  ExactProbability(const Rational& q)  // NOLINT(google-explicit-constructor)
      : numerator(boost::multiprecision::numerator(q)), denominator(boost::multiprecision::denominator(q))
  {
  }
  Rational value() const { return Rational(numerator, denominator); }
  bool operator==(const ExactProbability&) const = default;
};

inline std::string to_string(const ExactProbability& p) { return p.numerator.str() + "/" + p.denominator.str(); }

namespace detail {

inline void validate(const NHGParams& p)
{
  if (p.groups.empty()) throw InvalidSize("need at least one group");
  for (auto g : p.groups)
    if (g < 1) throw InvalidSize("group sizes must be positive, got " + std::to_string(g));
  if (p.draws < 0) throw InvalidSize("number of draws must be non-negative");
}

/// Calls fn(v) for every weak composition v of total into k parts.
inline void for_each_weak_composition(std::int64_t total, std::size_t k,
                                      const std::function<void(const std::vector<std::int64_t>&)>& fn)
{
  std::vector<std::int64_t> v(k, 0);
  auto rec = [&](auto&& self, std::size_t idx, std::int64_t left) -> void {
    if (idx + 1 == k) {
      v[idx] = left;
      fn(v);
      return;
    }
    for (std::int64_t x = 0; x <= left; ++x) {
      v[idx] = x;
      self(self, idx + 1, left - x);
    }
  };
  if (k > 0) rec(rec, 0, total);
}

}  // namespace detail

/// prod <<n_i, v_i>> / <<N, W>>.
inline ExactProbability nhg_pmf(const NHGParams& p, const std::vector<std::int64_t>& v)
{
  detail::validate(p);
  if (v.size() != p.groups.size())
    throw CompositionMismatch("expected " + std::to_string(p.groups.size()) + " draw counts, got " +
                              std::to_string(v.size()));
  std::int64_t sum = 0;
  for (auto x : v) {
    if (x < 0) throw CompositionMismatch("draw counts must be non-negative");
    sum += x;
  }
  if (sum != p.draws)
    throw CompositionMismatch("draw counts sum to " + std::to_string(sum) + ", expected W = " +
                              std::to_string(p.draws));
  BigInt num = 1;
  for (std::size_t i = 0; i < v.size(); ++i) num *= multiset(p.groups[i], v[i]);
  return Rational(num, multiset(p.total(), p.draws));
}

/// Sum of the pmf over every composition of W into k parts.
inline ExactProbability nhg_normalization(const NHGParams& p)
{
  detail::validate(p);
  Rational sum = 0;
  detail::for_each_weak_composition(p.draws, p.groups.size(),
                                    [&](const std::vector<std::int64_t>& v) { sum += nhg_pmf(p, v).value(); });
  return sum;
}

/// Closed form n_j <<N+1, W-1>> / <<N, W>>; j is 1-based.
inline Rational nhg_expectation(const NHGParams& p, std::size_t j)
{
  detail::validate(p);
  if (j < 1 || j > p.groups.size())
    throw InvalidSize("group index " + std::to_string(j) + " outside 1.." + std::to_string(p.groups.size()));
  const std::int64_t n = p.total();
  return Rational(p.groups[j - 1] * multiset(n + 1, p.draws - 1), multiset(n, p.draws));
}

/// Sum of v_j * pmf(v) over all compositions; j is 1-based.
inline Rational nhg_expectation_exhaustive(const NHGParams& p, std::size_t j)
{
  detail::validate(p);
  if (j < 1 || j > p.groups.size())
    throw InvalidSize("group index " + std::to_string(j) + " outside 1.." + std::to_string(p.groups.size()));
  Rational sum = 0;
  detail::for_each_weak_composition(p.draws, p.groups.size(), [&](const std::vector<std::int64_t>& v) {
    sum += Rational(v[j - 1]) * nhg_pmf(p, v).value();
  });
  return sum;
}

/// Coefficient of x^W in (sum_i i <<n, i>> x^i)(sum_j <<N-n, j>> x^j).
inline BigInt nhg_derivative_coefficient(std::int64_t n, std::int64_t total, std::int64_t draws)
{
  BigInt c = 0;
  for (std::int64_t i = 0; i <= draws; ++i) c += BigInt(i) * multiset(n, i) * multiset(total - n, draws - i);
  return c;
}

}  // namespace oseries
