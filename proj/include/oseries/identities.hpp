#pragma once

// Exact sweeps over the binomial and multiset identities that follow from
// the chain-basis algebra. Every checker evaluates both sides with big
// integers; `perturb` adds 1 to the right-hand side so the harness can
// confirm that it detects a wrong identity.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oseries/combinatorics.hpp"

namespace oseries {

struct Counterexample {
  std::vector<std::int64_t> params;
  BigInt lhs;
  BigInt rhs;
};

struct IdentityReport {
  IdentityReport() = default;
  IdentityReport(std::string n, std::string p, std::string r)
      : name(std::move(n)), params(std::move(p)), ranges(std::move(r))
  {
  }

  std::string name;
  std::string params;  // names of the entries of a parameter tuple
  std::string ranges;  // human-readable sweep description
  std::size_t cases = 0;
  bool pass = true;
  std::optional<Counterexample> counterexample;

  /// Records one case; the first mismatch in sweep order is kept.
  void check(const std::vector<std::int64_t>& p, const BigInt& lhs, BigInt rhs, bool perturb)
  {
    ++cases;
    if (perturb) rhs += 1;
    if (lhs != rhs) {
      if (!counterexample) counterexample = Counterexample{p, lhs, rhs};
      pass = false;
    }
  }
};

inline std::string to_string(const IdentityReport& r)
{
  std::string s = r.name + ": " + (r.pass ? "pass" : "FAIL") + " cases=" + std::to_string(r.cases) +
                  " ranges=" + r.ranges;
  if (r.counterexample) {
    s += " counterexample=(";
    for (std::size_t j = 0; j < r.counterexample->params.size(); ++j) {
      if (j) s += ',';
      s += std::to_string(r.counterexample->params[j]);
    }
    s += ") params=" + r.params + " lhs=" + r.counterexample->lhs.str() +
         " rhs=" + r.counterexample->rhs.str();
  }
  return s;
}

/// Combined report: passes iff every part passes; keeps the first counterexample.
inline IdentityReport merge_reports(std::string name, const std::vector<IdentityReport>& parts)
{
  IdentityReport r;
  r.name = std::move(name);
  for (const auto& p : parts) {
    r.cases += p.cases;
    r.pass = r.pass && p.pass;
    if (!r.counterexample && p.counterexample) {
      r.counterexample = p.counterexample;
      r.params = p.name + ":" + p.params;
    }
    r.ranges += (r.ranges.empty() ? "" : "; ") + p.name + " " + p.ranges;
  }
  return r;
}

namespace detail {

/// Calls fn(parts) for every composition of n into k parts, each >= min_part,
/// in lexicographic order.
inline void for_each_composition(std::int64_t n, std::int64_t k, std::int64_t min_part,
                                 const std::function<void(const std::vector<std::int64_t>&)>& fn)
{
  if (k <= 0) {
    if (n == 0) fn({});
    return;
  }
  std::vector<std::int64_t> parts(static_cast<std::size_t>(k), min_part);
  auto rec = [&](auto&& self, std::size_t idx, std::int64_t left) -> void {
    if (idx + 1 == parts.size()) {
      if (left >= min_part) {
        parts[idx] = left;
        fn(parts);
      }
      return;
    }
    const std::int64_t rest = min_part * static_cast<std::int64_t>(parts.size() - idx - 1);
    for (std::int64_t x = min_part; x <= left - rest; ++x) {
      parts[idx] = x;
      self(self, idx + 1, left - x);
    }
  };
  rec(rec, 0, n);
}

/// Coefficients 0..max_total of the product of the sequences seq_i(x),
/// i.e. sum over compositions of M of the product of seq_i(M_i).
inline std::vector<BigInt> composition_sums(const std::vector<std::function<BigInt(std::int64_t)>>& seqs,
                                            std::int64_t max_total)
{
  const auto len = static_cast<std::size_t>(std::max<std::int64_t>(max_total + 1, 0));
  std::vector<BigInt> acc(len, 0);
  if (len == 0) return acc;
  acc[0] = 1;
  for (const auto& seq : seqs) {
    std::vector<BigInt> next(len, 0);
    for (std::size_t a = 0; a < len; ++a) {
      if (acc[a] == 0) continue;
      for (std::size_t b = 0; a + b < len; ++b) {
        BigInt v = seq(static_cast<std::int64_t>(b));
        if (v != 0) next[a + b] += acc[a] * v;
      }
    }
    acc = std::move(next);
  }
  return acc;
}

inline BigInt at(const std::vector<BigInt>& v, std::int64_t idx)
{
  if (idx < 0 || static_cast<std::size_t>(idx) >= v.size()) return 0;
  return v[static_cast<std::size_t>(idx)];
}

inline std::vector<std::int64_t> concat(std::vector<std::int64_t> head, const std::vector<std::int64_t>& tail)
{
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

}  // namespace detail

/// C(p+q+t, s) C(s, t) = sum_{a+c=s, n+r=t} C(p+n,a)C(a,n)C(q+r,c)C(c,r)
///                     - sum_{a+c=s-1, n+r=t-1} (same summand).
inline IdentityReport check_structural_pc(std::int64_t p_max = 8, std::int64_t q_max = 8, bool perturb = false)
{
  IdentityReport r{"structural-product", "p,q,s,t",
                   "0<=p<=" + std::to_string(p_max) + ", 0<=q<=" + std::to_string(q_max) + ", s<=p+q, t<=s"};
  auto half_sum = [](std::int64_t p, std::int64_t q, std::int64_t s, std::int64_t t) {
    BigInt sum = 0;
    if (s < 0 || t < 0) return sum;
    for (std::int64_t a = 0; a <= s; ++a) {
      const std::int64_t c = s - a;
      for (std::int64_t n = 0; n <= std::min(a, t); ++n) {
        const std::int64_t rr = t - n;
        if (rr > c) continue;
        sum += binomial(p + n, a) * binomial(a, n) * binomial(q + rr, c) * binomial(c, rr);
      }
    }
    return sum;
  };
  for (std::int64_t p = 0; p <= p_max; ++p)
    for (std::int64_t q = 0; q <= q_max; ++q)
      for (std::int64_t s = 0; s <= p + q; ++s)
        for (std::int64_t t = 0; t <= s; ++t) {
          BigInt lhs = binomial(p + q + t, s) * binomial(s, t);
          BigInt rhs = half_sum(p, q, s, t) - half_sum(p, q, s - 1, t - 1);
          r.check({p, q, s, t}, lhs, rhs, perturb);
        }
  return r;
}

/// C(m, n) = sum_j (-1)^j C(k-1, j) sum_{sum m_i = m-j, m_i >= n_i} prod C(m_i, n_i)
/// for every composition n = n_1 + ... + n_k (n_i >= 0) and m >= n+k-1.
inline IdentityReport check_partition_identity(std::int64_t k_max = 4, std::int64_t n_max = 8,
                                               std::int64_t m_extra = 6, bool perturb = false)
{
  IdentityReport r{"partition", "k,n,m,n_1..n_k",
                   "1<=k<=" + std::to_string(k_max) + ", 0<=n<=" + std::to_string(n_max) +
                       ", n+k-1<=m<=n+k-1+" + std::to_string(m_extra)};
  for (std::int64_t k = 1; k <= k_max; ++k)
    for (std::int64_t n = 0; n <= n_max; ++n)
      detail::for_each_composition(n, k, 0, [&](const std::vector<std::int64_t>& parts) {
        std::vector<std::function<BigInt(std::int64_t)>> seqs;
        for (auto ni : parts) seqs.emplace_back([ni](std::int64_t mi) { return binomial(mi, ni); });
        const std::int64_t m_hi = n + k - 1 + m_extra;
        auto sums = detail::composition_sums(seqs, m_hi);
        for (std::int64_t m = n + k - 1; m <= m_hi; ++m) {
          BigInt rhs = 0;
          for (std::int64_t j = 0; j <= k - 1; ++j)
            rhs += sign_pow(j) * binomial(k - 1, j) * detail::at(sums, m - j);
          r.check(detail::concat({k, n, m}, parts), binomial(m, n), rhs, perturb);
        }
      });
  return r;
}

/// <<v-k+1, n>> = sum_j (-1)^j C(k-1, j) sum_{sum v_i = v-j, v_i >= 1} prod <<v_i, n_i>>
/// for v >= max(n+k-1, k).
inline IdentityReport check_multiset_partition_identity(std::int64_t k_max = 4, std::int64_t n_max = 8,
                                                        std::int64_t v_extra = 6, bool perturb = false)
{
  IdentityReport r{"multiset-partition", "k,n,v,n_1..n_k",
                   "1<=k<=" + std::to_string(k_max) + ", 0<=n<=" + std::to_string(n_max) +
                       ", max(n+k-1,k)<=v<=max(n+k-1,k)+" + std::to_string(v_extra)};
  for (std::int64_t k = 1; k <= k_max; ++k)
    for (std::int64_t n = 0; n <= n_max; ++n)
      detail::for_each_composition(n, k, 0, [&](const std::vector<std::int64_t>& parts) {
        std::vector<std::function<BigInt(std::int64_t)>> seqs;
        for (auto ni : parts)
          seqs.emplace_back([ni](std::int64_t vi) { return vi >= 1 ? multiset(vi, ni) : BigInt(0); });
        const std::int64_t v_lo = std::max(n + k - 1, k);
        const std::int64_t v_hi = v_lo + v_extra;
        auto sums = detail::composition_sums(seqs, v_hi);
        for (std::int64_t v = v_lo; v <= v_hi; ++v) {
          BigInt rhs = 0;
          for (std::int64_t j = 0; j <= k - 1; ++j)
            rhs += sign_pow(j) * binomial(k - 1, j) * detail::at(sums, v - j);
          r.check(detail::concat({k, n, v}, parts), multiset(v - k + 1, n), rhs, perturb);
        }
      });
  return r;
}

/// <<v-k+1, 2n-1>> = sum_{sum v_i = v, v_i >= 1} prod <<v_i, 2n_i-1>>, n_i >= 1, v >= k.
inline IdentityReport check_negative_vandermonde(std::int64_t k_max = 4, std::int64_t n_max = 8,
                                                 std::int64_t v_max = 20, bool perturb = false)
{
  IdentityReport r{"negative-vandermonde", "k,n,v,n_1..n_k",
                   "1<=k<=" + std::to_string(k_max) + ", k<=n<=" + std::to_string(n_max) +
                       ", k<=v<=" + std::to_string(v_max)};
  for (std::int64_t k = 1; k <= k_max; ++k)
    for (std::int64_t n = k; n <= n_max; ++n)
      detail::for_each_composition(n, k, 1, [&](const std::vector<std::int64_t>& parts) {
        std::vector<std::function<BigInt(std::int64_t)>> seqs;
        for (auto ni : parts)
          seqs.emplace_back([ni](std::int64_t vi) { return vi >= 1 ? multiset(vi, 2 * ni - 1) : BigInt(0); });
        auto sums = detail::composition_sums(seqs, v_max);
        for (std::int64_t v = k; v <= v_max; ++v)
          r.check(detail::concat({k, n, v}, parts), multiset(v - k + 1, 2 * n - 1), detail::at(sums, v),
                  perturb);
      });
  return r;
}

/// C(v+n-1, 2n-1) = sum_{v_1+...+v_n = v, v_i >= 1} prod v_i, v >= n.
inline IdentityReport check_odd_binomial_products(std::int64_t v_max = 20, bool perturb = false)
{
  IdentityReport r{"odd-binomial-products", "v,n", "1<=n<=v<=" + std::to_string(v_max)};
  for (std::int64_t n = 1; n <= v_max; ++n) {
    std::vector<std::function<BigInt(std::int64_t)>> seqs(
        static_cast<std::size_t>(n), [](std::int64_t vi) { return vi >= 1 ? BigInt(vi) : BigInt(0); });
    auto sums = detail::composition_sums(seqs, v_max);
    for (std::int64_t v = n; v <= v_max; ++v)
      r.check({v, n}, binomial(v + n - 1, 2 * n - 1), detail::at(sums, v), perturb);
  }
  return r;
}

/// C(m, 2n-1) = sum_{v_1+...+v_n = m-n+1, v_i >= 1} prod v_i, 1 <= n <= (m+1)/2.
inline IdentityReport check_division_free_odd(std::int64_t m_max = 20, bool perturb = false)
{
  IdentityReport r{"division-free-odd", "m,n", "1<=m<=" + std::to_string(m_max) + ", 1<=n<=(m+1)/2"};
  for (std::int64_t m = 1; m <= m_max; ++m)
    for (std::int64_t n = 1; 2 * n <= m + 1; ++n) {
      // Direct enumeration of the compositions, independent of the convolution engine.
      BigInt rhs = 0;
      detail::for_each_composition(m - n + 1, n, 1, [&](const std::vector<std::int64_t>& parts) {
        BigInt prod = 1;
        for (auto x : parts) prod *= x;
        rhs += prod;
      });
      r.check({m, n}, binomial(m, 2 * n - 1), rhs, perturb);
    }
  return r;
}

/// C(m, n) = sum_j (-1)^j C(n-1, j) sum_{m_1+...+m_n = m-j, m_i >= 1} prod m_i, m >= 2n-1.
inline IdentityReport check_division_free_binomial(std::int64_t m_max = 20, bool perturb = false)
{
  IdentityReport r{"division-free", "m,n", "1<=n, 2n-1<=m<=" + std::to_string(m_max)};
  for (std::int64_t n = 1; 2 * n - 1 <= m_max; ++n) {
    std::vector<std::function<BigInt(std::int64_t)>> seqs(
        static_cast<std::size_t>(n), [](std::int64_t mi) { return mi >= 1 ? BigInt(mi) : BigInt(0); });
    auto sums = detail::composition_sums(seqs, m_max);
    for (std::int64_t m = 2 * n - 1; m <= m_max; ++m) {
      BigInt rhs = 0;
      for (std::int64_t j = 0; j <= n - 1; ++j) rhs += sign_pow(j) * binomial(n - 1, j) * detail::at(sums, m - j);
      r.check({m, n}, binomial(m, n), rhs, perturb);
    }
  }
  return r;
}

inline IdentityReport check_division_free(std::int64_t m_max = 20, bool perturb = false)
{
  return merge_reports("division-free-all", {check_division_free_odd(m_max, perturb), check_division_free_binomial(m_max, perturb)});
}

/// C(v+n-1, 2n-1) = sum over partitions of v into n positive parts of
/// multinomial(n; multiplicities) * prod parts; also compared with the
/// uncompressed sum over compositions.
inline IdentityReport check_multinomial_compression(std::int64_t v_max = 20, std::int64_t n_max = 20,
                                                    bool perturb = false)
{
  IdentityReport r{"multinomial-compression", "v,n",
                   "1<=n<=" + std::to_string(n_max) + ", n<=v<=" + std::to_string(v_max)};
  for (std::int64_t n = 1; n <= n_max; ++n) {
    std::vector<std::function<BigInt(std::int64_t)>> seqs(
        static_cast<std::size_t>(n), [](std::int64_t vi) { return vi >= 1 ? BigInt(vi) : BigInt(0); });
    auto uncompressed = detail::composition_sums(seqs, v_max);
    for (std::int64_t v = n; v <= v_max; ++v) {
      BigInt compressed = 0;
      std::vector<std::int64_t> parts;
      // Non-increasing partitions of v into exactly n parts.
      auto rec = [&](auto&& self, std::int64_t left, std::int64_t max_part) -> void {
        const auto used = static_cast<std::int64_t>(parts.size());
        if (used == n) {
          if (left != 0) return;
          BigInt term = factorial(n);
          BigInt prod = 1;
          std::size_t run = 1;
          for (std::size_t j = 0; j < parts.size(); ++j) {
            prod *= parts[j];
            if (j + 1 < parts.size() && parts[j + 1] == parts[j]) {
              ++run;
            } else {
              term /= factorial(static_cast<std::int64_t>(run));
              run = 1;
            }
          }
          compressed += term * prod;
          return;
        }
        const std::int64_t slots = n - used;
        for (std::int64_t x = std::min(max_part, left - (slots - 1)); x >= 1; --x) {
          if (x * slots < left) break;
          parts.push_back(x);
          self(self, left - x, x);
          parts.pop_back();
        }
      };
      rec(rec, v, v);
      const BigInt lhs = binomial(v + n - 1, 2 * n - 1);
      r.check({v, n}, lhs, compressed, perturb);
      r.check({v, n}, compressed, detail::at(uncompressed, v), perturb);
    }
  }
  return r;
}

/// Number of weak compositions of m into k parts, by direct enumeration.
inline BigInt ntilde(std::int64_t m, std::int64_t k)
{
  if (m < 0 || k < 0) return 0;
  BigInt count = 0;
  detail::for_each_composition(m, k, 0, [&](const std::vector<std::int64_t>&) { ++count; });
  return count;
}

/// ntilde(m, k) = sum_{j=0}^{k-1} C(k, j) S(m, k-j)  (S: Stirling numbers of the second kind).
inline IdentityReport check_stirling_expansion(std::int64_t m_max = 10, std::int64_t k_max = 5, bool perturb = false)
{
  IdentityReport r{"stirling-expansion", "m,k",
                   "1<=k<=" + std::to_string(k_max) + ", max(k-1,0)<=m<=" + std::to_string(m_max)};
  for (std::int64_t k = 1; k <= k_max; ++k)
    for (std::int64_t m = k - 1; m <= m_max; ++m) {
      BigInt rhs = 0;
      for (std::int64_t j = 0; j <= k - 1; ++j) rhs += binomial(k, j) * stirling2(m, k - j);
      r.check({m, k}, ntilde(m, k), rhs, perturb);
    }
  return r;
}

/// 1 = sum_{j=0}^{k-1} (-1)^j C(k-1, j) ntilde(m-j, k), m >= k-1.
inline IdentityReport check_ntilde_alternating(std::int64_t m_max = 10, std::int64_t k_max = 5, bool perturb = false)
{
  IdentityReport r{"weak-composition-alternating", "m,k",
                   "1<=k<=" + std::to_string(k_max) + ", k-1<=m<=" + std::to_string(m_max)};
  for (std::int64_t k = 1; k <= k_max; ++k)
    for (std::int64_t m = k - 1; m <= m_max; ++m) {
      BigInt rhs = 0;
      for (std::int64_t j = 0; j <= k - 1; ++j) rhs += sign_pow(j) * binomial(k - 1, j) * ntilde(m - j, k);
      r.check({m, k}, BigInt(1), rhs, perturb);
    }
  return r;
}

inline IdentityReport check_stirling_partition(std::int64_t m_max = 10, std::int64_t k_max = 5, bool perturb = false)
{
  return merge_reports("stirling-partition", {check_ntilde_alternating(m_max, k_max, perturb),
                                              check_stirling_expansion(m_max, k_max, perturb)});
}

/// For compositions n = n_1 + ... + n_k (n_i >= 1) and v >= 2n+k-2:
///   <<v-k+1, 2n-k>> = sum_j (-1)^j C(k-1,j) sum_{sum v_i = v-j, v_i >= 1} prod <<v_i, 2n_i-1>>
///                   = sum_j (-1)^j C(k-1,j) <<v-k+1-j, 2n-1>>,
///   C(v-2k+2n, 2n-k) = sum_j (-1)^j C(k-1,j) C(v-k-1+2n-j, 2n-1).
inline IdentityReport check_tail_identities(std::int64_t v_extra = 6, std::int64_t n_max = 6, std::int64_t k_max = 4,
                                            bool perturb = false)
{
  IdentityReport r{"tail", "form,k,n,v,n_1..n_k",
                   "1<=k<=" + std::to_string(k_max) + ", k<=n<=" + std::to_string(n_max) +
                       ", 2n+k-2<=v<=2n+k-2+" + std::to_string(v_extra) +
                       "; form 1 = composition sums, 2 = multiset closed form, 3 = binomial form"};
  for (std::int64_t k = 1; k <= k_max; ++k)
    for (std::int64_t n = k; n <= n_max; ++n)
      detail::for_each_composition(n, k, 1, [&](const std::vector<std::int64_t>& parts) {
        std::vector<std::function<BigInt(std::int64_t)>> seqs;
        for (auto ni : parts)
          seqs.emplace_back([ni](std::int64_t vi) { return vi >= 1 ? multiset(vi, 2 * ni - 1) : BigInt(0); });
        const std::int64_t v_lo = 2 * n + k - 2;
        const std::int64_t v_hi = v_lo + v_extra;
        auto sums = detail::composition_sums(seqs, v_hi);
        for (std::int64_t v = v_lo; v <= v_hi; ++v) {
          const BigInt lhs = multiset(v - k + 1, 2 * n - k);
          BigInt by_sums = 0, by_multiset = 0, by_binomial = 0;
          for (std::int64_t j = 0; j <= k - 1; ++j) {
            const BigInt w = sign_pow(j) * binomial(k - 1, j);
            by_sums += w * detail::at(sums, v - j);
            by_multiset += w * multiset(v - k + 1 - j, 2 * n - 1);
            by_binomial += w * binomial(v - k - 1 + 2 * n - j, 2 * n - 1);
          }
          r.check(detail::concat({1, k, n, v}, parts), lhs, by_sums, perturb);
          r.check(detail::concat({2, k, n, v}, parts), lhs, by_multiset, perturb);
          r.check(detail::concat({3, k, n, v}, parts), binomial(v - 2 * k + 2 * n, 2 * n - k), by_binomial, perturb);
        }
      });
  return r;
}

/// C(m_1+...+m_p, n) = sum_{n_1+...+n_p = n} prod C(m_i, n_i).
inline IdentityReport check_generalized_vandermonde(std::int64_t p_max = 4, std::int64_t m_max = 6, bool perturb = false)
{
  IdentityReport r{"generalized-vandermonde", "p,n,m_1..m_p",
                   "1<=p<=" + std::to_string(p_max) + ", 0<=m_i<=" + std::to_string(m_max) + ", 0<=n<=sum m_i"};
  for (std::int64_t p = 1; p <= p_max; ++p) {
    std::vector<std::int64_t> ms(static_cast<std::size_t>(p), 0);
    while (true) {
      std::int64_t total = 0;
      for (auto x : ms) total += x;
      for (std::int64_t n = 0; n <= total; ++n) {
        BigInt rhs = 0;
        detail::for_each_composition(n, p, 0, [&](const std::vector<std::int64_t>& ns) {
          BigInt prod = 1;
          for (std::size_t j = 0; j < ns.size(); ++j) prod *= binomial(ms[j], ns[j]);
          rhs += prod;
        });
        r.check(detail::concat({p, n}, ms), binomial(total, n), rhs, perturb);
      }
      std::size_t idx = 0;
      while (idx < ms.size() && ms[idx] == m_max) ms[idx++] = 0;
      if (idx == ms.size()) break;
      ++ms[idx];
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Registry for the command line

struct IdentityRanges {
  std::optional<std::int64_t> p_max, q_max, k_max, n_max, m_max, v_max, extra;
};

struct IdentityEntry {
  std::string name;
  std::string description;
  std::function<IdentityReport(const IdentityRanges&, bool)> run;
};

inline const std::vector<IdentityEntry>& identity_registry()
{
  static const std::vector<IdentityEntry> entries = [] {
    auto v = [](const std::optional<std::int64_t>& o, std::int64_t d) { return o.value_or(d); };
    std::vector<IdentityEntry> e;
    e.push_back({"structural-product", "two-sum identity from the Hadamard/concatenation compatibility",
                 [v](const IdentityRanges& r, bool p) { return check_structural_pc(v(r.p_max, 8), v(r.q_max, 8), p); }});
    e.push_back({"partition", "C(m,n) from compositions of n (alternating binomial weights)",
                 [v](const IdentityRanges& r, bool p) {
                   return check_partition_identity(v(r.k_max, 4), v(r.n_max, 8), v(r.extra, 6), p);
                 }});
    e.push_back({"multiset-partition", "multiset analogue of the partition identity",
                 [v](const IdentityRanges& r, bool p) {
                   return check_multiset_partition_identity(v(r.k_max, 4), v(r.n_max, 8), v(r.extra, 6), p);
                 }});
    e.push_back({"negative-vandermonde", "Vandermonde identity for multiset coefficients",
                 [v](const IdentityRanges& r, bool p) {
                   return check_negative_vandermonde(v(r.k_max, 4), v(r.n_max, 8), v(r.v_max, 20), p);
                 }});
    e.push_back({"odd-binomial-products", "C(v+n-1,2n-1) as a sum of products",
                 [v](const IdentityRanges& r, bool p) { return check_odd_binomial_products(v(r.v_max, 20), p); }});
    e.push_back({"division-free-odd", "C(m,2n-1) without division",
                 [v](const IdentityRanges& r, bool p) { return check_division_free_odd(v(r.m_max, 20), p); }});
    e.push_back({"division-free", "C(m,n) without division (alternating)",
                 [v](const IdentityRanges& r, bool p) { return check_division_free_binomial(v(r.m_max, 20), p); }});
    e.push_back({"multinomial-compression", "partition form with multinomial multiplicities",
                 [v](const IdentityRanges& r, bool p) {
                   return check_multinomial_compression(v(r.v_max, 20), v(r.n_max, 20), p);
                 }});
    e.push_back({"weak-composition-alternating", "alternating sum of weak-composition counts equals 1",
                 [v](const IdentityRanges& r, bool p) {
                   return check_ntilde_alternating(v(r.m_max, 10), v(r.k_max, 5), p);
                 }});
    e.push_back({"stirling-expansion", "weak-composition count as a Stirling expansion",
                 [v](const IdentityRanges& r, bool p) {
                   return check_stirling_expansion(v(r.m_max, 10), v(r.k_max, 5), p);
                 }});
    e.push_back({"stirling-partition", "both weak-composition identities",
                 [v](const IdentityRanges& r, bool p) {
                   return check_stirling_partition(v(r.m_max, 10), v(r.k_max, 5), p);
                 }});
    e.push_back({"tail", "closing multiset and binomial identities",
                 [v](const IdentityRanges& r, bool p) {
                   return check_tail_identities(v(r.extra, 6), v(r.n_max, 6), v(r.k_max, 4), p);
                 }});
    e.push_back({"generalized-vandermonde", "C(m_1+...+m_p, n) as a sum of products",
                 [v](const IdentityRanges& r, bool p) {
                   return check_generalized_vandermonde(v(r.p_max, 4), v(r.m_max, 6), p);
                 }});
    return e;
  }();
  return entries;
}

inline const IdentityEntry* find_identity(const std::string& name)
{
  for (const auto& e : identity_registry())
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace oseries
