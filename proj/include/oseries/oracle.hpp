#pragma once

// Brute-force counting of order-preserving maps X -> <n> = {1 < ... < n}.
//
// A map f corresponds to the chain of order ideals I_k = f^-1({1..k}),
// k = 0..n, from the empty ideal to X. Strict maps are the chains whose
// successive differences are antichains; non-strict maps are all chains.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "oseries/combinatorics.hpp"
#include "oseries/error.hpp"
#include "oseries/hasse.hpp"

namespace oseries {

constexpr std::size_t max_lattice_vertices = 25;
constexpr std::size_t max_lattice_ideals = std::size_t{1} << 20;
constexpr std::size_t max_direct_vertices = 12;

/// Order ideals of a poset as vertex bitmasks, ordered by size then mask.
class IdealLattice {
 public:
  explicit IdealLattice(const HasseDigraph& h) : n_(h.vertex_count())
  {
    if (n_ > max_lattice_vertices) {
      throw SizeLimitError("ideal lattice supports at most " + std::to_string(max_lattice_vertices) +
                           " vertices, got " + std::to_string(n_));
    }
    // Relabel along a linear extension so that bit order is topological.
    const auto& topo = h.topological_order();
    std::vector<std::size_t> label(n_);
    for (std::size_t r = 0; r < n_; ++r) label[topo[r]] = r;
    preds_.assign(n_, 0);
    for (const auto& [u, v] : h.edges()) preds_[label[v]] |= std::uint32_t{1} << label[u];
    full_ = n_ == 0 ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << n_) - 1);

    // Breadth-first over ideal size.
    ideals_.push_back(0);
    index_.emplace(0, 0);
    for (std::size_t head = 0; head < ideals_.size(); ++head) {
      const std::uint32_t I = ideals_[head];
      for (std::size_t v = 0; v < n_; ++v) {
        const std::uint32_t bit = std::uint32_t{1} << v;
        if ((I & bit) || (preds_[v] & ~I)) continue;
        if (index_.emplace(I | bit, ideals_.size()).second) {
          ideals_.push_back(I | bit);
          if (ideals_.size() > max_lattice_ideals)
            throw SizeLimitError("poset has too many order ideals for the oracle");
        }
      }
    }
    std::vector<std::uint32_t> sorted = ideals_;
    std::sort(sorted.begin(), sorted.end(), [](std::uint32_t a, std::uint32_t b) {
      const int pa = std::popcount(a), pb = std::popcount(b);
      return pa != pb ? pa < pb : a < b;
    });
    ideals_ = std::move(sorted);
    index_.clear();
    for (std::size_t k = 0; k < ideals_.size(); ++k) index_.emplace(ideals_[k], k);
  }

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t ideal_count() const noexcept { return ideals_.size(); }
  /// Members in relabeled (topological) bit order.
  const std::vector<std::uint32_t>& ideals() const noexcept { return ideals_; }
  std::size_t index_of(std::uint32_t ideal) const { return index_.at(ideal); }
  bool contains(std::uint32_t set) const { return index_.count(set) != 0; }

  /// Vertices that can be added to ideal I keeping it an ideal.
  std::uint32_t minimal_outside(std::uint32_t I) const
  {
    std::uint32_t out = 0;
    for (std::size_t v = 0; v < n_; ++v) {
      const std::uint32_t bit = std::uint32_t{1} << v;
      if (!(I & bit) && !(preds_[v] & ~I)) out |= bit;
    }
    return out;
  }

  /// Strict counts for n = 0..N.
  std::vector<BigInt> strict_counts(std::size_t N) const
  {
    // Successors I -> I u A for every subset A of the minimal elements outside I.
    std::vector<std::vector<std::size_t>> succ(ideals_.size());
    for (std::size_t k = 0; k < ideals_.size(); ++k) {
      const std::uint32_t I = ideals_[k];
      const std::uint32_t M = minimal_outside(I);
      for (std::uint32_t A = M;; A = (A - 1) & M) {
        succ[k].push_back(index_.at(I | A));
        if (A == 0) break;
      }
    }
    return walk_counts(N, [&](const std::vector<BigInt>& g) {
      std::vector<BigInt> next(g.size(), 0);
      for (std::size_t k = 0; k < g.size(); ++k) {
        if (g[k] == 0) continue;
        for (std::size_t j : succ[k]) next[j] += g[k];
      }
      return next;
    });
  }

  /// Non-strict counts for n = 0..N.
  std::vector<BigInt> nonstrict_counts(std::size_t N) const
  {
    // One step I -> J (any ideal J containing I) is split into single-vertex
    // additions in increasing label order; every prefix is again an ideal
    // because labels follow a linear extension.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> add(ideals_.size());
    for (std::size_t k = 0; k < ideals_.size(); ++k) {
      const std::uint32_t M = minimal_outside(ideals_[k]);
      for (std::size_t v = 0; v < n_; ++v)
        if ((M >> v) & 1U) add[k].emplace_back(v, index_.at(ideals_[k] | (std::uint32_t{1} << v)));
    }
    return walk_counts(N, [&](const std::vector<BigInt>& g) {
      // stage[k][l]: ways to reach ideal k in this step with last added label l-1 (l = 0: none).
      std::vector<std::vector<BigInt>> stage(g.size(), std::vector<BigInt>(n_ + 1, 0));
      for (std::size_t k = 0; k < g.size(); ++k) stage[k][0] = g[k];
      std::vector<BigInt> next(g.size(), 0);
      for (std::size_t k = 0; k < g.size(); ++k) {  // ideals are sorted by size
        for (std::size_t l = 0; l <= n_; ++l) {
          const BigInt& ways = stage[k][l];
          if (ways == 0) continue;
          next[k] += ways;
          for (const auto& [v, j] : add[k])
            if (v + 1 > l) stage[j][v + 1] += ways;
        }
      }
      return next;
    });
  }

 private:
  template <class Step>
  std::vector<BigInt> walk_counts(std::size_t N, Step step) const
  {
    std::vector<BigInt> counts;
    std::vector<BigInt> g(ideals_.size(), 0);
    g[0] = 1;
    const std::size_t full = index_.at(full_);
    counts.push_back(g[full]);
    for (std::size_t n = 1; n <= N; ++n) {
      g = step(g);
      counts.push_back(g[full]);
    }
    return counts;
  }

  std::size_t n_;
  std::vector<std::uint32_t> preds_;
  std::uint32_t full_ = 0;
  std::vector<std::uint32_t> ideals_;
  std::unordered_map<std::uint32_t, std::size_t> index_;
};

inline BigInt count_strict(const HasseDigraph& h, std::size_t n)
{
  return IdealLattice(h).strict_counts(n).back();
}

inline BigInt count_nonstrict(const HasseDigraph& h, std::size_t n)
{
  return IdealLattice(h).nonstrict_counts(n).back();
}

namespace detail {

// Depth-first assignment along a topological order; each vertex ranges
// over the values compatible with its already-placed predecessors.
inline std::uint64_t count_direct(const HasseDigraph& h, std::size_t n, bool strict)
{
  if (h.vertex_count() > max_direct_vertices) {
    throw SizeLimitError("direct enumeration supports at most " +
                         std::to_string(max_direct_vertices) + " vertices");
  }
  const auto& topo = h.topological_order();
  std::vector<std::size_t> value(h.vertex_count(), 0);
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, std::size_t r) -> void {
    if (r == topo.size()) {
      ++count;
      return;
    }
    const std::size_t v = topo[r];
    std::size_t lo = 1;
    for (std::size_t u : h.predecessors(v)) lo = std::max(lo, value[u] + (strict ? 1 : 0));
    for (std::size_t x = lo; x <= n; ++x) {
      value[v] = x;
      self(self, r + 1);
    }
  };
  rec(rec, 0);
  return count;
}

}  // namespace detail

/// Second-level oracle: explicit enumeration of the maps (at most 12 vertices).
inline std::uint64_t count_strict_direct(const HasseDigraph& h, std::size_t n)
{
  return detail::count_direct(h, n, true);
}

inline std::uint64_t count_nonstrict_direct(const HasseDigraph& h, std::size_t n)
{
  return detail::count_direct(h, n, false);
}

/// Value at x of the polynomial of degree < values.size() through
/// (0, values[0]), (1, values[1]), ... (Newton forward differences).
inline BigInt interpolate_at(std::vector<BigInt> values, const BigInt& x)
{
  BigInt result = 0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    result += values[0] * binomial_poly(x, static_cast<std::int64_t>(k));
    for (std::size_t j = 0; j + 1 < values.size() - k; ++j) values[j] = values[j + 1] - values[j];
  }
  return result;
}

/// The non-strict order polynomial of h at an arbitrary integer, interpolated
/// from the oracle counts at n = 0..|V|.
inline BigInt nonstrict_polynomial_at(const IdealLattice& lattice, const BigInt& x)
{
  return interpolate_at(lattice.nonstrict_counts(lattice.vertex_count()), x);
}

}  // namespace oseries
