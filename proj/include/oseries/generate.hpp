#pragma once

// Exhaustive generation of series-parallel posets and pseudorandom
// Wixarika words.

#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include "oseries/poset.hpp"

namespace oseries {

namespace detail {

class SpGenerator {
 public:
  explicit SpGenerator(std::size_t max_points)
      : series_(max_points + 1), parallel_(max_points + 1), built_(max_points + 1, false)
  {
  }

  std::vector<PosetExpr> all(std::size_t n)
  {
    auto out = non_series(n);
    const auto& s = series(n);
    out.insert(out.end(), s.begin(), s.end());
    return out;
  }

 private:
  void build(std::size_t n)
  {
    if (built_[n]) return;
    built_[n] = true;
    if (n < 2) return;
    // Series: ordered sequences of >= 2 non-series parts.
    std::vector<PosetExpr> parts;
    auto compose = [&](auto&& self, std::size_t left) -> void {
      if (left == 0) {
        if (parts.size() >= 2) series_[n].push_back(PosetExpr::mu(parts));
        return;
      }
      for (std::size_t s = 1; s <= left; ++s) {
        if (s == n) continue;
        for (const auto& p : non_series(s)) {
          parts.push_back(p);
          self(self, left - s);
          parts.pop_back();
        }
      }
    };
    compose(compose, n);

    // Parallel: multisets of >= 2 non-parallel parts, chosen in
    // non-increasing (size, index) order.
    std::vector<std::vector<PosetExpr>> pool(n + 1);
    for (std::size_t s = 1; s < n; ++s) pool[s] = non_parallel(s);
    auto choose = [&](auto&& self, std::size_t left, std::size_t max_size,
                      std::size_t max_index) -> void {
      if (left == 0) {
        if (parts.size() >= 2) parallel_[n].push_back(PosetExpr::disjoint_union(parts));
        return;
      }
      for (std::size_t s = std::min(left, max_size); s >= 1; --s) {
        if (s == n) continue;
        const std::size_t top = s == max_size ? max_index : pool[s].size();
        for (std::size_t k = 0; k < top && k < pool[s].size(); ++k) {
          parts.push_back(pool[s][k]);
          self(self, left - s, s, k + 1);
          parts.pop_back();
        }
      }
    };
    choose(choose, n, n, 0);
  }

  std::vector<PosetExpr> non_series(std::size_t n)
  {
    if (n == 1) return {PosetExpr::point()};
    build(n);
    return parallel_[n];
  }
  std::vector<PosetExpr> non_parallel(std::size_t n)
  {
    if (n == 1) return {PosetExpr::point()};
    build(n);
    return series_[n];
  }
  const std::vector<PosetExpr>& series(std::size_t n)
  {
    build(n);
    return series_[n];
  }

  std::vector<std::vector<PosetExpr>> series_, parallel_;
  std::vector<bool> built_;
};

}  // namespace detail

/// All series-parallel posets with exactly n points, one expression per
/// isomorphism class.
inline std::vector<PosetExpr> sp_posets(std::size_t n)
{
  if (n == 0) return {};
  return detail::SpGenerator(n).all(n);
}

/// All series-parallel posets with 1..max_points points.
inline std::vector<PosetExpr> sp_posets_up_to(std::size_t max_points)
{
  detail::SpGenerator gen(max_points);
  std::vector<PosetExpr> out;
  for (std::size_t n = 1; n <= max_points; ++n) {
    auto level = gen.all(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

/// Random Wixarika word with the given number of leaves and handles:
/// leaves - 1 binary concatenations and `dees` handles applied in random order.
inline PosetExpr random_wixarika(std::mt19937_64& rng, std::size_t leaves, std::size_t dees)
{
  if (leaves == 0) throw ArityError("a Wixarika word needs at least one leaf");
  std::vector<PosetExpr> atoms(leaves, PosetExpr::point());
  std::size_t dees_left = dees;
  auto pick = [&](std::size_t bound) { return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng); };
  while (atoms.size() > 1 || dees_left > 0) {
    const std::size_t merges_left = atoms.size() - 1;
    const bool do_dee = dees_left > 0 && (merges_left == 0 || pick(merges_left + dees_left) < dees_left);
    if (do_dee) {
      auto& a = atoms[pick(atoms.size())];
      a = PosetExpr::dee(std::move(a));
      --dees_left;
    } else {
      const std::size_t i = pick(atoms.size());
      PosetExpr lo = std::move(atoms[i]);
      atoms.erase(atoms.begin() + static_cast<std::ptrdiff_t>(i));
      const std::size_t j = pick(atoms.size());
      atoms[j] = pick(2) ? PosetExpr::mu({std::move(lo), std::move(atoms[j])})
                         : PosetExpr::mu({std::move(atoms[j]), std::move(lo)});
    }
  }
  return atoms.front();
}

/// Random Wixarika word with at most max_points points (leaves + 3 handles).
inline PosetExpr random_wixarika_up_to(std::mt19937_64& rng, std::size_t max_points)
{
  if (max_points == 0) throw ArityError("a Wixarika word has at least one point");
  const std::size_t max_dees = (max_points - 1) / 3;
  const std::size_t d = std::uniform_int_distribution<std::size_t>(0, max_dees)(rng);
  const std::size_t l = std::uniform_int_distribution<std::size_t>(1, max_points - 3 * d)(rng);
  return random_wixarika(rng, l, d);
}

}  // namespace oseries
