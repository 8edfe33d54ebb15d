#pragma once

// Explicit covering-relation digraphs and their canonical labeling.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oseries/error.hpp"

namespace oseries {

using Edge = std::pair<std::size_t, std::size_t>;

/// Hasse diagram of a finite poset: edges are covering pairs (lower, upper).
class HasseDigraph {
 public:
  HasseDigraph() = default;

  /// Validates acyclicity and that no edge is implied by transitivity.
  HasseDigraph(std::size_t vertex_count, std::vector<Edge> edges)
      : n_(vertex_count), edges_(std::move(edges))
  {
    for (const auto& [u, v] : edges_) {
      if (u >= n_ || v >= n_) throw Error("edge endpoint out of range");
      if (u == v) throw Error("self-loop in Hasse digraph");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
      throw Error("duplicate edge in Hasse digraph");
    build_adjacency();
    compute_order();
    for (const auto& [u, v] : edges_) {
      for (std::size_t w : out_[u]) {
        if (w != v && reaches(w, v)) throw Error("edge is not a covering relation");
      }
    }
  }

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<std::size_t>& successors(std::size_t v) const { return out_[v]; }
  const std::vector<std::size_t>& predecessors(std::size_t v) const { return in_[v]; }
  /// Vertices in an order where every edge goes forward.
  const std::vector<std::size_t>& topological_order() const noexcept { return topo_; }

  /// u <= v in the poset.
  bool less_equal(std::size_t u, std::size_t v) const { return u == v || reaches(u, v); }

  std::size_t component_count() const
  {
    std::vector<std::size_t> parent(n_);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::size_t comps = n_;
    for (const auto& [u, v] : edges_) {
      auto a = find(u), b = find(v);
      if (a != b) {
        parent[a] = b;
        --comps;
      }
    }
    return comps;
  }

  /// Number of vertices in a longest chain.
  std::size_t longest_chain() const
  {
    if (n_ == 0) return 0;
    std::vector<std::size_t> len(n_, 1);
    for (std::size_t v : topo_)
      for (std::size_t w : out_[v]) len[w] = std::max(len[w], len[v] + 1);
    return *std::max_element(len.begin(), len.end());
  }

  /// Cycle rank of the underlying undirected graph.
  std::size_t betti() const { return edges_.size() + component_count() - n_; }

  /// Rank of each vertex: length of the longest chain ending at it, minus one.
  std::vector<std::size_t> levels() const
  {
    std::vector<std::size_t> lvl(n_, 0);
    for (std::size_t v : topo_)
      for (std::size_t w : out_[v]) lvl[w] = std::max(lvl[w], lvl[v] + 1);
    return lvl;
  }

  friend bool operator==(const HasseDigraph& a, const HasseDigraph& b)
  {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void build_adjacency()
  {
    out_.assign(n_, {});
    in_.assign(n_, {});
    for (const auto& [u, v] : edges_) {
      out_[u].push_back(v);
      in_[v].push_back(u);
    }
  }

  void compute_order()
  {
    std::vector<std::size_t> indeg(n_);
    for (std::size_t v = 0; v < n_; ++v) indeg[v] = in_[v].size();
    std::vector<std::size_t> stack;
    for (std::size_t v = n_; v-- > 0;)
      if (indeg[v] == 0) stack.push_back(v);
    topo_.clear();
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      topo_.push_back(v);
      for (std::size_t w : out_[v])
        if (--indeg[w] == 0) stack.push_back(w);
    }
    if (topo_.size() != n_) throw Error("Hasse digraph contains a cycle");

    // Reachability as bit rows, filled in reverse topological order.
    words_ = (n_ + 63) / 64;
    reach_.assign(n_ * words_, 0);
    for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
      const std::size_t v = *it;
      for (std::size_t w : out_[v]) {
        reach_[v * words_ + w / 64] |= std::uint64_t{1} << (w % 64);
        for (std::size_t k = 0; k < words_; ++k) reach_[v * words_ + k] |= reach_[w * words_ + k];
      }
    }
  }

  bool reaches(std::size_t u, std::size_t v) const
  {
    return (reach_[u * words_ + v / 64] >> (v % 64)) & 1U;
  }

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> out_, in_;
  std::vector<std::size_t> topo_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> reach_;
};

// ---------------------------------------------------------------------------
// Canonical labeling

constexpr std::size_t max_canonical_vertices = 32;

/// Adjacency rows of a digraph under its canonical relabeling; equal forms
/// mean isomorphic digraphs.
struct CanonicalForm {
  std::size_t vertex_count = 0;
  std::vector<std::uint32_t> rows;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

namespace detail {

class Canonizer {
 public:
  explicit Canonizer(const HasseDigraph& h) : n_(h.vertex_count())
  {
    out_.assign(n_, 0);
    in_.assign(n_, 0);
    for (const auto& [u, v] : h.edges()) {
      out_[u] |= std::uint32_t{1} << v;
      in_[v] |= std::uint32_t{1} << u;
    }
    const auto lvl = h.levels();
    std::vector<std::vector<std::size_t>> keys(n_);
    for (std::size_t v = 0; v < n_; ++v)
      keys[v] = {lvl[v], h.predecessors(v).size(), h.successors(v).size()};
    colors_ = rank(keys);
  }

  CanonicalForm run()
  {
    search(colors_);
    return CanonicalForm{n_, best_ ? *best_ : std::vector<std::uint32_t>{}};
  }

 private:
  // Dense ranks of the key vectors; depends only on key values.
  static std::vector<std::size_t> rank(const std::vector<std::vector<std::size_t>>& keys)
  {
    std::vector<std::vector<std::size_t>> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<std::size_t> out(keys.size());
    for (std::size_t v = 0; v < keys.size(); ++v)
      out[v] = static_cast<std::size_t>(
          std::lower_bound(sorted.begin(), sorted.end(), keys[v]) - sorted.begin());
    return out;
  }

  static std::size_t distinct(const std::vector<std::size_t>& c)
  {
    return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
  }

  // Colour refinement on in- and out-neighbourhoods until stable.
  std::vector<std::size_t> refine(std::vector<std::size_t> colors) const
  {
    std::size_t count = distinct(colors);
    while (true) {
      std::vector<std::vector<std::size_t>> keys(n_);
      for (std::size_t v = 0; v < n_; ++v) {
        std::vector<std::size_t> outs, ins;
        for (std::size_t w = 0; w < n_; ++w) {
          if ((out_[v] >> w) & 1U) outs.push_back(colors[w]);
          if ((in_[v] >> w) & 1U) ins.push_back(colors[w]);
        }
        std::sort(outs.begin(), outs.end());
        std::sort(ins.begin(), ins.end());
        auto& k = keys[v];
        k.push_back(colors[v]);
        k.push_back(outs.size());
        k.insert(k.end(), outs.begin(), outs.end());
        k.push_back(n_ + 1);
        k.insert(k.end(), ins.begin(), ins.end());
      }
      auto next = rank(keys);
      const std::size_t next_count = distinct(next);
      if (next_count == count) return next;
      colors = std::move(next);
      count = next_count;
    }
  }

  void search(std::vector<std::size_t> colors)
  {
    colors = refine(std::move(colors));
    const std::size_t count = distinct(colors);
    if (count == n_) {
      std::vector<std::uint32_t> cert(n_, 0);
      for (std::size_t v = 0; v < n_; ++v) {
        std::uint32_t row = 0;
        for (std::size_t w = 0; w < n_; ++w)
          if ((out_[v] >> w) & 1U) row |= std::uint32_t{1} << colors[w];
        cert[colors[v]] = row;
      }
      if (!best_ || cert < *best_) best_ = std::move(cert);
      return;
    }
    // First non-singleton cell, chosen by colour value only.
    std::vector<std::size_t> cell_size(count, 0);
    for (std::size_t c : colors) ++cell_size[c];
    std::size_t target = 0;
    while (cell_size[target] < 2) ++target;

    std::vector<std::size_t> tried;
    for (std::size_t v = 0; v < n_; ++v) {
      if (colors[v] != target) continue;
      // Twins (equal in- and out-sets) are exchanged by an automorphism
      // fixing everything else, so one representative per twin class suffices.
      bool twin = std::any_of(tried.begin(), tried.end(), [&](std::size_t u) {
        return out_[u] == out_[v] && in_[u] == in_[v];
      });
      if (twin) continue;
      tried.push_back(v);
      std::vector<std::size_t> next(n_);
      for (std::size_t w = 0; w < n_; ++w) next[w] = 2 * colors[w] + (colors[w] == target && w != v);
      std::vector<std::vector<std::size_t>> keys(n_);
      for (std::size_t w = 0; w < n_; ++w) keys[w] = {next[w]};
      search(rank(keys));
    }
  }

  std::size_t n_;
  std::vector<std::uint32_t> out_, in_;
  std::vector<std::size_t> colors_;
  std::optional<std::vector<std::uint32_t>> best_;
};

}  // namespace detail

/// Canonical form by colour refinement and individualisation with twin pruning.
inline CanonicalForm canonical_form(const HasseDigraph& h)
{
  if (h.vertex_count() > max_canonical_vertices) {
    throw SizeLimitError("canonical labeling supports at most 32 vertices, got " +
                         std::to_string(h.vertex_count()));
  }
  return detail::Canonizer(h).run();
}

/// True iff the two digraphs describe isomorphic posets.
inline bool isomorphic(const HasseDigraph& a, const HasseDigraph& b)
{
  if (a.vertex_count() > max_canonical_vertices || b.vertex_count() > max_canonical_vertices) {
    throw SizeLimitError("isomorphism test supports at most 32 vertices");
  }
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace oseries
