#pragma once

// Series-parallel poset expressions.
//
// Grammar (ASCII, whitespace-insensitive):
//   1            single point
//   cN           chain of N points
//   mu(e,...,e)  concatenation, left operand below right operand (>= 2 operands)
//   u(e,...,e)   disjoint union (>= 2 operands)
//   d(e)         handle: new minimum, new maximum and one extra point between them

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oseries/error.hpp"
#include "oseries/hasse.hpp"
#include "oseries/series.hpp"

namespace oseries {

class PosetExpr;
std::string to_string(const PosetExpr& e);

/// Immutable expression tree. Mu operands are ordered and never themselves
/// Mu (nested concatenations are flattened into one corolla); Union operands
/// form a multiset, kept sorted by their text form and never themselves Union.
class PosetExpr {
 public:
  enum class Kind { Point, Chain, Mu, Union, Dee };

  PosetExpr() = default;

  static PosetExpr point() { return PosetExpr(Kind::Point, 1, {}); }

  static PosetExpr chain(std::size_t n)
  {
    if (n == 0) throw ArityError("a chain needs at least one point");
    if (n == 1) return point();
    return PosetExpr(Kind::Chain, n, {});
  }

  static PosetExpr mu(std::vector<PosetExpr> operands)
  {
    if (operands.size() < 2) throw ArityError("mu needs at least two operands");
    std::vector<PosetExpr> flat;
    for (auto& op : operands) {
      if (op.kind_ == Kind::Mu) {
        for (auto& c : op.children_) flat.push_back(std::move(c));
      } else {
        flat.push_back(std::move(op));
      }
    }
    return PosetExpr(Kind::Mu, 0, std::move(flat));
  }

  static PosetExpr disjoint_union(std::vector<PosetExpr> operands)
  {
    if (operands.size() < 2) throw ArityError("u needs at least two operands");
    std::vector<PosetExpr> flat;
    for (auto& op : operands) {
      if (op.kind_ == Kind::Union) {
        for (auto& c : op.children_) flat.push_back(std::move(c));
      } else {
        flat.push_back(std::move(op));
      }
    }
    std::vector<std::pair<std::string, PosetExpr>> keyed;
    keyed.reserve(flat.size());
    for (auto& c : flat) {
      auto key = to_string(c);
      keyed.emplace_back(std::move(key), std::move(c));
    }
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    flat.clear();
    for (auto& kv : keyed) flat.push_back(std::move(kv.second));
    return PosetExpr(Kind::Union, 0, std::move(flat));
  }

  static PosetExpr dee(PosetExpr operand)
  {
    std::vector<PosetExpr> c;
    c.push_back(std::move(operand));
    return PosetExpr(Kind::Dee, 0, std::move(c));
  }

  Kind kind() const noexcept { return kind_; }
  /// Number of points of a Point (1) or Chain node.
  std::size_t chain_length() const noexcept { return length_; }
  const std::vector<PosetExpr>& children() const noexcept { return children_; }
  const PosetExpr& child() const { return children_.at(0); }

  std::size_t point_count() const
  {
    switch (kind_) {
      case Kind::Point:
      case Kind::Chain:
        return length_;
      case Kind::Dee:
        return child().point_count() + 3;
      default: {
        std::size_t n = 0;
        for (const auto& c : children_) n += c.point_count();
        return n;
      }
    }
  }

  /// Built from points by concatenation and handles only.
  bool is_wixarika() const
  {
    if (kind_ == Kind::Union) return false;
    return std::all_of(children_.begin(), children_.end(),
                       [](const PosetExpr& c) { return c.is_wixarika(); });
  }

  friend bool operator==(const PosetExpr&, const PosetExpr&) = default;

 private:
  PosetExpr(Kind k, std::size_t len, std::vector<PosetExpr> children)
      : kind_(k), length_(len), children_(std::move(children))
  {
  }

  Kind kind_ = Kind::Point;
  std::size_t length_ = 1;
  std::vector<PosetExpr> children_;
};

inline std::string to_string(const PosetExpr& e)
{
  using K = PosetExpr::Kind;
  switch (e.kind()) {
    case K::Point:
      return "1";
    case K::Chain:
      return "c" + std::to_string(e.chain_length());
    case K::Dee:
      return "d(" + to_string(e.child()) + ")";
    case K::Mu:
    case K::Union: {
      std::string s = e.kind() == K::Mu ? "mu(" : "u(";
      for (std::size_t i = 0; i < e.children().size(); ++i) {
        if (i) s += ',';
        s += to_string(e.children()[i]);
      }
      return s + ")";
    }
  }
  return {};
}

inline std::ostream& operator<<(std::ostream& os, const PosetExpr& e) { return os << to_string(e); }

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  PosetExpr parse_all()
  {
    PosetExpr e = expr();
    skip_ws();
    if (pos_ != text_.size()) throw SyntaxError("unexpected trailing input", pos_);
    return e;
  }

 private:
  void skip_ws()
  {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c)
  {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c)
  {
    if (!accept(c)) throw SyntaxError(std::string("expected '") + c + "'", pos_);
  }

  std::vector<PosetExpr> operands()
  {
    expect('(');
    std::vector<PosetExpr> ops;
    ops.push_back(expr());
    while (accept(',')) ops.push_back(expr());
    expect(')');
    return ops;
  }

  PosetExpr expr()
  {
    skip_ws();
    if (pos_ >= text_.size()) throw SyntaxError("unexpected end of expression", pos_);
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (c == '1') {
      ++pos_;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw SyntaxError("a point is written '1'; use cN for chains", start);
      return PosetExpr::point();
    }
    if (c == 'c') {
      ++pos_;
      const std::size_t digits = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (digits == pos_) throw SyntaxError("expected chain length after 'c'", pos_);
      if (pos_ - digits > 6) throw SyntaxError("chain length out of range", digits);
      const auto n = std::stoul(std::string(text_.substr(digits, pos_ - digits)));
      if (n == 0) throw SyntaxError("chain length must be positive", digits);
      return PosetExpr::chain(n);
    }
    if (text_.substr(pos_, 2) == "mu") {
      pos_ += 2;
      auto ops = operands();
      if (ops.size() < 2)
        throw ArityError("mu at position " + std::to_string(start) + " needs at least two operands");
      return PosetExpr::mu(std::move(ops));
    }
    if (c == 'u') {
      ++pos_;
      auto ops = operands();
      if (ops.size() < 2)
        throw ArityError("u at position " + std::to_string(start) + " needs at least two operands");
      return PosetExpr::disjoint_union(std::move(ops));
    }
    if (c == 'd') {
      ++pos_;
      auto ops = operands();
      if (ops.size() != 1)
        throw ArityError("d at position " + std::to_string(start) + " takes exactly one operand");
      return PosetExpr::dee(std::move(ops[0]));
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline PosetExpr parse_expr(std::string_view text) { return detail::ExprParser(text).parse_all(); }

/// Same poset, with runs of points and chains inside a concatenation merged
/// into single chains (mu(1,1,d(1)) -> mu(c2,d(1)), mu(1,1) -> c2).
inline PosetExpr condensed(const PosetExpr& e)
{
  using K = PosetExpr::Kind;
  switch (e.kind()) {
    case K::Point:
    case K::Chain:
      return e;
    case K::Dee:
      return PosetExpr::dee(condensed(e.child()));
    case K::Union: {
      std::vector<PosetExpr> ops;
      for (const auto& c : e.children()) ops.push_back(condensed(c));
      return PosetExpr::disjoint_union(std::move(ops));
    }
    case K::Mu: {
      std::vector<PosetExpr> ops;
      std::size_t run = 0;
      auto flush = [&] {
        if (run) ops.push_back(PosetExpr::chain(run));
        run = 0;
      };
      for (const auto& c : e.children()) {
        PosetExpr cc = condensed(c);
        if (cc.kind() == K::Point || cc.kind() == K::Chain) {
          run += cc.chain_length();
        } else {
          flush();
          ops.push_back(std::move(cc));
        }
      }
      flush();
      if (ops.size() == 1) return ops.front();
      return PosetExpr::mu(std::move(ops));
    }
  }
  return e;
}

/// Rewrites every handle d(X) as mu(1, u(1, X), 1).
inline PosetExpr desugar(const PosetExpr& e)
{
  using K = PosetExpr::Kind;
  switch (e.kind()) {
    case K::Point:
    case K::Chain:
      return e;
    case K::Dee: {
      auto middle = PosetExpr::disjoint_union({PosetExpr::point(), desugar(e.child())});
      return PosetExpr::mu({PosetExpr::point(), std::move(middle), PosetExpr::point()});
    }
    case K::Mu:
    case K::Union: {
      std::vector<PosetExpr> ops;
      for (const auto& c : e.children()) ops.push_back(desugar(c));
      return e.kind() == K::Mu ? PosetExpr::mu(std::move(ops))
                               : PosetExpr::disjoint_union(std::move(ops));
    }
  }
  return e;
}

// ---------------------------------------------------------------------------
// Evaluation

/// Called with the strict series entering every handle, children first.
using DeeObserver = std::function<void(const ChainSeries& input)>;

/// Strict order series: point -> z[1], mu -> star, u -> hadamard, d -> dee.
inline ChainSeries eval_strict(const PosetExpr& e, const DeeObserver& observer = {})
{
  using K = PosetExpr::Kind;
  switch (e.kind()) {
    case K::Point:
    case K::Chain:
      return ChainSeries::basis(e.chain_length());
    case K::Dee: {
      ChainSeries in = eval_strict(e.child(), observer);
      if (observer) observer(in);
      return dee(in);
    }
    case K::Mu:
    case K::Union: {
      ChainSeries acc = eval_strict(e.children().front(), observer);
      for (std::size_t i = 1; i < e.children().size(); ++i) {
        ChainSeries next = eval_strict(e.children()[i], observer);
        acc = e.kind() == K::Mu ? star(acc, next) : hadamard(acc, next);
      }
      return acc;
    }
  }
  return {};
}

/// Non-strict order series via the reciprocity map.
inline NonStrictSeries eval_nonstrict(const PosetExpr& e)
{
  return reciprocity(eval_strict(e), e.point_count());
}

// ---------------------------------------------------------------------------
// Hasse diagram and invariants

namespace detail {

struct HasseBuilder {
  std::size_t next = 0;
  std::vector<Edge> edges;

  struct Piece {
    std::vector<std::size_t> minima, maxima;
  };

  Piece build(const PosetExpr& e)
  {
    using K = PosetExpr::Kind;
    switch (e.kind()) {
      case K::Point:
      case K::Chain: {
        const std::size_t first = next;
        next += e.chain_length();
        for (std::size_t v = first; v + 1 < next; ++v) edges.emplace_back(v, v + 1);
        return {{first}, {next - 1}};
      }
      case K::Mu: {
        Piece acc = build(e.children().front());
        for (std::size_t i = 1; i < e.children().size(); ++i) {
          Piece p = build(e.children()[i]);
          for (std::size_t lo : acc.maxima)
            for (std::size_t hi : p.minima) edges.emplace_back(lo, hi);
          acc.maxima = std::move(p.maxima);
        }
        return acc;
      }
      case K::Union: {
        Piece acc;
        for (const auto& c : e.children()) {
          Piece p = build(c);
          acc.minima.insert(acc.minima.end(), p.minima.begin(), p.minima.end());
          acc.maxima.insert(acc.maxima.end(), p.maxima.begin(), p.maxima.end());
        }
        return acc;
      }
      case K::Dee: {
        const std::size_t bottom = next++;
        Piece inner = build(e.child());
        const std::size_t middle = next++;
        const std::size_t top = next++;
        for (std::size_t v : inner.minima) edges.emplace_back(bottom, v);
        for (std::size_t v : inner.maxima) edges.emplace_back(v, top);
        edges.emplace_back(bottom, middle);
        edges.emplace_back(middle, top);
        return {{bottom}, {top}};
      }
    }
    return {};
  }
};

}  // namespace detail

inline HasseDigraph hasse(const PosetExpr& e)
{
  detail::HasseBuilder b;
  b.build(e);
  return HasseDigraph(b.next, std::move(b.edges));
}

struct PosetInvariants {
  std::size_t n_points = 0;    // k
  std::size_t max_chain = 0;   // i, counted in vertices
  std::size_t betti = 0;       // d
  std::size_t components = 0;
  std::size_t mu_count = 0;    // a corolla of arity c counts c-1, a chain cN counts N-1
  std::size_t dee_count = 0;
  std::size_t leaf_count = 0;  // points of the word, handle internals excluded

  friend bool operator==(const PosetInvariants&, const PosetInvariants&) = default;
};

namespace detail {

inline void count_word(const PosetExpr& e, PosetInvariants& inv)
{
  using K = PosetExpr::Kind;
  switch (e.kind()) {
    case K::Point:
    case K::Chain:
      inv.leaf_count += e.chain_length();
      inv.mu_count += e.chain_length() - 1;
      return;
    case K::Dee:
      ++inv.dee_count;
      break;
    case K::Mu:
      inv.mu_count += e.children().size() - 1;
      break;
    case K::Union:
      break;
  }
  for (const auto& c : e.children()) count_word(c, inv);
}

}  // namespace detail

inline PosetInvariants invariants(const PosetExpr& e)
{
  const HasseDigraph h = hasse(e);
  PosetInvariants inv;
  inv.n_points = h.vertex_count();
  inv.max_chain = h.longest_chain();
  inv.betti = h.betti();
  inv.components = h.component_count();
  detail::count_word(e, inv);
  return inv;
}

/// Order isomorphism of the posets denoted by two expressions.
inline bool isomorphic(const PosetExpr& a, const PosetExpr& b) { return isomorphic(hasse(a), hasse(b)); }

}  // namespace oseries
