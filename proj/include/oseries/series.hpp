#pragma once

// Order series in the chain basis.
//
// A strict order series is stored as a finite sum  sum_i a_i z[i]  with
// z[i] = x^i / (1-x)^(i+1); a non-strict one as  sum_i b_i w[i]  with
// w[i] = x / (1-x)^(i+1), together with the cardinality of the poset it
// belongs to (the sign rule of the reciprocity map depends on it).
//
// Index 0 is admitted in both bases: z[0] = 1/(1-x) is the unit of `star`
// and the strict series of the empty poset, w[0] = x/(1-x) the unit of
// `star_plus`.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "oseries/combinatorics.hpp"
#include "oseries/error.hpp"

namespace oseries {

struct StrictBasis {
  static constexpr char symbol = 'z';
};
struct NonStrictBasis {
  static constexpr char symbol = 'w';
};

/// Sparse integer combination of basis elements; zero coefficients are never stored.
template <class Basis>
class BasisSeries {
 public:
  using Coefficients = std::map<std::size_t, BigInt>;

  BasisSeries() = default;
  explicit BasisSeries(Coefficients coeffs) : coeffs_(std::move(coeffs)) { prune(); }
  BasisSeries(std::initializer_list<std::pair<const std::size_t, BigInt>> init)
      : coeffs_(init)
  {
    prune();
  }

  /// The single basis element of index i.
  static BasisSeries basis(std::size_t i) { return BasisSeries({{i, BigInt(1)}}); }

  const Coefficients& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::size_t term_count() const noexcept { return coeffs_.size(); }

  BigInt coeff(std::size_t i) const
  {
    auto it = coeffs_.find(i);
    return it == coeffs_.end() ? BigInt(0) : it->second;
  }

  // Both require a nonzero series.
  std::size_t min_index() const { return nonzero().begin()->first; }
  std::size_t max_index() const { return nonzero().rbegin()->first; }
  const BigInt& lowest_coeff() const { return nonzero().begin()->second; }
  const BigInt& highest_coeff() const { return nonzero().rbegin()->second; }

  void add_term(std::size_t i, const BigInt& c)
  {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(i, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  BasisSeries& operator+=(const BasisSeries& o)
  {
    for (const auto& [i, c] : o.coeffs_) add_term(i, c);
    return *this;
  }
  BasisSeries& operator-=(const BasisSeries& o)
  {
    for (const auto& [i, c] : o.coeffs_) add_term(i, -c);
    return *this;
  }
  BasisSeries& operator*=(const BigInt& s)
  {
    if (s == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& [i, c] : coeffs_) c *= s;
    return *this;
  }

  friend BasisSeries operator+(BasisSeries a, const BasisSeries& b) { return a += b; }
  friend BasisSeries operator-(BasisSeries a, const BasisSeries& b) { return a -= b; }
  friend BasisSeries operator*(BasisSeries a, const BigInt& s) { return a *= s; }
  friend BasisSeries operator*(const BigInt& s, BasisSeries a) { return a *= s; }
  friend bool operator==(const BasisSeries&, const BasisSeries&) = default;

 private:
  const Coefficients& nonzero() const
  {
    if (coeffs_.empty()) throw Error("index query on the zero series");
    return coeffs_;
  }
  void prune()
  {
    std::erase_if(coeffs_, [](const auto& kv) { return kv.second == 0; });
  }

  Coefficients coeffs_;
};

using ChainSeries = BasisSeries<StrictBasis>;

/// Non-strict order series together with the cardinality |X| of its poset.
class NonStrictSeries {
 public:
  NonStrictSeries() = default;
  NonStrictSeries(BasisSeries<NonStrictBasis> terms, std::size_t size)
      : terms_(std::move(terms)), size_(size)
  {
  }

  /// w[i] as the series of the i-element chain.
  static NonStrictSeries chain(std::size_t i)
  {
    return NonStrictSeries(BasisSeries<NonStrictBasis>::basis(i), i);
  }

  const BasisSeries<NonStrictBasis>& terms() const noexcept { return terms_; }
  const auto& coeffs() const noexcept { return terms_.coeffs(); }
  BigInt coeff(std::size_t i) const { return terms_.coeff(i); }
  bool is_zero() const noexcept { return terms_.is_zero(); }
  std::size_t size() const noexcept { return size_; }

  friend bool operator==(const NonStrictSeries&, const NonStrictSeries&) = default;

 private:
  BasisSeries<NonStrictBasis> terms_;
  std::size_t size_ = 0;
};

/// Power-series coefficients; entry m is the coefficient of x^m.
struct SeriesExpansion {
  std::vector<BigInt> coefficients;

  std::size_t size() const noexcept { return coefficients.size(); }
  const BigInt& operator[](std::size_t m) const { return coefficients[m]; }
  friend bool operator==(const SeriesExpansion&, const SeriesExpansion&) = default;
};

// ---------------------------------------------------------------------------
// Algebra

/// Concatenation product: bilinear extension of z[n] * z[m] = z[n+m].
inline ChainSeries star(const ChainSeries& f, const ChainSeries& g)
{
  ChainSeries out;
  for (const auto& [i, a] : f.coeffs())
    for (const auto& [j, b] : g.coeffs()) out.add_term(i + j, a * b);
  return out;
}

/// Hadamard (coefficient-wise) product:
/// z[k] (.) z[m] = sum_{n=0..k} C(m+n, k) C(k, n) z[m+n].
inline ChainSeries hadamard(const ChainSeries& f, const ChainSeries& g)
{
  ChainSeries out;
  for (const auto& [i, a] : f.coeffs()) {
    for (const auto& [j, b] : g.coeffs()) {
      // The identity is symmetric; expand along the smaller index.
      const auto k = static_cast<std::int64_t>(std::min(i, j));
      const auto m = static_cast<std::int64_t>(std::max(i, j));
      const BigInt ab = a * b;
      for (std::int64_t n = 0; n <= k; ++n) {
        BigInt c = binomial(m + n, k) * binomial(k, n);
        if (c != 0) out.add_term(static_cast<std::size_t>(m + n), ab * c);
      }
    }
  }
  return out;
}

/// Handle attachment: z[n] -> n z[n+2] + (n+1) z[n+3].
inline ChainSeries dee(const ChainSeries& f)
{
  ChainSeries out;
  for (const auto& [n, a] : f.coeffs()) {
    out.add_term(n + 2, a * BigInt(n));
    out.add_term(n + 3, a * BigInt(n + 1));
  }
  return out;
}

/// Reciprocity map: b_i = (-1)^(size+i) a_i.
inline NonStrictSeries reciprocity(const ChainSeries& f, std::size_t size)
{
  if (!f.is_zero() && size < f.max_index()) {
    throw InvalidSize("poset size " + std::to_string(size) + " is smaller than the largest index " +
                      std::to_string(f.max_index()));
  }
  BasisSeries<NonStrictBasis> terms;
  for (const auto& [i, a] : f.coeffs())
    terms.add_term(i, sign_pow(static_cast<std::int64_t>(size + i)) * a);
  return NonStrictSeries(std::move(terms), size);
}

/// Inverse of `reciprocity`: a_i = (-1)^(size+i) b_i.
inline ChainSeries inverse_reciprocity(const NonStrictSeries& f)
{
  if (!f.is_zero() && f.size() < f.terms().max_index()) {
    throw InvalidSize("poset size " + std::to_string(f.size()) +
                      " is smaller than the largest index " +
                      std::to_string(f.terms().max_index()));
  }
  ChainSeries out;
  for (const auto& [i, b] : f.coeffs())
    out.add_term(i, sign_pow(static_cast<std::int64_t>(f.size() + i)) * b);
  return out;
}

/// Non-strict concatenation: w[n] *+ w[m] = w[n+m]; sizes add.
inline NonStrictSeries star_plus(const NonStrictSeries& f, const NonStrictSeries& g)
{
  BasisSeries<NonStrictBasis> terms;
  for (const auto& [i, a] : f.coeffs())
    for (const auto& [j, b] : g.coeffs()) terms.add_term(i + j, a * b);
  return NonStrictSeries(std::move(terms), f.size() + g.size());
}

/// Non-strict handle attachment, obtained by conjugating `dee` with the
/// reciprocity map. On the basis: w[i] -> -i w[i+2] + (i+1) w[i+3]; size + 3.
inline NonStrictSeries dee_plus(const NonStrictSeries& f)
{
  return reciprocity(dee(inverse_reciprocity(f)), f.size() + 3);
}

// ---------------------------------------------------------------------------
// Expansion and evaluation

/// Coefficients of x^0..x^N; coefficient m is sum_i a_i C(m, i).
inline SeriesExpansion expand(const ChainSeries& f, std::size_t N)
{
  SeriesExpansion e{std::vector<BigInt>(N + 1, BigInt(0))};
  for (std::size_t m = 0; m <= N; ++m)
    for (const auto& [i, a] : f.coeffs())
      e.coefficients[m] += a * binomial(static_cast<std::int64_t>(m), static_cast<std::int64_t>(i));
  return e;
}

/// Coefficients of x^0..x^N; coefficient m >= 1 is sum_i b_i C(m+i-1, i).
inline SeriesExpansion expand(const NonStrictSeries& f, std::size_t N)
{
  SeriesExpansion e{std::vector<BigInt>(N + 1, BigInt(0))};
  for (std::size_t m = 1; m <= N; ++m)
    for (const auto& [i, b] : f.coeffs())
      e.coefficients[m] += b * multiset(static_cast<std::int64_t>(m), static_cast<std::int64_t>(i));
  return e;
}

/// Strict order polynomial at n (any integer): sum_i a_i C(n, i).
inline BigInt omega_eval(const ChainSeries& f, const BigInt& n)
{
  BigInt r = 0;
  for (const auto& [i, a] : f.coeffs()) r += a * binomial_poly(n, static_cast<std::int64_t>(i));
  return r;
}

/// Non-strict order polynomial at n (any integer): sum_i b_i C(n+i-1, i).
inline BigInt omega_plus_eval(const NonStrictSeries& f, const BigInt& n)
{
  BigInt r = 0;
  for (const auto& [i, b] : f.coeffs()) {
    const auto k = static_cast<std::int64_t>(i);
    r += b * binomial_poly(n + k - 1, k);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Text form:  2*z[4] + 3*z[5]  /  1*w[3] - 2*w[4]  /  0

template <class Basis>
std::string to_string(const BasisSeries<Basis>& f)
{
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, a] : f.coeffs()) {
    if (first)
      os << a;
    else if (a < 0)
      os << " - " << -a;
    else
      os << " + " << a;
    first = false;
    os << '*' << Basis::symbol << '[' << i << ']';
  }
  return os.str();
}

inline std::string to_string(const NonStrictSeries& f) { return to_string(f.terms()); }

inline std::string to_string(const SeriesExpansion& e)
{
  std::string out;
  for (std::size_t m = 0; m < e.size(); ++m) {
    if (m) out += ',';
    out += e[m].str();
  }
  return out;
}

template <class Basis>
std::ostream& operator<<(std::ostream& os, const BasisSeries<Basis>& f)
{
  return os << to_string(f);
}
inline std::ostream& operator<<(std::ostream& os, const NonStrictSeries& f)
{
  return os << to_string(f) << " (size " << f.size() << ')';
}

namespace detail {

class SeriesLexer {
 public:
  explicit SeriesLexer(std::string_view text) : text_(text) {}

  void skip_ws()
  {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end()
  {
    skip_ws();
    return pos_ >= text_.size();
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
  bool peek_digit()
  {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }
  bool peek_alpha()
  {
    skip_ws();
    return pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]));
  }
  char take_char()
  {
    skip_ws();
    if (pos_ >= text_.size()) throw SyntaxError("unexpected end of input", pos_);
    return text_[pos_++];
  }
  BigInt number()
  {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError("expected an integer", pos_);
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }
  std::size_t index()
  {
    const std::size_t at = pos_;
    BigInt v = number();
    if (v > 1000000) throw SyntaxError("basis index out of range", at);
    return static_cast<std::size_t>(v);
  }
  std::size_t position() const noexcept { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

template <class Basis>
BasisSeries<Basis> parse_terms(std::string_view text)
{
  SeriesLexer lx(text);
  BasisSeries<Basis> out;
  if (lx.at_end()) throw SyntaxError("empty series", 0);
  bool first = true;
  bool any_term = false;
  while (!lx.at_end()) {
    int sign = 1;
    if (!first) {
      if (lx.accept('-'))
        sign = -1;
      else {
        lx.expect('+');
        if (lx.accept('-')) sign = -1;
      }
    } else if (lx.accept('-')) {
      sign = -1;
    }
    first = false;

    BigInt coeff = 1;
    bool has_number = false;
    if (lx.peek_digit()) {
      coeff = lx.number();
      has_number = true;
    }
    if (has_number && !lx.accept('*')) {
      // A bare integer is only meaningful as the zero series.
      if (coeff != 0) throw SyntaxError("expected '*' after coefficient", lx.position());
      any_term = true;
      continue;
    }
    const std::size_t at = lx.position();
    const char sym = lx.take_char();
    if (sym != Basis::symbol) {
      throw SyntaxError(std::string("expected basis symbol '") + Basis::symbol + "'", at);
    }
    lx.expect('[');
    const std::size_t idx = lx.index();
    lx.expect(']');
    out.add_term(idx, sign * coeff);
    any_term = true;
  }
  if (!any_term) throw SyntaxError("empty series", 0);
  return out;
}

}  // namespace detail

/// Parses the textual form `a*z[i] + ...` (coefficient 1 may be omitted).
inline ChainSeries parse_chain_series(std::string_view text)
{
  return detail::parse_terms<StrictBasis>(text);
}

/// Parses `b*w[i] + ...`. Without an explicit size the largest index is used.
inline NonStrictSeries parse_nonstrict_series(std::string_view text,
                                              std::optional<std::size_t> size = std::nullopt)
{
  auto terms = detail::parse_terms<NonStrictBasis>(text);
  const std::size_t s = size ? *size : (terms.is_zero() ? 0 : terms.max_index());
  if (!terms.is_zero() && s < terms.max_index()) {
    throw InvalidSize("poset size " + std::to_string(s) + " is smaller than the largest index " +
                      std::to_string(terms.max_index()));
  }
  return NonStrictSeries(std::move(terms), s);
}

}  // namespace oseries
