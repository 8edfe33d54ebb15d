#pragma once

// h*-vectors: the numerator of  sum_n Omega+(X, n) x^n = x h*(x) / (1-x)^(|X|+1).

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oseries/combinatorics.hpp"
#include "oseries/error.hpp"
#include "oseries/series.hpp"

namespace oseries {

/// Coefficients h*_0..h*_size.
struct HStarVector {
  std::vector<BigInt> coefficients;

  /// |X|; the vector has size() + 1 entries.
  std::size_t size() const noexcept { return coefficients.empty() ? 0 : coefficients.size() - 1; }
  const BigInt& operator[](std::size_t j) const { return coefficients[j]; }
  friend bool operator==(const HStarVector&, const HStarVector&) = default;
};

/// h*_j = sum_i (-1)^(size-i+j) c_i C(size-i, j).
inline HStarVector chain_to_hstar(const ChainSeries& c, std::size_t size)
{
  if (!c.is_zero() && size < c.max_index()) {
    throw InvalidSize("poset size " + std::to_string(size) + " is smaller than the largest index " +
                      std::to_string(c.max_index()));
  }
  HStarVector h{std::vector<BigInt>(size + 1, BigInt(0))};
  const auto s = static_cast<std::int64_t>(size);
  for (std::int64_t j = 0; j <= s; ++j) {
    BigInt sum = 0;
    for (const auto& [i, a] : c.coeffs()) {
      const auto ii = static_cast<std::int64_t>(i);
      sum += sign_pow(s - ii + j) * a * binomial(s - ii, j);
    }
    h.coefficients[static_cast<std::size_t>(j)] = std::move(sum);
  }
  return h;
}

/// Inverse of chain_to_hstar: c_i = sum_j h*_j C(j, size-i).
inline ChainSeries hstar_to_chain(const HStarVector& h)
{
  if (h.coefficients.empty()) throw InvalidSize("empty h*-vector");
  const std::size_t size = h.size();
  if (size >= 1 && h[size] != 0) {
    throw NotRepresentable("h*_" + std::to_string(size) + " = " + h[size].str() +
                           " is nonzero; no chain-basis series of this size");
  }
  const auto s = static_cast<std::int64_t>(size);
  ChainSeries c;
  for (std::int64_t i = 0; i <= s; ++i) {
    BigInt sum = 0;
    for (std::int64_t j = 0; j <= s; ++j) sum += h[static_cast<std::size_t>(j)] * binomial(j, s - i);
    c.add_term(static_cast<std::size_t>(i), sum);
  }
  return c;
}

/// Coefficients of x h*(x) / (1-x)^(size+1) up to x^N; entry n >= 1 is
/// sum_j h*_j C(n-1-j+size, size).
inline SeriesExpansion ehrhart_expansion(const HStarVector& h, std::size_t N)
{
  SeriesExpansion e{std::vector<BigInt>(N + 1, BigInt(0))};
  const auto s = static_cast<std::int64_t>(h.size());
  for (std::size_t n = 1; n <= N; ++n) {
    for (std::size_t j = 0; j < h.coefficients.size(); ++j) {
      const auto top = static_cast<std::int64_t>(n) - 1 - static_cast<std::int64_t>(j) + s;
      e.coefficients[n] += h[j] * binomial(top, s);
    }
  }
  return e;
}

/// Integer polynomial in y; entry d is the coefficient of y^d.
struct YPolynomial {
  std::vector<BigInt> coefficients;

  void add(std::size_t degree, const BigInt& c)
  {
    if (coefficients.size() <= degree) coefficients.resize(degree + 1, BigInt(0));
    coefficients[degree] += c;
  }
  void trim()
  {
    while (!coefficients.empty() && coefficients.back() == 0) coefficients.pop_back();
  }
  friend bool operator==(const YPolynomial&, const YPolynomial&) = default;
};

/// Substitution y = 1/(1-x): z[n] -> sum_k C(n,k) (-1)^k y^(n-k+1).
inline YPolynomial moebius_polynomial(const ChainSeries& f)
{
  YPolynomial p;
  for (const auto& [n, a] : f.coeffs()) {
    const auto nn = static_cast<std::int64_t>(n);
    for (std::int64_t k = 0; k <= nn; ++k)
      p.add(static_cast<std::size_t>(nn - k + 1), a * sign_pow(k) * binomial(nn, k));
  }
  p.trim();
  return p;
}

/// Substitution y = 1/(1-x): w[n] -> y^(n+1) - y^n.
inline YPolynomial moebius_polynomial(const NonStrictSeries& f)
{
  YPolynomial p;
  for (const auto& [n, b] : f.coeffs()) {
    p.add(n + 1, b);
    p.add(n, -b);
  }
  p.trim();
  return p;
}

struct ChainConstraintReport {
  /// (j, sum_{i>=j} (-1)^j h*_i C(i, j)) for 0 < j < size.
  std::vector<std::pair<std::size_t, BigInt>> sums;

  bool all_vanish() const
  {
    for (const auto& [j, v] : sums)
      if (v != 0) return false;
    return true;
  }
};

/// The sums that vanish whenever h is the h*-vector of a chain.
inline ChainConstraintReport chain_hstar_constraints(const HStarVector& h)
{
  ChainConstraintReport r;
  const std::size_t s = h.size();
  for (std::size_t j = 1; j < s; ++j) {
    BigInt sum = 0;
    for (std::size_t i = j; i <= s; ++i)
      sum += h[i] * binomial(static_cast<std::int64_t>(i), static_cast<std::int64_t>(j));
    r.sums.emplace_back(j, sign_pow(static_cast<std::int64_t>(j)) * sum);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Text forms:  (1,2,0,0,0,0)  and  y^3 - y^2

inline std::string to_string(const HStarVector& h)
{
  std::string s = "(";
  for (std::size_t j = 0; j < h.coefficients.size(); ++j) {
    if (j) s += ',';
    s += h[j].str();
  }
  return s + ")";
}

inline std::ostream& operator<<(std::ostream& os, const HStarVector& h) { return os << to_string(h); }

inline HStarVector parse_hstar(std::string_view text)
{
  HStarVector h;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip();
    if (pos >= text.size() || text[pos] != c) throw SyntaxError(std::string("expected '") + c + "'", pos);
    ++pos;
  };
  expect('(');
  while (true) {
    skip();
    const std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    const std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (digits == pos) throw SyntaxError("expected an integer", pos);
    h.coefficients.emplace_back(std::string(text.substr(start, pos - start)));
    skip();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  expect(')');
  skip();
  if (pos != text.size()) throw SyntaxError("unexpected trailing input", pos);
  return h;
}

inline std::string to_string(const YPolynomial& p)
{
  std::string out;
  for (std::size_t d = p.coefficients.size(); d-- > 0;) {
    const BigInt& c = p.coefficients[d];
    if (c == 0) continue;
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    const bool unit = mag == 1 && d > 0;
    if (!unit) out += mag.str();
    if (d > 0) {
      if (!unit) out += '*';
      out += 'y';
      if (d > 1) out += '^' + std::to_string(d);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace oseries
