#pragma once

// Inverse problem: find the Wixarika posets (words in concatenation and
// handles) whose strict order series is a given chain-basis series.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "oseries/combinatorics.hpp"
#include "oseries/error.hpp"
#include "oseries/generate.hpp"
#include "oseries/hasse.hpp"
#include "oseries/hstar.hpp"
#include "oseries/poset.hpp"
#include "oseries/series.hpp"

namespace oseries {

// ---------------------------------------------------------------------------
// Feasibility

struct FeasibilityReport {
  bool feasible = false;     // passes every check for Wixarika words
  bool sp_feasible = false;  // passes the checks shared by all SP posets
  std::string violation;     // first failed condition, empty when feasible

  std::size_t i = 0, k = 0;
  BigInt a_i = 0, a_k = 0;
  BigInt alternating_sum = 0;
  std::int64_t d = 0, m = 0;
};

namespace detail {

inline FeasibilityReport fail(FeasibilityReport r, std::string why)
{
  r.violation = std::move(why);
  return r;
}

}  // namespace detail

inline FeasibilityReport feasibility(const ChainSeries& f)
{
  FeasibilityReport r;
  if (f.is_zero()) return detail::fail(r, "zero series");
  r.i = f.min_index();
  r.k = f.max_index();
  r.a_i = f.lowest_coeff();
  r.a_k = f.highest_coeff();
  r.d = static_cast<std::int64_t>(r.k) - static_cast<std::int64_t>(r.i);
  r.m = static_cast<std::int64_t>(r.i) - 2 * r.d - 1;
  for (const auto& [u, a] : f.coeffs()) {
    r.alternating_sum += sign_pow(static_cast<std::int64_t>(r.k - u)) * a;
  }
  for (const auto& [u, a] : f.coeffs()) {
    if (a <= 0) return detail::fail(r, "coefficient of z[" + std::to_string(u) + "] is not positive");
  }
  if (r.i < 1) return detail::fail(r, "lowest index is 0; a nonempty poset has lowest index >= 1");
  if (r.alternating_sum != 1) {
    return detail::fail(r, "alternating coefficient sum is " + r.alternating_sum.str() + ", expected 1");
  }
  const HStarVector h = chain_to_hstar(f, r.k);
  if (h[r.k] != 0) return detail::fail(r, "h*_" + std::to_string(r.k) + " is nonzero");
  r.sp_feasible = true;
  if (r.m < 0) {
    return detail::fail(r, "m = i - 2d - 1 = " + std::to_string(r.m) + " is negative (i = " +
                               std::to_string(r.i) + ", d = k - i = " + std::to_string(r.d) + ")");
  }
  r.feasible = true;
  return r;
}

inline std::string to_string(const FeasibilityReport& r)
{
  std::string s = r.feasible ? "feasible" : "infeasible: " + r.violation;
  s += " (i=" + std::to_string(r.i) + ", a_i=" + r.a_i.str() + ", k=" + std::to_string(r.k) +
       ", a_k=" + r.a_k.str() + ", d=" + std::to_string(r.d) + ", m=" + std::to_string(r.m) + ")";
  return s;
}

/// Raised by solve() on series that fail the feasibility checks.
class InfeasibleInput : public Error {
 public:
  explicit InfeasibleInput(FeasibilityReport report)
      : Error("infeasible series: " + report.violation), report_(std::move(report))
  {
  }
  const FeasibilityReport& report() const noexcept { return report_; }

 private:
  FeasibilityReport report_;
};

// ---------------------------------------------------------------------------
// Candidate words and their signatures

/// A normalized two-coloured tree: leaves are points, green corollas are Mu
/// nodes (never directly under another Mu), red nodes are handles.
using CandidateWord = PosetExpr;

/// Lowest and highest terms (a, i) and (b, k) of a word's series.
struct TargetSignature {
  BigInt a = 1;
  std::size_t i = 1;
  BigInt b = 1;
  std::size_t k = 1;

  friend bool operator==(const TargetSignature&, const TargetSignature&) = default;
};

struct SignatureTrace {
  TargetSignature signature;
  /// Lowest index entering each handle, children before parents.
  std::vector<std::size_t> dee_inputs;
};

namespace detail {

inline TargetSignature fold_signature(const PosetExpr& w, std::vector<std::size_t>* trace)
{
  using K = PosetExpr::Kind;
  switch (w.kind()) {
    case K::Point:
    case K::Chain:
      return {1, w.chain_length(), 1, w.chain_length()};
    case K::Dee: {
      TargetSignature s = fold_signature(w.child(), trace);
      if (trace) trace->push_back(s.i);
      return {s.a * s.i, s.i + 2, s.b * (s.k + 1), s.k + 3};
    }
    case K::Mu:
    case K::Union: {
      if (w.kind() == K::Union) throw Error("signature_eval is defined for Wixarika words only");
      TargetSignature acc{1, 0, 1, 0};
      for (const auto& c : w.children()) {
        TargetSignature s = fold_signature(c, trace);
        acc.a *= s.a;
        acc.i += s.i;
        acc.b *= s.b;
        acc.k += s.k;
      }
      return acc;
    }
  }
  return {};
}

}  // namespace detail

/// (a_i, i, a_k, k) of eval_strict(w), computed from the extreme terms only.
inline SignatureTrace signature_eval(const CandidateWord& w)
{
  SignatureTrace t;
  t.signature = detail::fold_signature(w, &t.dee_inputs);
  return t;
}

inline TargetSignature target_signature(const ChainSeries& f)
{
  return {f.lowest_coeff(), f.min_index(), f.highest_coeff(), f.max_index()};
}

namespace detail {

// Bottom-up fold that stops as soon as a handle input t, or the product of
// the inputs seen so far, fails to divide the target's a_i.
inline std::optional<TargetSignature> pruned_fold(const PosetExpr& w, const BigInt& a_i, BigInt& running)
{
  using K = PosetExpr::Kind;
  switch (w.kind()) {
    case K::Point:
    case K::Chain:
      return TargetSignature{1, w.chain_length(), 1, w.chain_length()};
    case K::Dee: {
      auto s = pruned_fold(w.child(), a_i, running);
      if (!s) return std::nullopt;
      const BigInt t = s->i;
      running *= t;
      if (a_i % t != 0 || a_i % running != 0) return std::nullopt;
      return TargetSignature{s->a * s->i, s->i + 2, s->b * (s->k + 1), s->k + 3};
    }
    default: {
      TargetSignature acc{1, 0, 1, 0};
      for (const auto& c : w.children()) {
        auto s = pruned_fold(c, a_i, running);
        if (!s) return std::nullopt;
        acc.a *= s->a;
        acc.i += s->i;
        acc.b *= s->b;
        acc.k += s->k;
      }
      return acc;
    }
  }
}

}  // namespace detail

/// Filter: divisibility of a_i by every handle input and by their running
/// product, then equality of the extreme terms with the target.
inline bool passes_filter(const CandidateWord& w, const TargetSignature& target)
{
  BigInt running = 1;
  auto s = detail::pruned_fold(w, target.a, running);
  return s && *s == target;
}

namespace detail {

class CandidateEnumerator {
 public:
  const std::vector<PosetExpr>& trees(std::size_t d, std::size_t m)
  {
    auto key = std::make_pair(d, m);
    if (auto it = trees_.find(key); it != trees_.end()) return it->second;
    std::vector<PosetExpr> out;
    for (const auto& t : rooted_non_corolla(d, m)) out.push_back(t);
    // Corollas of arity r >= 2 over non-corolla children.
    std::vector<PosetExpr> kids;
    auto rec = [&](auto&& self, std::size_t d_left, std::size_t m_left) -> void {
      // m_left counts the multiplicity still owed by children; each extra
      // child beyond the first consumes one unit of the corolla's own m.
      if (kids.size() >= 2 && d_left == 0 && m_left == 0) {
        out.push_back(PosetExpr::mu(kids));
      }
      if (kids.size() >= 1 && m_left == 0) return;
      for (std::size_t dc = 0; dc <= d_left; ++dc) {
        const std::size_t budget = kids.empty() ? m_left : m_left - 1;
        for (std::size_t mc = 0; mc <= budget; ++mc) {
          for (const auto& child : rooted_non_corolla(dc, mc)) {
            kids.push_back(child);
            self(self, d_left - dc, budget - mc);
            kids.pop_back();
          }
        }
      }
    };
    if (m >= 1) rec(rec, d, m);
    std::sort(out.begin(), out.end(),
              [](const PosetExpr& a, const PosetExpr& b) { return to_string(a) < to_string(b); });
    return trees_.emplace(key, std::move(out)).first->second;
  }

 private:
  std::vector<PosetExpr> rooted_non_corolla(std::size_t d, std::size_t m)
  {
    if (d == 0) return m == 0 ? std::vector<PosetExpr>{PosetExpr::point()} : std::vector<PosetExpr>{};
    std::vector<PosetExpr> out;
    for (const auto& t : trees(d - 1, m)) out.push_back(PosetExpr::dee(t));
    return out;
  }

  std::map<std::pair<std::size_t, std::size_t>, std::vector<PosetExpr>> trees_;
};

}  // namespace detail

/// Every normalized two-coloured tree with d handles and corolla
/// multiplicity m (leaves = m + 1), sorted by text form.
inline std::vector<CandidateWord> enumerate_candidates(std::size_t d, std::size_t m)
{
  detail::CandidateEnumerator e;
  return e.trees(d, m);
}

// ---------------------------------------------------------------------------
// Solving

/// Expressions that differ only in the order of concatenation operands.
struct DoppelgangerClass {
  std::vector<PosetExpr> members;
  HasseDigraph representative;
};

struct SolveOptions {
  std::size_t jobs = 1;
  /// Point cap for the series-parallel search.
  std::size_t max_points = 9;
};

struct SolveResult {
  FeasibilityReport report;
  std::vector<DoppelgangerClass> classes;
  std::size_t candidates = 0;
  std::size_t passed_filter = 0;
};

/// Key shared by all reorderings of concatenation operands.
inline std::string unordered_shape(const PosetExpr& e)
{
  using K = PosetExpr::Kind;
  switch (e.kind()) {
    case K::Point:
    case K::Chain:
      return to_string(e);
    case K::Dee:
      return "d(" + unordered_shape(e.child()) + ")";
    default: {
      std::vector<std::string> parts;
      for (const auto& c : e.children()) parts.push_back(unordered_shape(c));
      std::sort(parts.begin(), parts.end());
      std::string s = e.kind() == K::Mu ? "mu{" : "u{";
      for (std::size_t j = 0; j < parts.size(); ++j) s += (j ? "," : "") + parts[j];
      return s + "}";
    }
  }
}

namespace detail {

// Group solutions into classes by unordered shape; drop isomorphic repeats
// inside a class and merge classes sharing an isomorphism type.
inline std::vector<DoppelgangerClass> group_solutions(const std::vector<PosetExpr>& solutions)
{
  struct Entry {
    PosetExpr expr;
    std::string text;
    std::optional<CanonicalForm> form;
  };
  std::map<std::string, std::vector<Entry>> by_shape;
  for (const auto& s : solutions) {
    PosetExpr c = condensed(s);
    std::optional<CanonicalForm> form;
    if (s.point_count() <= max_canonical_vertices) form = canonical_form(hasse(s));
    by_shape[unordered_shape(c)].push_back({c, to_string(c), std::move(form)});
  }
  std::vector<std::vector<Entry>> groups;
  for (auto& [key, entries] : by_shape) {
    std::vector<Entry> kept;
    for (auto& e : entries) {
      bool dup = std::any_of(kept.begin(), kept.end(), [&](const Entry& k) {
        return k.text == e.text || (k.form && e.form && *k.form == *e.form);
      });
      if (!dup) kept.push_back(std::move(e));
    }
    bool merged = false;
    for (auto& g : groups) {
      bool shares = std::any_of(g.begin(), g.end(), [&](const Entry& a) {
        return std::any_of(kept.begin(), kept.end(),
                           [&](const Entry& b) { return a.form && b.form && *a.form == *b.form; });
      });
      if (shares) {
        for (auto& e : kept) {
          bool dup = std::any_of(g.begin(), g.end(), [&](const Entry& a) {
            return a.form && e.form && *a.form == *e.form;
          });
          if (!dup) g.push_back(std::move(e));
        }
        merged = true;
        break;
      }
    }
    if (!merged) groups.push_back(std::move(kept));
  }
  std::vector<DoppelgangerClass> out;
  for (auto& g : groups) {
    std::sort(g.begin(), g.end(), [](const Entry& a, const Entry& b) { return a.text < b.text; });
    DoppelgangerClass cls;
    for (auto& e : g) cls.members.push_back(std::move(e.expr));
    cls.representative = hasse(cls.members.front());
    out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(), [](const DoppelgangerClass& a, const DoppelgangerClass& b) {
    return to_string(a.members.front()) < to_string(b.members.front());
  });
  return out;
}

// Evaluates `accept` on every candidate, splitting the index range over
// `jobs` threads; returns the accepted candidates in input order.
template <class Accept>
std::vector<PosetExpr> parallel_filter(const std::vector<PosetExpr>& candidates, std::size_t jobs,
                                       Accept accept)
{
  jobs = std::max<std::size_t>(1, std::min(jobs, candidates.size()));
  std::vector<std::vector<std::size_t>> hits(jobs);
  auto work = [&](std::size_t t) {
    for (std::size_t j = t; j < candidates.size(); j += jobs)
      if (accept(candidates[j])) hits[t].push_back(j);
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  std::vector<std::size_t> all;
  for (const auto& h : hits) all.insert(all.end(), h.begin(), h.end());
  std::sort(all.begin(), all.end());
  std::vector<PosetExpr> out;
  for (std::size_t j : all) out.push_back(candidates[j]);
  return out;
}

}  // namespace detail

/// All Wixarika words whose strict series is f, grouped into classes.
inline SolveResult solve(const ChainSeries& f, const SolveOptions& options = {})
{
  SolveResult result;
  result.report = feasibility(f);
  if (!result.report.feasible) throw InfeasibleInput(result.report);
  const auto words = enumerate_candidates(static_cast<std::size_t>(result.report.d),
                                          static_cast<std::size_t>(result.report.m));
  result.candidates = words.size();
  const TargetSignature target = target_signature(f);
  auto filtered = detail::parallel_filter(words, options.jobs,
                                          [&](const PosetExpr& w) { return passes_filter(w, target); });
  result.passed_filter = filtered.size();
  auto solutions = detail::parallel_filter(filtered, options.jobs,
                                           [&](const PosetExpr& w) { return eval_strict(w) == f; });
  result.classes = detail::group_solutions(solutions);
  return result;
}

/// Bounded search over all series-parallel posets with exactly k points.
inline SolveResult solve_sp(const ChainSeries& f, const SolveOptions& options = {})
{
  SolveResult result;
  result.report = feasibility(f);
  if (!result.report.sp_feasible) throw InfeasibleInput(result.report);
  const std::size_t k = result.report.k;
  if (k > options.max_points) {
    throw SizeLimitError("series-parallel search is capped at " + std::to_string(options.max_points) +
                         " points; the series needs " + std::to_string(k));
  }
  const auto all = sp_posets(k);
  result.candidates = all.size();
  const std::size_t i = result.report.i;
  auto filtered = detail::parallel_filter(all, options.jobs,
                                          [&](const PosetExpr& e) { return hasse(e).longest_chain() == i; });
  result.passed_filter = filtered.size();
  auto solutions = detail::parallel_filter(filtered, options.jobs,
                                           [&](const PosetExpr& e) { return eval_strict(e) == f; });
  result.classes = detail::group_solutions(solutions);
  return result;
}

}  // namespace oseries
