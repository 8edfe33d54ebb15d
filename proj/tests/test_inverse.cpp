#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oseries/inverse.hpp"
#include "support.hpp"

using namespace oseries;

namespace {

std::vector<std::string> texts(const DoppelgangerClass& c)
{
  std::vector<std::string> out;
  for (const auto& e : c.members) out.push_back(to_string(e));
  return out;
}

bool contains_isomorphic(const SolveResult& r, const PosetExpr& e)
{
  for (const auto& c : r.classes)
    for (const auto& m : c.members)
      if (isomorphic(m, e)) return true;
  return false;
}

}  // namespace

TEST(Feasibility, Examples)
{
  auto r = feasibility(ChainSeries{{3, 1}, {4, 2}});
  EXPECT_TRUE(r.feasible);
  EXPECT_EQ(r.d, 1);
  EXPECT_EQ(r.m, 0);

  auto bad = feasibility(ChainSeries{{3, 1}, {4, 1}});
  EXPECT_FALSE(bad.feasible);
  EXPECT_EQ(bad.alternating_sum, 0);
  EXPECT_NE(bad.violation.find("alternating"), std::string::npos);

  auto c2 = feasibility(ChainSeries::basis(2));
  EXPECT_TRUE(c2.feasible);
  EXPECT_EQ(c2.d, 0);
  EXPECT_EQ(c2.m, 1);
}

TEST(Feasibility, Violations)
{
  EXPECT_FALSE(feasibility(ChainSeries{}).feasible);
  EXPECT_FALSE(feasibility(ChainSeries{{3, -1}, {4, 2}}).feasible);
  EXPECT_FALSE(feasibility(ChainSeries::basis(0)).feasible);
  // u(1,1): fine for SP posets, but d = 1 forces m = -2 for words.
  auto anti = feasibility(ChainSeries{{1, 1}, {2, 2}});
  EXPECT_TRUE(anti.sp_feasible);
  EXPECT_FALSE(anti.feasible);
  EXPECT_EQ(anti.m, -2);
}

TEST(Signature, Examples)
{
  EXPECT_EQ(signature_eval(parse_expr("d(1)")).signature, (TargetSignature{1, 3, 2, 4}));
  EXPECT_EQ(signature_eval(parse_expr("mu(1,1)")).signature, (TargetSignature{1, 2, 1, 2}));
  auto t = signature_eval(parse_expr("d(mu(1,1))"));
  EXPECT_EQ(t.signature, (TargetSignature{2, 4, 3, 5}));
  EXPECT_EQ(t.dee_inputs, std::vector<std::size_t>{2});
}

TEST(Candidates, Examples)
{
  auto one = enumerate_candidates(1, 0);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(to_string(one[0]), "d(1)");
  for (std::size_t m = 0; m <= 6; ++m) {
    auto c = enumerate_candidates(0, m);
    ASSERT_EQ(c.size(), 1u);
    EXPECT_TRUE(isomorphic(c[0], PosetExpr::chain(m + 1)));
  }
  auto three = enumerate_candidates(1, 1);
  std::vector<std::string> got;
  for (const auto& w : three) got.push_back(to_string(w));
  EXPECT_EQ(got, (std::vector<std::string>{"d(mu(1,1))", "mu(1,d(1))", "mu(d(1),1)"}));
}

TEST(Candidates, WellFormedAndDistinct)
{
  for (std::size_t d = 0; d <= 3; ++d) {
    for (std::size_t m = 0; m + 1 + 3 * d <= 12; ++m) {
      auto words = enumerate_candidates(d, m);
      std::set<std::string> seen;
      for (const auto& w : words) {
        EXPECT_TRUE(seen.insert(to_string(w)).second) << w;
        auto inv = invariants(w);
        EXPECT_EQ(inv.dee_count, d);
        EXPECT_EQ(inv.mu_count, m);
        EXPECT_TRUE(w.is_wixarika());
      }
    }
  }
}

TEST(Candidates, CoverRandomWords)
{
  std::mt19937_64 rng(307);
  for (int trial = 0; trial < 200; ++trial) {
    auto e = random_wixarika_up_to(rng, 12);
    auto inv = invariants(e);
    auto words = enumerate_candidates(inv.dee_count, inv.mu_count);
    bool found = false;
    for (const auto& w : words) found = found || w == e;
    EXPECT_TRUE(found) << e;
  }
}

TEST(Candidates, SignatureMatchesFullEvaluation)
{
  for (std::size_t d = 0; d <= 3; ++d) {
    for (std::size_t m = 0; m + 1 + 3 * d <= 12; ++m) {
      for (const auto& w : enumerate_candidates(d, m)) {
        auto f = eval_strict(w);
        auto sig = signature_eval(w);
        EXPECT_EQ(sig.signature, target_signature(f)) << w;
        BigInt product = 1;
        for (auto t : sig.dee_inputs) product *= t;
        EXPECT_EQ(product, f.lowest_coeff()) << w;
      }
    }
  }
}

TEST(Candidates, PruningIsSound)
{
  // A word rejected by the filter never evaluates to the target.
  std::mt19937_64 rng(311);
  for (int trial = 0; trial < 40; ++trial) {
    auto target_word = random_wixarika_up_to(rng, 11);
    auto f = eval_strict(target_word);
    auto inv = invariants(target_word);
    for (const auto& w : enumerate_candidates(inv.dee_count, inv.mu_count)) {
      if (!passes_filter(w, target_signature(f))) {
        EXPECT_NE(eval_strict(w), f) << w;
      }
    }
  }
}

TEST(Solve, Examples)
{
  auto r1 = solve(ChainSeries{{3, 1}, {4, 2}});
  ASSERT_EQ(r1.classes.size(), 1u);
  EXPECT_EQ(texts(r1.classes[0]), std::vector<std::string>{"d(1)"});

  auto r2 = solve(ChainSeries{{4, 2}, {5, 3}});
  ASSERT_EQ(r2.classes.size(), 1u);
  EXPECT_EQ(texts(r2.classes[0]), std::vector<std::string>{"d(c2)"});
  EXPECT_EQ(r2.candidates, 3u);

  auto r3 = solve(ChainSeries{{6, 3}, {7, 4}});
  ASSERT_EQ(r3.classes.size(), 1u);
  EXPECT_EQ(texts(r3.classes[0]), (std::vector<std::string>{"mu(1,d(c3))", "mu(d(c3),1)"}));
  EXPECT_FALSE(isomorphic(r3.classes[0].members[0], r3.classes[0].members[1]));

  auto chain = solve(ChainSeries::basis(4));
  ASSERT_EQ(chain.classes.size(), 1u);
  EXPECT_EQ(texts(chain.classes[0]), std::vector<std::string>{"c4"});
}

TEST(Solve, Infeasible)
{
  try {
    solve(ChainSeries{{3, 1}, {4, 1}});
    FAIL();
  } catch (const InfeasibleInput& e) {
    EXPECT_FALSE(e.report().feasible);
    EXPECT_EQ(e.report().alternating_sum, 0);
  }
  // Passes every check, yet d(1) is the only word with d = 1, m = 0.
  auto r = solve(ChainSeries{{3, 2}, {4, 3}});
  EXPECT_TRUE(r.report.feasible);
  EXPECT_EQ(r.candidates, 1u);
  EXPECT_TRUE(r.classes.empty());
}

TEST(Solve, SoundAndComplete)
{
  std::mt19937_64 rng(313);
  for (int trial = 0; trial < 60; ++trial) {
    auto e = random_wixarika_up_to(rng, 12);
    auto f = eval_strict(e);
    auto r = solve(f);
    EXPECT_TRUE(contains_isomorphic(r, e)) << e;
    for (const auto& c : r.classes)
      for (const auto& m : c.members) EXPECT_EQ(eval_strict(m), f) << m;
  }
}

TEST(Solve, ParallelMatchesSerial)
{
  std::mt19937_64 rng(317);
  for (int trial = 0; trial < 10; ++trial) {
    auto f = eval_strict(random_wixarika_up_to(rng, 12));
    auto a = solve(f);
    auto b = solve(f, SolveOptions{4, 9});
    ASSERT_EQ(a.classes.size(), b.classes.size());
    for (std::size_t c = 0; c < a.classes.size(); ++c) EXPECT_EQ(texts(a.classes[c]), texts(b.classes[c]));
  }
}

TEST(SolveSp, FindsUnions)
{
  auto r = solve_sp(ChainSeries{{1, 1}, {2, 2}});
  ASSERT_EQ(r.classes.size(), 1u);
  EXPECT_EQ(texts(r.classes[0]), std::vector<std::string>{"u(1,1)"});

  for (const char* text : {"mu(u(1,1),d(1))", "u(c2,d(1))", "mu(1,u(1,c2),1)"}) {
    auto e = parse_expr(text);
    auto f = eval_strict(e);
    auto rs = solve_sp(f);
    EXPECT_TRUE(contains_isomorphic(rs, e)) << text;
    for (const auto& c : rs.classes)
      for (const auto& m : c.members) EXPECT_EQ(eval_strict(m), f);
  }
  EXPECT_THROW(solve_sp(eval_strict(PosetExpr::chain(12)), SolveOptions{1, 9}), SizeLimitError);
}
