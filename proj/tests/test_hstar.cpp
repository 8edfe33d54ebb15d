#include <gtest/gtest.h>

#include "oseries/hstar.hpp"
#include "support.hpp"

using namespace oseries;

namespace {

ChainSeries z(std::size_t i) { return ChainSeries::basis(i); }

HStarVector hv(std::vector<int> v)
{
  HStarVector h;
  for (int x : v) h.coefficients.emplace_back(x);
  return h;
}

// y (y-1)^n by repeated multiplication.
YPolynomial y_times_y_minus_one_pow(std::size_t n)
{
  std::vector<BigInt> p{0, 1};
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<BigInt> q(p.size() + 1, 0);
    for (std::size_t d = 0; d < p.size(); ++d) {
      q[d + 1] += p[d];
      q[d] -= p[d];
    }
    p = q;
  }
  YPolynomial out{p};
  out.trim();
  return out;
}

}  // namespace

TEST(ChainToHStar, Examples)
{
  EXPECT_EQ(chain_to_hstar(ChainSeries{{4, 2}, {5, 3}}, 5), hv({1, 2, 0, 0, 0, 0}));
  for (std::size_t n = 1; n <= 8; ++n) {
    std::vector<int> unit(n + 1, 0);
    unit[0] = 1;
    EXPECT_EQ(chain_to_hstar(z(n), n), hv(unit));
  }
  EXPECT_EQ(chain_to_hstar(ChainSeries{{1, 1}, {2, 2}}, 2), hv({1, 1, 0}));
  EXPECT_THROW(chain_to_hstar(ChainSeries{{4, 2}, {5, 3}}, 4), InvalidSize);
}

TEST(HStarToChain, Examples)
{
  EXPECT_EQ(hstar_to_chain(hv({1, 2, 0, 0, 0, 0})), (ChainSeries{{4, 2}, {5, 3}}));
  EXPECT_EQ(hstar_to_chain(hv({1, 0, 0, 0})), z(3));
  EXPECT_EQ(hstar_to_chain(hv({1, 1, 0})), (ChainSeries{{1, 1}, {2, 2}}));
  EXPECT_EQ(hstar_to_chain(hv({1})), z(0));
  EXPECT_THROW(hstar_to_chain(hv({1, 0, 1})), NotRepresentable);
}

TEST(Ehrhart, Examples)
{
  // Non-strict counts of d(c2) from the ideal-lattice oracle.
  auto oracle = IdealLattice(hasse(parse_expr("d(c2)"))).nonstrict_counts(4);
  EXPECT_EQ(tsup::as_poly(ehrhart_expansion(hv({1, 2, 0, 0, 0, 0}), 4)), oracle);
  EXPECT_EQ(to_string(ehrhart_expansion(hv({1, 2, 0, 0, 0, 0}), 4)), "0,1,8,33,98");
  EXPECT_EQ(to_string(ehrhart_expansion(hv({1}), 3)), "0,1,1,1");
  EXPECT_EQ(to_string(ehrhart_expansion(hv({1, 1, 0}), 4)), "0,1,4,9,16");
}

TEST(Moebius, Examples)
{
  EXPECT_EQ(to_string(moebius_polynomial(NonStrictSeries::chain(2))), "y^3 - y^2");
  EXPECT_EQ(to_string(moebius_polynomial(z(1))), "y^2 - y");
  EXPECT_EQ(to_string(moebius_polynomial(z(0))), "y");
  EXPECT_EQ(to_string(moebius_polynomial(ChainSeries{})), "0");
}

TEST(Moebius, BasisImages)
{
  for (std::size_t n = 0; n <= 9; ++n) {
    EXPECT_EQ(moebius_polynomial(z(n)), y_times_y_minus_one_pow(n));
    YPolynomial w;
    w.add(n + 1, 1);
    w.add(n, -1);
    w.trim();
    EXPECT_EQ(moebius_polynomial(NonStrictSeries::chain(n)), w);
  }
}

TEST(Constraints, Examples)
{
  auto chain = chain_to_hstar(z(4), 4);
  auto r = chain_hstar_constraints(chain);
  EXPECT_EQ(r.sums.size(), 3u);
  EXPECT_TRUE(r.all_vanish());

  auto d2 = chain_hstar_constraints(hv({1, 2, 0, 0, 0, 0}));
  ASSERT_FALSE(d2.sums.empty());
  EXPECT_EQ(d2.sums[0].first, 1u);
  EXPECT_EQ(d2.sums[0].second, -2);
  EXPECT_FALSE(d2.all_vanish());

  EXPECT_TRUE(chain_hstar_constraints(hv({1})).sums.empty());
  EXPECT_TRUE(chain_hstar_constraints(hv({1})).all_vanish());
}

TEST(HStar, SeriesParallelProperties)
{
  for (const auto& e : sp_posets_up_to(7)) {
    const std::size_t size = e.point_count();
    auto c = eval_strict(e);
    auto h = chain_to_hstar(c, size);
    ASSERT_EQ(h.coefficients.size(), size + 1);
    EXPECT_EQ(h[0], 1) << e;
    EXPECT_EQ(h[size], 0) << e;
    EXPECT_EQ(hstar_to_chain(h), c) << e;
    BigInt total = 0;
    for (const auto& x : h.coefficients) total += x;
    EXPECT_EQ(total, c.coeff(size)) << e;
    EXPECT_EQ(ehrhart_expansion(h, 10), expand(eval_nonstrict(e), 10)) << e;
  }
}

TEST(HStar, EhrhartMatchesOracle)
{
  for (const auto& e : sp_posets_up_to(6)) {
    auto h = chain_to_hstar(eval_strict(e), e.point_count());
    EXPECT_EQ(tsup::as_poly(ehrhart_expansion(h, 10)), IdealLattice(hasse(e)).nonstrict_counts(10)) << e;
  }
}

TEST(HStar, Text)
{
  auto h = hv({1, 2, 0, 0, 0, 0});
  EXPECT_EQ(to_string(h), "(1,2,0,0,0,0)");
  EXPECT_EQ(parse_hstar(" ( 1, 2,0,0 ,0,0)"), h);
  EXPECT_EQ(parse_hstar("(1,-3,2)"), hv({1, -3, 2}));
  EXPECT_THROW(parse_hstar("1,2"), SyntaxError);
  EXPECT_THROW(parse_hstar("(1,,2)"), SyntaxError);
  EXPECT_THROW(parse_hstar("(1,2) x"), SyntaxError);
}
