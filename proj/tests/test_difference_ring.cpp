#include <gtest/gtest.h>

#include "lda/lda.hpp"

using namespace lda;

namespace {

const SymbolTable kn({"k", "n"}, {"d"});
const std::vector<std::string> f{"f"};

DiffPoly P(const std::string& s) { return parse_expression(s, kn, f); }
DiffTerm T(int a, int b) { return DiffTerm{0, Exponents{a, b}}; }

}  // namespace

TEST(Ranking, OrderlyTieBreaksLexicographically) {
  const Ranking r = Ranking::make(RankingKind::orderly, 1, 2);
  EXPECT_GT(r.compare(T(1, 1), T(0, 2)), 0);
  EXPECT_GT(r.compare(T(0, 3), T(2, 0)), 0);
  EXPECT_EQ(r.compare(T(1, 0), T(1, 0)), 0);
  const Ranking swapped(RankingKind::orderly, {0}, {1, 0});
  EXPECT_LT(swapped.compare(T(1, 1), T(0, 2)), 0);
}

TEST(Ranking, EliminationComparesFunctionsFirst) {
  const Ranking r = Ranking::make(RankingKind::elimination, 2, 2);
  const DiffTerm ux{0, {0, 0}}, u{1, {5, 5}};
  EXPECT_GT(r.compare(ux, u), 0);
  const Ranking o = Ranking::make(RankingKind::orderly, 2, 2);
  EXPECT_LT(o.compare(ux, u), 0);
  EXPECT_THROW(Ranking(RankingKind::orderly, {0, 0}, {0, 1}), ValidationError);
}

TEST(DiffPoly, LeadingTerm) {
  const SymbolTable t({"t"}, {});
  const std::vector<std::string> y{"y"};
  const DiffPoly fib = parse_expression("y(t+2)-y(t+1)-y(t)", t, y);
  const auto [lt, lc] = leading_term(fib, Ranking::make(RankingKind::orderly, 1, 1));
  EXPECT_EQ(lt.exps, Exponents{2});
  EXPECT_TRUE(lc.is_one());
  EXPECT_THROW(leading_term(DiffPoly(RatFun(3)), Ranking::make(RankingKind::orderly, 1, 1)), NoLeadingTerm);
}

TEST(DiffPoly, OreShift) {
  EXPECT_EQ(apply_shift({1, 0}, P("k*f(k+2,n)")), P("(k+1)*f(k+3,n)"));
  EXPECT_EQ(apply_shift({0, 0}, P("k*f(k+2,n)+n")), P("k*f(k+2,n)+n"));
  EXPECT_EQ(apply_shift({1, 2}, P("(d-n)/k*f(k,n+1)+k")), P("(d-n-2)/(k+1)*f(k+1,n+3)+k+1"));
}

TEST(DiffPoly, ShiftIsHomomorphism) {
  const DiffPoly a = P("k*f(k+1,n)-n*f(k,n)"), b = P("(d+k)*f(k,n+2)+f(k,n)");
  const Exponents beta{2, 1};
  EXPECT_EQ(apply_shift(beta, a + b), apply_shift(beta, a) + apply_shift(beta, b));
  EXPECT_EQ(apply_shift({1, 0}, apply_shift({0, 1}, a)), apply_shift({1, 1}, a));
}

TEST(DiffPoly, LinearCombination) {
  const DiffPoly p = P("f(k+1,n)-f(k,n+1)");
  EXPECT_TRUE((p - p).is_zero());
  const DiffPoly r = linear_combine(RatFun(1), p, RatFun(-1), P("f(k+1,n)-f(k,n)"));
  EXPECT_EQ(r, P("-f(k,n+1)+f(k,n)"));
}

TEST(DiffPoly, MakeMonic) {
  const SymbolTable t({"t"}, {});
  const std::vector<std::string> y{"y"};
  const Ranking r = Ranking::make(RankingKind::orderly, 1, 1);
  EXPECT_EQ(make_monic(parse_expression("2*y(t+1)+t*y(t)", t, y), r), parse_expression("y(t+1)+t/2*y(t)", t, y));
  const DiffPoly monic = parse_expression("y(t+1)-y(t)", t, y);
  EXPECT_EQ(make_monic(monic, r), monic);
}
