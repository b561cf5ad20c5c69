#include <gtest/gtest.h>

#include <random>

#include "lda/lda.hpp"
#include "random_systems.hpp"

using namespace lda;

namespace {

const SymbolTable xy({"x", "y"}, {});
const SymbolTable kn({"k", "n"}, {"d", "q2", "m2"});

RatFun rf(const std::string& s, const SymbolTable& t = xy) { return parse_ratfun(s, t); }
MultiPoly mp(const std::string& s, const SymbolTable& t = xy) { return rf(s, t).num(); }

}  // namespace

TEST(MultiPoly, CancellationGivesZero) {
  const MultiPoly x = MultiPoly::variable(2, 0);
  EXPECT_TRUE((x * Integer(2) + x * Integer(3) - x * Integer(5)).is_zero());
}

TEST(MultiPoly, NormalizeRecordsSign) {
  const MultiPoly x = MultiPoly::variable(2, 0);
  const SignedPoly s = poly_normalize(2, (MultiPoly::constant(2, 1) - x).terms());
  EXPECT_EQ(s.unit, -1);
  EXPECT_EQ(s.poly, x - MultiPoly::constant(2, 1));
}

TEST(MultiPoly, LikeTermsMerge) {
  EXPECT_EQ(mp("x^2+x-x-1"), mp("x^2-1"));
  EXPECT_EQ(mp("(x+1)*(x-1)"), mp("x^2-1"));
}

TEST(MultiPoly, Gcd) {
  EXPECT_EQ(gcd(mp("x^2-1"), mp("x^2-2*x+1")), mp("x-1"));
  EXPECT_EQ(gcd(mp("-3*x*y+6"), MultiPoly(2)), mp("3*x*y-6"));
  EXPECT_EQ(gcd(mp("k*(q2-m2)", kn), mp("k*d", kn)), mp("k", kn));
  EXPECT_EQ(gcd(mp("6*x^2*y+6*x*y^2"), mp("4*x*y^3+4*x^2*y^2")), mp("2*x*y^2+2*x^2*y"));
}

TEST(MultiPoly, HeuristicGcdMatchesFullGcdOnLargeCoefficients) {
  const SymbolTable c({}, {"c"});
  const MultiPoly g = mp("(c^3-7*c+100000000007)", c);
  const MultiPoly a = g * mp("(c^5+2*c-1)^3", c), b = g * mp("(9*c^4-c+12)^2", c);
  EXPECT_EQ(gcd(a, b), g);
  EXPECT_TRUE(gcd(mp("c^40+1", c), mp("c^39-c", c)).is_one());
}

TEST(RatFun, CanonicalForm) {
  EXPECT_EQ(rf("(x^2-1)/(x-1)"), rf("x+1"));
  EXPECT_EQ(rf("1/x+1/y"), rf("(x+y)/(x*y)"));
  EXPECT_EQ(rf("1/(-x)"), rf("-1/x"));
  EXPECT_TRUE(rf("x/(2*x)") == RatFun(Integer(1)) / RatFun(2));
}

TEST(RatFun, DivisionByZero) {
  EXPECT_THROW(RatFun(0).inverse(), DivisionByZero);
  EXPECT_THROW(rf("x") / RatFun(0), DivisionByZero);
}

TEST(RatFun, Shift) {
  const std::vector<std::int64_t> mu{1, 2};
  EXPECT_EQ(rf("k/(n+1)", kn).shifted(mu), rf("(k+1)/(n+3)", kn));
  const std::vector<std::int64_t> zero{0, 0};
  EXPECT_EQ(rf("d*k/(n+q2)", kn).shifted(zero), rf("d*k/(n+q2)", kn));
  // parameters never move
  EXPECT_EQ(rf("d+q2", kn).shifted(mu), rf("d+q2", kn));
}

TEST(RatFun, Specialize) {
  const std::size_t m2 = *kn.index_of("m2");
  const std::map<std::size_t, RatFun> zero{{m2, RatFun(0)}};
  EXPECT_TRUE(specialize(rf("2*m2*n", kn), zero).is_zero());
  EXPECT_EQ(specialize(rf("q2-m2", kn), zero), rf("q2", kn));
  EXPECT_THROW(specialize(rf("1/m2", kn), zero), DivisionByZero);
  const std::map<std::size_t, RatFun> half{{m2, rf("d/2", kn)}};
  EXPECT_EQ(specialize(rf("(q2-m2)/(m2+1)", kn), half), rf("(2*q2-d)/(d+2)", kn));
}

TEST(Factor, DenominatorFragment) {
  const SymbolTable s({"k"}, {"q2"});
  const FactoredPoly f = factor_poly(mp("q2^3*k^2+q2^3*k", s));
  EXPECT_EQ(f.unit, 1);
  ASSERT_EQ(f.factors.size(), 3u);
  EXPECT_EQ(f.expand(2), mp("q2^3*k*(k+1)", s));
  std::vector<std::pair<MultiPoly, int>> expected{{mp("k", s), 1}, {mp("k+1", s), 1}, {mp("q2", s), 3}};
  for (const auto& e : expected)
    EXPECT_NE(std::find(f.factors.begin(), f.factors.end(), e), f.factors.end()) << ratfun_text(RatFun(e.first), s);
}

TEST(Factor, RecoversLinearFactors) {
  const MultiPoly p = mp("(2*n+4-d+2*k)*(2*n+2-d+2*k)", kn);
  const FactoredPoly f = factor_poly(p);
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0].second + f.factors[1].second, 2);
  EXPECT_EQ(f.expand(kn.size()), p);
}

TEST(Factor, IrreducibleUnchanged) {
  const FactoredPoly f = factor_poly(mp("x^2+y^2"));
  ASSERT_EQ(f.factors.size(), 1u);
  EXPECT_EQ(f.factors[0].first, mp("x^2+y^2"));
}

TEST(Factor, RationalFunction) {
  const RatFun a = rf("-6*(k+1)^2*(d-2*k)/(q2^2*n*(n+d))", kn);
  EXPECT_EQ(factor_output(a).value(kn.size()), a);
}

// Field axioms, canonical form and the shift homomorphism on random elements.
TEST(RatFun, RandomizedAxioms) {
  const SymbolTable s({"x", "y"}, {"c"});
  lda::testing::SystemGenerator gen(7);
  const std::vector<std::int64_t> mu{1, 2};
  for (int i = 0; i < 300; ++i) {
    const RatFun a = gen.rational(s, 3), b = gen.rational(s, 3), c = gen.rational(s, 2);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    if (!a.is_zero()) {
      EXPECT_TRUE((a * a.inverse()).is_one());
    }
    EXPECT_EQ((a * b).shifted(mu), a.shifted(mu) * b.shifted(mu));
    EXPECT_EQ((a + b).shifted(mu), a.shifted(mu) + b.shifted(mu));
    if (!a.is_zero()) {
      EXPECT_EQ(gcd(a.num(), a.den()), MultiPoly::constant(3, 1));
    }
  }
}
