#include <gtest/gtest.h>

#include "lda/lda.hpp"

using namespace lda;

namespace {

const SymbolTable t1({"t"}, {});
const SymbolTable xy({"x1", "x2"}, {});
const std::vector<std::string> y{"y"};

std::string data(const std::string& name) { return std::string(LDA_DATA_DIR) + "/" + name; }

}  // namespace

TEST(Oracle, Fibonacci) {
  const std::vector<DiffPoly> F{parse_expression("y(t+2)-y(t+1)-y(t)", t1, y)};
  const Ranking r = Ranking::make(RankingKind::orderly, 1, 1);
  const OracleResult res = oracle_normal_form(parse_expression("y(t+4)", t1, y), F, r, 4);
  EXPECT_FALSE(res.degree_bound_too_small);
  EXPECT_EQ(res.normal_form, parse_expression("3*y(t+1)+2*y(t)", t1, y));
}

TEST(Oracle, MembersReduceToZero) {
  const std::vector<DiffPoly> F{parse_expression("y(x1+1,x2)-x1*y(x1,x2+1)", xy, y)};
  const Ranking r = Ranking::make(RankingKind::orderly, 1, 2);
  const ProlongationMatrix m(F, r, 3);
  const DiffPoly h = apply_shift({1, 2}, F[0]) + parse_ratfun("x2", xy) * apply_shift({2, 0}, F[0]);
  EXPECT_TRUE(m.contains(h));
  EXPECT_FALSE(m.contains(parse_expression("y(x1,x2)", xy, y)));
  EXPECT_FALSE(m.contains_unit());
}

TEST(Oracle, TwoShiftBasisFromSpan) {
  const std::vector<DiffPoly> F{parse_expression("y(x1+1,x2)-y(x1,x2+1)", xy, y),
                                parse_expression("y(x1+1,x2)-y(x1,x2)", xy, y)};
  const Ranking r = Ranking::make(RankingKind::orderly, 1, 2);
  const ProlongationMatrix m(F, r, 2);
  EXPECT_TRUE(m.contains(parse_expression("y(x1+1,x2)-y(x1,x2)", xy, y)));
  EXPECT_TRUE(m.contains(parse_expression("y(x1,x2+1)-y(x1,x2)", xy, y)));
  EXPECT_EQ(m.normal_form(parse_expression("y(x1+2,x2+1)", xy, y)), parse_expression("y(x1,x2)", xy, y));
}

TEST(Oracle, DetectsInconsistency) {
  const std::vector<DiffPoly> F{parse_expression("y(t+1)-y(t)", t1, y), parse_expression("y(t+1)-y(t)-1", t1, y)};
  EXPECT_TRUE(ProlongationMatrix(F, Ranking::make(RankingKind::orderly, 1, 1), 1).contains_unit());
}

TEST(Oracle, FlagsSmallDegreeBound) {
  const std::vector<DiffPoly> F{parse_expression("y(t+2)-y(t+1)-y(t)", t1, y)};
  const Ranking r = Ranking::make(RankingKind::orderly, 1, 1);
  EXPECT_TRUE(oracle_normal_form(parse_expression("y(t+6)", t1, y), F, r, 2).degree_bound_too_small);
  EXPECT_FALSE(oracle_normal_form(parse_expression("y(t+6)", t1, y), F, r, 4).degree_bound_too_small);
}

TEST(Oracle, AgreesWithJanetOnMasslessReduction) {
  const SystemSpec s = load_system(data("one_loop_massless.json"));
  const DiffPoly h = DiffPoly::term(parse_term("f(k+3,n+2)", s.symbols, s.functions));
  const OracleResult res = oracle_normal_form(h, s.equations, s.ranking, 5);
  EXPECT_FALSE(res.degree_bound_too_small);
  const MarkedBasis b = janet_basis(s.equations, s.ranking);
  EXPECT_EQ(apply_patterns(res.normal_form, s.boundary), reduce_modulo(h, b, s.boundary));
}
