#include <gtest/gtest.h>

#include <algorithm>

#include "lda/lda.hpp"

using namespace lda;

namespace {

const SymbolTable xy({"x1", "x2"}, {});
const std::vector<std::string> y{"y"};
const Ranking orderly = Ranking::make(RankingKind::orderly, 1, 2);

DiffPoly P(const std::string& s) { return parse_expression(s, xy, y); }
DiffTerm T(int a, int b) { return DiffTerm{0, Exponents{a, b}}; }

}  // namespace

TEST(JanetPartition, StaircaseExample) {
  // x1^2 x2, x1 x2^2, x2^3 with x1 heaviest
  const std::vector<DiffTerm> leads{T(2, 1), T(1, 2), T(0, 3)};
  const auto marks = janet_partition(leads, {0, 1});
  EXPECT_EQ(marks[0], (std::vector<bool>{true, true}));
  EXPECT_EQ(marks[1], (std::vector<bool>{false, true}));
  EXPECT_EQ(marks[2], (std::vector<bool>{false, true}));
}

TEST(JanetPartition, SingletonIsFullyMultiplicative) {
  const std::vector<DiffTerm> leads{T(3, 1)};
  EXPECT_EQ(janet_partition(leads, {0, 1})[0], (std::vector<bool>{true, true}));
}

TEST(JanetDivisor, RespectsMarking) {
  std::vector<MarkedElement> e{{P("y(x1+2,x2+1)"), T(2, 1), {true, true}}};
  auto d = find_j_divisor(T(3, 1), e);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->beta, (Exponents{1, 0}));
  std::vector<MarkedElement> e2{{P("y(x1+1,x2+2)"), T(1, 2), {false, true}}};
  EXPECT_FALSE(find_j_divisor(T(2, 3), e2));
  EXPECT_TRUE(find_groebner_divisor(T(2, 3), e2));
}

TEST(JanetBasis, SingleEquation) {
  const MarkedBasis b = janet_basis({P("2*y(x1+1,x2)-y(x1,x2+1)")}, orderly);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b.elements()[0].poly, P("y(x1+1,x2)-1/2*y(x1,x2+1)"));
  EXPECT_EQ(b.elements()[0].multiplicative, (std::vector<bool>{true, true}));
}

TEST(JanetBasis, TwoShiftExample) {
  const MarkedBasis b = janet_basis({P("y(x1+1,x2)-y(x1,x2+1)"), P("y(x1+1,x2)-y(x1,x2)")}, orderly);
  EXPECT_EQ(b.polys(), (std::vector<DiffPoly>{P("y(x1,x2+1)-y(x1,x2)"), P("y(x1+1,x2)-y(x1,x2)")}));
  EXPECT_TRUE(check_janet_basis(b));
  EXPECT_EQ(reduced_groebner_basis(b), b.polys());
}

TEST(JanetBasis, Fibonacci) {
  const SymbolTable t({"t"}, {});
  const Ranking r = Ranking::make(RankingKind::orderly, 1, 1);
  const MarkedBasis b = janet_basis({parse_expression("y(t+2)-y(t+1)-y(t)", t, y)}, r);
  EXPECT_EQ(j_normal_form(parse_expression("y(t+4)", t, y), b), parse_expression("3*y(t+1)+2*y(t)", t, y));
  EXPECT_TRUE(j_normal_form(DiffPoly(), b).is_zero());
  const DiffPoly irreducible = parse_expression("y(t+1)+5", t, y);
  EXPECT_EQ(j_normal_form(irreducible, b), irreducible);
}

TEST(JanetBasis, CharacterizationDetectsMissingProlongation) {
  // x2 is nonmultiplicative for the x1-element; its prolongation leaves -y(x2+1)+2y
  const MarkedBasis b(std::vector<DiffPoly>{P("y(x1+1,x2)-y(x1,x2)"), P("y(x1+1,x2+1)-2*y(x1,x2)")}, orderly);
  EXPECT_FALSE(check_janet_basis(b));
  const DiffPoly prolongation = apply_shift({0, 1}, P("y(x1+1,x2)-y(x1,x2)"));
  EXPECT_EQ(j_normal_form(prolongation, b), P("-y(x1,x2+1)+2*y(x1,x2)"));
}

TEST(JanetBasis, CorruptedCoefficientFailsCharacterization) {
  const MarkedBasis good = janet_basis({P("y(x1+1,x2)-x1*y(x1,x2)"), P("y(x1,x2+1)-y(x1,x2)")}, orderly);
  ASSERT_TRUE(check_janet_basis(good));
  std::vector<DiffPoly> polys = good.polys();
  polys[1] = P("y(x1+1,x2)-x2*y(x1,x2)");
  EXPECT_FALSE(check_janet_basis(MarkedBasis(polys, orderly)));
}

TEST(JanetBasis, ProlongationElementDroppedFromReducedBasis) {
  const std::vector<DiffPoly> input{P("y(x1+1,x2)-x1*y(x1,x2)"), P("y(x1,x2+1)-y(x1,x2)")};
  const MarkedBasis b = janet_basis(input, orderly);
  EXPECT_TRUE(check_janet_basis(b));
  const auto red = reduced_groebner_basis(b);
  const MarkedBasis rb(red, orderly);
  for (const auto& g : b.polys()) EXPECT_TRUE(groebner_normal_form(g, rb).is_zero());
  for (const auto& g : red) EXPECT_TRUE(j_normal_form(g, b).is_zero());
  for (std::size_t i = 0; i < rb.size(); ++i)
    for (std::size_t j = 0; j < rb.size(); ++j)
      if (i != j) {
        EXPECT_FALSE(divides(rb.elements()[i].lead, rb.elements()[j].lead));
      }
}

TEST(JanetBasis, InconsistentSystem) {
  EXPECT_THROW(janet_basis({P("y(x1+1,x2)-y(x1,x2)"), P("y(x1+1,x2)-y(x1,x2)-1")}, orderly), InconsistentSystem);
}

TEST(JanetNormalForm, LinearAndProjective) {
  const MarkedBasis b = janet_basis({P("y(x1+1,x2)-x2*y(x1,x2+1)"), P("y(x1,x2+2)-x1*y(x1,x2)")}, orderly);
  ASSERT_TRUE(check_janet_basis(b));
  const DiffPoly h1 = P("y(x1+3,x2+1)+x1*y(x1+1,x2+2)"), h2 = P("(x1+x2)*y(x1+2,x2)-y(x1,x2+3)");
  const RatFun c = parse_ratfun("x1/(x2+1)", xy);
  EXPECT_EQ(j_normal_form(h1 + c * h2, b), j_normal_form(h1, b) + c * j_normal_form(h2, b));
  const DiffPoly nf = j_normal_form(h1, b);
  EXPECT_EQ(j_normal_form(nf, b), nf);
  EXPECT_EQ(groebner_normal_form(h1, b), nf);
}

TEST(JanetBasis, InputPermutationInvariant) {
  const std::vector<DiffPoly> input{P("y(x1+2,x2)-x2*y(x1,x2)"), P("y(x1+1,x2+1)-y(x1,x2+1)"), P("y(x1,x2+2)+y(x1+1,x2)")};
  const auto reference = janet_basis(input, orderly).polys();
  std::vector<std::size_t> order{0, 1, 2};
  while (std::next_permutation(order.begin(), order.end())) {
    std::vector<DiffPoly> permuted;
    for (auto i : order) permuted.push_back(input[i]);
    EXPECT_EQ(janet_basis(permuted, orderly).polys(), reference);
  }
}

TEST(JanetBasis, CompletionLimit) {
  CompletionOptions opts;
  opts.max_steps = 1;
  EXPECT_THROW(janet_basis({P("y(x1+1,x2)-y(x1,x2+1)"), P("y(x1+1,x2+1)-x1*y(x1,x2)")}, orderly, opts),
               CompletionLimitExceeded);
}
