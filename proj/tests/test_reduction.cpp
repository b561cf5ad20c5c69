#include <gtest/gtest.h>

#include "lda/lda.hpp"

using namespace lda;

namespace {

std::string data(const std::string& name) { return std::string(LDA_DATA_DIR) + "/" + name; }

struct Massless : ::testing::Test {
  static void SetUpTestSuite() {
    spec = new SystemSpec(load_system(data("one_loop_massless.json")));
    basis = new MarkedBasis(janet_basis(spec->equations, spec->ranking));
  }
  static void TearDownTestSuite() {
    delete basis;
    delete spec;
  }
  static DiffTerm term(const std::string& s) { return parse_term(s, spec->symbols, spec->functions); }
  static RatFun ratfun(const std::string& s) { return parse_ratfun(s, spec->symbols); }

  static SystemSpec* spec;
  static MarkedBasis* basis;
};
SystemSpec* Massless::spec = nullptr;
MarkedBasis* Massless::basis = nullptr;

}  // namespace

TEST(Patterns, Matching) {
  const VanishingPattern first{0, {0, std::nullopt}}, second{0, {std::nullopt, 0}};
  const DiffTerm origin{0, {0, 0}};
  EXPECT_TRUE(first.matches(origin));
  EXPECT_TRUE(second.matches(origin));
  EXPECT_FALSE(first.matches(DiffTerm{0, {1, 0}}));
  EXPECT_TRUE(second.matches(DiffTerm{0, {1, 0}}));
  const DiffPoly p = DiffPoly::term(origin, RatFun(3)) + DiffPoly::term(DiffTerm{0, {1, 1}});
  EXPECT_EQ(apply_patterns(p, {}), p);
  EXPECT_EQ(apply_patterns(p, {first}), DiffPoly::term(DiffTerm{0, {1, 1}}));
}

TEST(ResidueClasses, TrivialStaircase) {
  const SymbolTable s({"k", "n"}, {});
  const std::vector<std::string> f{"f"};
  const Ranking r = Ranking::make(RankingKind::orderly, 1, 2);
  const MarkedBasis b(std::vector<DiffPoly>{parse_expression("f(k+1,n)", s, f), parse_expression("f(k,n+1)", s, f)}, r);
  EXPECT_EQ(residue_class_basis(b, {}, 1), (std::vector<DiffTerm>{{0, {0, 0}}}));
}

TEST(ResidueClasses, InfiniteIsDetected) {
  const SymbolTable s({"k", "n"}, {});
  const std::vector<std::string> f{"f"};
  const Ranking r = Ranking::make(RankingKind::orderly, 1, 2);
  const MarkedBasis b(std::vector<DiffPoly>{parse_expression("f(k+1,n)-f(k,n)", s, f)}, r);
  EXPECT_THROW(residue_class_basis(b, {}, 1), InfiniteResidueBasis);
}

TEST(ResidueClasses, MassiveMasters) {
  const SystemSpec s = load_system(data("one_loop_massive.json"));
  const MarkedBasis b = janet_basis(s.equations, s.ranking);
  const auto masters = residue_class_basis(b, s.boundary, 1);
  EXPECT_EQ(render_terms(masters, s.names()), "[f(k,n+1), f(k,n+2), f(k+1,n+1)]");
  // exactly the complement inside a generous box
  for (int a = 0; a <= 6; ++a)
    for (int c = 0; c <= 6; ++c) {
      const DiffTerm t{0, {a, c}};
      const bool listed = std::find(masters.begin(), masters.end(), t) != masters.end();
      EXPECT_EQ(listed, is_standard(t, b) && !vanishes(t, s.boundary)) << a << "," << c;
    }
}

TEST_F(Massless, SingleMaster) {
  EXPECT_EQ(render_terms(residue_class_basis(*basis, spec->boundary, 1), spec->names()), "[f(k+1,n+1)]");
}

TEST_F(Massless, PaperCoefficient) {
  const ReductionReport rep = reduce_to_masters(term("f(k+3,n+2)"), *basis, spec->boundary, 1, true);
  ASSERT_EQ(rep.combination.size(), 1u);
  EXPECT_EQ(rep.combination[0].first, term("f(k+1,n+1)"));
  EXPECT_TRUE(rep.constant.is_zero());
  const RatFun displayed = ratfun(
      "-(d-2-2*k-2*n)*(d-4-2*k-2*n)*(d-2-k-n)*(d-3-k-n)*(d-n-2*k)"
      "/(q2^3*(k+1)*(d-2*k-4)*k*(d-2*k-2)*n)");
  EXPECT_EQ(rep.combination[0].second, displayed);
  ASSERT_EQ(rep.factored.size(), 1u);
  EXPECT_EQ(rep.factored[0].value(spec->symbols.size()), displayed);
}

// Values frozen from the prolongation oracle at degree bound 5.
TEST_F(Massless, OracleFrozenCoefficients) {
  const std::vector<std::pair<std::string, std::string>> cases{
      {"f(k+2,n+1)", "(4*k*n - 2*k*d + 2*n^2 - 3*n*d + d^2 + 4*k + 2*n - 2*d)/(2*k^2*q2 - k*d*q2 + 2*k*q2)"},
      {"f(k+1,n+2)", "(2*k + n - d)/(n*q2)"},
      {"f(k+2,n+2)",
       "(4*k^3 + 10*k^2*n - 8*k^2*d + 8*k*n^2 - 13*k*n*d + 5*k*d^2 + 2*n^3 - 5*n^2*d + 4*n*d^2 - d^3 + 12*k^2 + "
       "18*k*n - 14*k*d + 6*n^2 - 10*n*d + 4*d^2 + 8*k + 4*n - 4*d)/(2*k^2*n*q2^2 - k*n*d*q2^2 + 2*k*n*q2^2)"},
  };
  for (const auto& [target, coeff] : cases) {
    const ReductionReport rep = reduce_to_masters(term(target), *basis, spec->boundary, 1, false);
    ASSERT_EQ(rep.combination.size(), 1u) << target;
    EXPECT_EQ(rep.combination[0].second, ratfun(coeff)) << target;
  }
}

TEST_F(Massless, MasterReducesToItself) {
  const ReductionReport rep = reduce_to_masters(term("f(k+1,n+1)"), *basis, spec->boundary, 1, false);
  ASSERT_EQ(rep.combination.size(), 1u);
  EXPECT_TRUE(rep.combination[0].second.is_one());
}

TEST_F(Massless, SoundAgainstOracle) {
  const ReductionReport rep = reduce_to_masters(term("f(k+3,n+2)"), *basis, spec->boundary, 1, false);
  const DiffPoly residual = DiffPoly::term(term("f(k+3,n+2)")) - rep.as_poly();
  const ProlongationMatrix m(spec->equations, spec->ranking, 5, pattern_filter(spec->boundary));
  EXPECT_TRUE(m.contains(apply_patterns(residual, spec->boundary)));
}

// Deleting boundary terms during the reduction changes the answer; the
// default deletes them only after the full normal form.
TEST_F(Massless, PatternTimingMatters) {
  const DiffPoly h = DiffPoly::term(term("f(k+3,n+2)"));
  const DiffPoly after = reduce_modulo(h, *basis, spec->boundary, PatternTiming::after);
  const DiffPoly interleaved = reduce_modulo(h, *basis, spec->boundary, PatternTiming::interleaved);
  EXPECT_NE(after, interleaved);
  EXPECT_EQ(after, apply_patterns(j_normal_form(h, *basis), spec->boundary));
}
