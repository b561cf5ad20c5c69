#pragma once

#include <optional>
#include <vector>

#include "lda/factor.hpp"
#include "lda/janet.hpp"

namespace lda {

// Terms of `func` vanish when every constrained shift component equals its value.
struct VanishingPattern {
  std::size_t func = 0;
  std::vector<std::optional<int>> constraints;  // one entry per variable

  bool matches(const DiffTerm& t) const {
    if (t.func != func) return false;
    for (std::size_t i = 0; i < constraints.size(); ++i)
      if (constraints[i] && t.exps[i] != *constraints[i]) return false;
    return true;
  }

  bool operator==(const VanishingPattern&) const = default;
};

inline bool vanishes(const DiffTerm& t, const std::vector<VanishingPattern>& patterns) {
  for (const auto& p : patterns)
    if (p.matches(t)) return true;
  return false;
}

inline TermFilter pattern_filter(const std::vector<VanishingPattern>& patterns) {
  if (patterns.empty()) return {};
  return [patterns](const DiffTerm& t) { return vanishes(t, patterns); };
}

inline DiffPoly apply_patterns(const DiffPoly& p, const std::vector<VanishingPattern>& patterns) {
  DiffPoly out(p.constant());
  for (const auto& [t, c] : p.terms())
    if (!vanishes(t, patterns)) out.add(t, c);
  return out;
}

inline bool is_standard(const DiffTerm& t, const MarkedBasis& b) {
  for (const auto& g : b.elements())
    if (divides(g.lead, t)) return false;
  return true;
}

// Terms with no Groebner divisor in `b` that survive the patterns, ascending by
// ranking. Functions are 0..num_functions-1.
inline std::vector<DiffTerm> residue_class_basis(const MarkedBasis& b, const std::vector<VanishingPattern>& patterns,
                                                 std::size_t num_functions) {
  const std::size_t n = b.ranking().num_variables();
  std::vector<DiffTerm> out;
  for (std::size_t f = 0; f < num_functions; ++f) {
    // Box bound per coordinate: past it, both divisibility and the fixed-value
    // patterns are invariant under further shifts.
    Exponents bound(n, 0);
    for (const auto& g : b.elements())
      if (g.lead.func == f)
        for (std::size_t i = 0; i < n; ++i) bound[i] = std::max(bound[i], g.lead.exps[i]);
    for (const auto& p : patterns)
      if (p.func == f)
        for (std::size_t i = 0; i < n; ++i)
          if (p.constraints[i]) bound[i] = std::max(bound[i], *p.constraints[i] + 1);

    DiffTerm t{f, Exponents(n, 0)};
    while (true) {
      if (is_standard(t, b) && !vanishes(t, patterns)) {
        for (std::size_t i = 0; i < n; ++i)
          if (t.exps[i] == bound[i]) {
            DiffTerm next = t;
            ++next.exps[i];
            if (is_standard(next, b) && !vanishes(next, patterns))
              throw InfiniteResidueBasis("infinitely many standard terms along direction " + std::to_string(i + 1));
          }
        out.push_back(t);
      }
      std::size_t i = 0;
      while (i < n && t.exps[i] == bound[i]) t.exps[i++] = 0;
      if (i == n) break;
      ++t.exps[i];
    }
  }
  std::sort(out.begin(), out.end(), [&](const DiffTerm& a, const DiffTerm& c) { return b.ranking().compare(a, c) < 0; });
  return out;
}

struct ReductionReport {
  DiffTerm target;
  std::vector<std::pair<DiffTerm, RatFun>> combination;  // ranking-descending
  RatFun constant;
  std::vector<DiffTerm> masters;
  bool masters_enumerated = false;  // false when the residue basis is infinite
  std::vector<FactoredRatFun> factored;  // parallel to combination when requested

  DiffPoly as_poly() const {
    DiffPoly p(constant);
    for (const auto& [t, c] : combination) p.add(t, c);
    return p;
  }
};

enum class PatternTiming {
  after,        // full J-normal form, then delete vanishing terms
  interleaved,  // delete vanishing terms after every reduction step
};

// The two timings generally disagree: a vanishing non-standard term still
// contributes to the masters when it is reduced before being deleted.
inline DiffPoly reduce_modulo(const DiffPoly& h, const MarkedBasis& b, const std::vector<VanishingPattern>& patterns,
                              PatternTiming timing = PatternTiming::after) {
  if (timing == PatternTiming::interleaved) return j_normal_form(h, b, pattern_filter(patterns));
  return apply_patterns(j_normal_form(apply_patterns(h, patterns), b), patterns);
}

inline ReductionReport reduce_to_masters(const DiffTerm& target, const MarkedBasis& b,
                                         const std::vector<VanishingPattern>& patterns, std::size_t num_functions,
                                         bool factor, PatternTiming timing = PatternTiming::after) {
  ReductionReport rep;
  rep.target = target;
  const DiffPoly nf = reduce_modulo(DiffPoly::term(target), b, patterns, timing);
  rep.constant = nf.constant();
  for (const auto& [t, c] : nf.terms()) rep.combination.emplace_back(t, c);
  std::sort(rep.combination.begin(), rep.combination.end(),
            [&](const auto& x, const auto& y) { return b.ranking().compare(x.first, y.first) > 0; });
  try {
    rep.masters = residue_class_basis(b, patterns, num_functions);
    rep.masters_enumerated = true;
  } catch (const InfiniteResidueBasis&) {
    for (auto it = rep.combination.rbegin(); it != rep.combination.rend(); ++it) rep.masters.push_back(it->first);
  }
  if (factor)
    for (const auto& [t, c] : rep.combination) rep.factored.push_back(factor_output(c));
  return rep;
}

}  // namespace lda
