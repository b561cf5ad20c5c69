#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lda/diff_poly.hpp"

namespace lda {

// A monic basis element together with its Janet-multiplicative shift operators.
struct MarkedElement {
  DiffPoly poly;
  DiffTerm lead;
  std::vector<bool> multiplicative;  // indexed by variable

  bool is_multiplicative(std::size_t var) const { return multiplicative[var]; }
};

// For each leading term, which theta_i are Janet-multiplicative. Variables are
// visited in `variable_order`; groups are formed per function.
inline std::vector<std::vector<bool>> janet_partition(std::span<const DiffTerm> leads,
                                                      const std::vector<std::size_t>& variable_order) {
  const std::size_t n = variable_order.size();
  std::vector<std::vector<bool>> marks(leads.size(), std::vector<bool>(n, false));
  for (std::size_t a = 0; a < leads.size(); ++a) {
    const DiffTerm& u = leads[a];
    for (std::size_t p = 0; p < n; ++p) {
      const std::size_t var = variable_order[p];
      int max_deg = u.exps[var];
      for (const DiffTerm& v : leads) {
        if (v.func != u.func) continue;
        bool same_group = true;
        for (std::size_t q = 0; q < p && same_group; ++q)
          same_group = v.exps[variable_order[q]] == u.exps[variable_order[q]];
        if (same_group) max_deg = std::max(max_deg, static_cast<int>(v.exps[var]));
      }
      marks[a][var] = u.exps[var] == max_deg;
    }
  }
  return marks;
}

inline void remark(std::vector<MarkedElement>& elems, const Ranking& r) {
  std::vector<DiffTerm> leads;
  leads.reserve(elems.size());
  for (const auto& e : elems) leads.push_back(e.lead);
  auto marks = janet_partition(leads, r.variable_order());
  for (std::size_t i = 0; i < elems.size(); ++i) elems[i].multiplicative = std::move(marks[i]);
}

class MarkedBasis {
 public:
  MarkedBasis() = default;

  // Normalizes each polynomial and computes the Janet marking. Leading terms must be distinct.
  MarkedBasis(const std::vector<DiffPoly>& polys, Ranking ranking) : ranking_(std::move(ranking)) {
    for (const auto& p : polys) {
      if (p.is_zero()) continue;
      DiffPoly m = make_monic(p, ranking_);
      DiffTerm lead = leading_term(m, ranking_).first;
      elements_.push_back({std::move(m), std::move(lead), {}});
    }
    finish();
  }

  MarkedBasis(std::vector<MarkedElement> elements, Ranking ranking)
      : ranking_(std::move(ranking)), elements_(std::move(elements)) {
    finish();
  }

  const std::vector<MarkedElement>& elements() const { return elements_; }
  const Ranking& ranking() const { return ranking_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }

  std::vector<DiffPoly> polys() const {
    std::vector<DiffPoly> out;
    for (const auto& e : elements_) out.push_back(e.poly);
    return out;
  }

  std::vector<DiffTerm> leads() const {
    std::vector<DiffTerm> out;
    for (const auto& e : elements_) out.push_back(e.lead);
    return out;
  }

 private:
  void finish() {
    std::sort(elements_.begin(), elements_.end(),
              [&](const MarkedElement& a, const MarkedElement& b) { return ranking_.compare(a.lead, b.lead) < 0; });
    for (std::size_t i = 1; i < elements_.size(); ++i)
      if (elements_[i].lead == elements_[i - 1].lead) throw ValidationError("basis leading terms are not distinct");
    remark(elements_, ranking_);
  }

  Ranking ranking_;
  std::vector<MarkedElement> elements_;
};

struct Divisor {
  std::size_t index;
  Exponents beta;
};

inline std::optional<Divisor> find_j_divisor(const DiffTerm& u, std::span<const MarkedElement> elems) {
  for (std::size_t k = 0; k < elems.size(); ++k) {
    const auto& g = elems[k];
    if (!divides(g.lead, u)) continue;
    Exponents beta(u.exps.size());
    bool ok = true;
    for (std::size_t i = 0; i < beta.size() && ok; ++i) {
      beta[i] = u.exps[i] - g.lead.exps[i];
      ok = beta[i] == 0 || g.multiplicative[i];
    }
    if (ok) return Divisor{k, std::move(beta)};
  }
  return std::nullopt;
}

inline std::optional<Divisor> find_j_divisor(const DiffTerm& u, const MarkedBasis& b) {
  return find_j_divisor(u, std::span<const MarkedElement>(b.elements()));
}

inline std::optional<Divisor> find_groebner_divisor(const DiffTerm& u, std::span<const MarkedElement> elems) {
  for (std::size_t k = 0; k < elems.size(); ++k) {
    const auto& g = elems[k];
    if (!divides(g.lead, u)) continue;
    Exponents beta(u.exps.size());
    for (std::size_t i = 0; i < beta.size(); ++i) beta[i] = u.exps[i] - g.lead.exps[i];
    return Divisor{k, std::move(beta)};
  }
  return std::nullopt;
}

using TermFilter = std::function<bool(const DiffTerm&)>;

namespace detail {

// Full reduction, always the currently highest reducible term first. Terms
// accepted by `vanishes` are deleted on sight. The constant is never a target.
template <class FindDivisor>
DiffPoly reduce(const DiffPoly& h, std::span<const MarkedElement> elems, const Ranking& r, FindDivisor find,
                const TermFilter& vanishes = {}) {
  std::map<DiffTerm, RatFun, RankGreater> work(RankGreater{&r});
  for (const auto& [t, c] : h.terms())
    if (!vanishes || !vanishes(t)) work.emplace(t, c);
  RatFun constant = h.constant();
  std::map<std::pair<std::size_t, std::vector<std::int32_t>>, DiffPoly> shifts;

  auto it = work.begin();
  while (it != work.end()) {
    auto div = find(it->first, elems);
    if (!div) {
      ++it;
      continue;
    }
    const DiffTerm u = it->first;
    const RatFun c = it->second;
    work.erase(it);
    auto key = std::pair{div->index, std::vector<std::int32_t>(div->beta.begin(), div->beta.end())};
    auto sit = shifts.find(key);
    if (sit == shifts.end()) sit = shifts.emplace(std::move(key), apply_shift(div->beta, elems[div->index].poly)).first;
    const DiffPoly& s = sit->second;
    const RatFun lc = s.coeff(u);
    const RatFun factor = lc.is_one() ? c : c / lc;
    for (const auto& [t, a] : s.terms()) {
      if (t == u || (vanishes && vanishes(t))) continue;
      auto [wit, inserted] = work.try_emplace(t, RatFun(0));
      wit->second -= factor * a;
      if (wit->second.is_zero()) work.erase(wit);
    }
    if (!s.constant().is_zero()) constant -= factor * s.constant();
    it = work.upper_bound(u);
  }

  DiffPoly out(constant);
  for (auto& [t, c] : work) out.add(t, c);
  return out;
}

}  // namespace detail

inline DiffPoly j_normal_form(const DiffPoly& h, std::span<const MarkedElement> elems, const Ranking& r,
                              const TermFilter& vanishes = {}) {
  return detail::reduce(
      h, elems, r, [](const DiffTerm& u, std::span<const MarkedElement> e) { return find_j_divisor(u, e); },
      vanishes);
}

inline DiffPoly j_normal_form(const DiffPoly& h, const MarkedBasis& b, const TermFilter& vanishes = {}) {
  return j_normal_form(h, b.elements(), b.ranking(), vanishes);
}

inline DiffPoly groebner_normal_form(const DiffPoly& h, std::span<const MarkedElement> elems, const Ranking& r) {
  return detail::reduce(h, elems, r, [](const DiffTerm& u, std::span<const MarkedElement> e) {
    return find_groebner_divisor(u, e);
  });
}

inline DiffPoly groebner_normal_form(const DiffPoly& h, const MarkedBasis& b) {
  return groebner_normal_form(h, b.elements(), b.ranking());
}

inline Exponents unit_vector(std::size_t n, std::size_t i) {
  Exponents e(n, 0);
  e[i] = 1;
  return e;
}

// Every nonmultiplicative prolongation J-reduces to zero.
inline bool check_janet_basis(const MarkedBasis& b) {
  const std::size_t n = b.ranking().num_variables();
  for (const auto& g : b.elements())
    for (std::size_t i = 0; i < n; ++i) {
      if (g.multiplicative[i]) continue;
      if (!j_normal_form(apply_shift(unit_vector(n, i), g.poly), b).is_zero()) return false;
    }
  return true;
}

struct CompletionOptions {
  std::size_t max_steps = 200000;
};

struct CompletionStats {
  std::size_t reductions = 0;
  std::size_t insertions = 0;
};

// Minimal normalized Janet basis of the module generated by `input`.
inline MarkedBasis janet_basis(const std::vector<DiffPoly>& input, const Ranking& r, CompletionOptions opts = {},
                               CompletionStats* stats = nullptr) {
  const std::size_t n = r.num_variables();
  struct Item {
    DiffPoly poly;
    DiffTerm lead;
    std::uint64_t seq;
  };
  std::vector<Item> queue;
  std::uint64_t seq = 0;
  auto push = [&](DiffPoly p) {
    if (p.is_zero()) return;
    if (!p.has_terms()) throw InconsistentSystem();
    DiffTerm lead = leading_term(p, r).first;
    queue.push_back({std::move(p), std::move(lead), seq++});
  };
  auto pop_lowest = [&]() {
    auto best = queue.begin();
    for (auto it = queue.begin(); it != queue.end(); ++it) {
      const int c = r.compare(it->lead, best->lead);
      if (c < 0 || (c == 0 && it->seq < best->seq)) best = it;
    }
    Item item = std::move(*best);
    queue.erase(best);
    return item;
  };

  for (const auto& f : input) push(f);
  if (queue.empty()) return MarkedBasis(std::vector<MarkedElement>{}, r);

  std::vector<MarkedElement> elems;
  std::vector<std::vector<bool>> prolonged;
  auto insert = [&](DiffPoly h) {
    h = make_monic(h, r);
    DiffTerm lead = leading_term(h, r).first;
    for (std::size_t k = elems.size(); k-- > 0;) {
      if (elems[k].lead != lead && divides(lead, elems[k].lead)) {
        push(std::move(elems[k].poly));
        elems.erase(elems.begin() + static_cast<std::ptrdiff_t>(k));
        prolonged.erase(prolonged.begin() + static_cast<std::ptrdiff_t>(k));
      }
    }
    elems.push_back({std::move(h), std::move(lead), {}});
    prolonged.emplace_back(n, false);
    remark(elems, r);
    for (std::size_t k = 0; k < elems.size(); ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (!elems[k].multiplicative[i] && !prolonged[k][i]) {
          prolonged[k][i] = true;
          push(apply_shift(unit_vector(n, i), elems[k].poly));
        }
    if (stats) ++stats->insertions;
  };

  insert(pop_lowest().poly);
  std::size_t steps = 0;
  while (true) {
    while (!queue.empty()) {
      if (++steps > opts.max_steps)
        throw CompletionLimitExceeded("Janet completion exceeded " + std::to_string(opts.max_steps) + " steps");
      Item p = pop_lowest();
      DiffPoly h = j_normal_form(p.poly, elems, r);
      if (stats) ++stats->reductions;
      if (h.is_zero()) continue;
      if (!h.has_terms()) throw InconsistentSystem();
      insert(std::move(h));
    }
    // Replay the characterization; anything left over goes back into the queue.
    for (const auto& g : elems)
      for (std::size_t i = 0; i < n; ++i)
        if (!g.multiplicative[i]) {
          DiffPoly s = apply_shift(unit_vector(n, i), g.poly);
          if (!j_normal_form(s, elems, r).is_zero()) push(std::move(s));
        }
    if (queue.empty()) break;
  }

  // Tail reduction makes the element for each leading term unique.
  for (auto& g : elems) {
    DiffPoly tail = g.poly;
    tail.erase(g.lead);
    DiffPoly reduced = j_normal_form(tail, elems, r);
    reduced.add(g.lead, RatFun(1));
    g.poly = std::move(reduced);
  }
  return MarkedBasis(std::move(elems), r);
}

// Minimal elements, each tail-reduced modulo the others.
inline std::vector<DiffPoly> reduced_groebner_basis(const MarkedBasis& b) {
  std::vector<MarkedElement> kept;
  for (const auto& g : b.elements()) {
    bool redundant = false;
    for (const auto& o : b.elements())
      if (o.lead != g.lead && divides(o.lead, g.lead)) redundant = true;
    if (!redundant) kept.push_back(g);
  }
  std::vector<DiffPoly> out;
  for (const auto& g : kept) {
    DiffPoly tail = g.poly;
    tail.erase(g.lead);
    DiffPoly reduced = groebner_normal_form(tail, kept, b.ranking());
    reduced.add(g.lead, RatFun(1));
    out.push_back(std::move(reduced));
  }
  return out;
}

}  // namespace lda
