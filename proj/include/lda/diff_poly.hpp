#pragma once

#include <compare>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "lda/ratfun.hpp"

namespace lda {

// theta^exps applied to function number `func`.
struct DiffTerm {
  std::size_t func = 0;
  Exponents exps;

  int degree() const { return total_degree(exps); }

  friend bool operator==(const DiffTerm& a, const DiffTerm& b) { return a.func == b.func && a.exps == b.exps; }
  friend bool operator<(const DiffTerm& a, const DiffTerm& b) {
    if (a.func != b.func) return a.func < b.func;
    return std::lexicographical_compare(a.exps.begin(), a.exps.end(), b.exps.begin(), b.exps.end());
  }
};

inline DiffTerm shifted(const DiffTerm& t, const Exponents& beta) {
  DiffTerm r = t;
  for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] += beta[i];
  return r;
}

// theta^beta * u == v, same function.
inline bool divides(const DiffTerm& u, const DiffTerm& v) { return u.func == v.func && dominates(v.exps, u.exps); }

inline std::vector<std::int64_t> to_offsets(const Exponents& beta) { return {beta.begin(), beta.end()}; }

// Linear difference polynomial: sum of coeff * theta^mu y^j plus an inhomogeneous constant.
class DiffPoly {
 public:
  using TermMap = std::map<DiffTerm, RatFun>;

  DiffPoly() = default;
  explicit DiffPoly(RatFun constant) : constant_(std::move(constant)) {}

  static DiffPoly term(DiffTerm t, RatFun coeff = RatFun(1)) {
    DiffPoly p;
    p.add(std::move(t), std::move(coeff));
    return p;
  }

  const TermMap& terms() const { return terms_; }
  const RatFun& constant() const { return constant_; }
  bool is_zero() const { return terms_.empty() && constant_.is_zero(); }
  bool has_terms() const { return !terms_.empty(); }

  RatFun coeff(const DiffTerm& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? RatFun(0) : it->second;
  }

  void add(DiffTerm t, const RatFun& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(t), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add_constant(const RatFun& c) { constant_ += c; }
  void set_constant(RatFun c) { constant_ = std::move(c); }
  void erase(const DiffTerm& t) { terms_.erase(t); }

  DiffPoly scaled(const RatFun& c) const {
    DiffPoly r;
    if (c.is_zero()) return r;
    for (const auto& [t, a] : terms_) r.terms_.emplace(t, a * c);
    r.constant_ = constant_ * c;
    return r;
  }

  std::vector<std::size_t> functions() const {
    std::vector<std::size_t> out;
    for (const auto& [t, c] : terms_)
      if (out.empty() || out.back() != t.func) out.push_back(t.func);
    return out;
  }

  int max_degree() const {
    int d = 0;
    for (const auto& [t, c] : terms_) d = std::max(d, t.degree());
    return d;
  }

  friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) {
    for (const auto& [t, c] : b.terms_) a.add(t, c);
    a.constant_ += b.constant_;
    return a;
  }
  friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) {
    for (const auto& [t, c] : b.terms_) a.add(t, -c);
    a.constant_ -= b.constant_;
    return a;
  }
  friend DiffPoly operator*(const RatFun& c, const DiffPoly& p) { return p.scaled(c); }

  bool operator==(const DiffPoly& o) const { return terms_ == o.terms_ && constant_ == o.constant_; }

 private:
  TermMap terms_;
  RatFun constant_;
};

// c1*p1 + c2*p2
inline DiffPoly linear_combine(const RatFun& c1, const DiffPoly& p1, const RatFun& c2, const DiffPoly& p2) {
  return p1.scaled(c1) + p2.scaled(c2);
}

// theta^beta o p: exponents move by beta and coefficients follow the Ore rule
// theta_i a(x) = a(x + e_i) theta_i.
inline DiffPoly apply_shift(const Exponents& beta, const DiffPoly& p) {
  bool trivial = true;
  for (auto b : beta) trivial = trivial && b == 0;
  if (trivial) return p;
  const auto offsets = to_offsets(beta);
  DiffPoly r(p.constant().shifted(offsets));
  for (const auto& [t, c] : p.terms()) r.add(shifted(t, beta), c.shifted(offsets));
  return r;
}

enum class RankingKind { orderly, elimination };

// Total order on difference terms. function_order and variable_order list
// indices heaviest first.
class Ranking {
 public:
  Ranking() = default;
  Ranking(RankingKind kind, std::vector<std::size_t> function_order, std::vector<std::size_t> variable_order)
      : kind_(kind), function_order_(std::move(function_order)), variable_order_(std::move(variable_order)) {
    function_rank_.assign(function_order_.size(), 0);
    std::vector<bool> seen(function_order_.size(), false);
    for (std::size_t i = 0; i < function_order_.size(); ++i) {
      const auto f = function_order_[i];
      if (f >= function_order_.size() || seen[f]) throw ValidationError("function order is not a permutation");
      seen[f] = true;
      function_rank_[f] = i;
    }
    std::vector<bool> vseen(variable_order_.size(), false);
    for (auto v : variable_order_) {
      if (v >= variable_order_.size() || vseen[v]) throw ValidationError("variable order is not a permutation");
      vseen[v] = true;
    }
  }

  static Ranking make(RankingKind kind, std::size_t num_functions, std::size_t num_variables) {
    std::vector<std::size_t> f(num_functions), v(num_variables);
    std::iota(f.begin(), f.end(), 0);
    std::iota(v.begin(), v.end(), 0);
    return Ranking(kind, std::move(f), std::move(v));
  }

  RankingKind kind() const { return kind_; }
  const std::vector<std::size_t>& function_order() const { return function_order_; }
  const std::vector<std::size_t>& variable_order() const { return variable_order_; }
  std::size_t num_variables() const { return variable_order_.size(); }

  int compare(const DiffTerm& u, const DiffTerm& v) const {
    if (kind_ == RankingKind::elimination && u.func != v.func) return compare_functions(u.func, v.func);
    const int du = u.degree(), dv = v.degree();
    if (du != dv) return du < dv ? -1 : 1;
    if (u.func != v.func) return compare_functions(u.func, v.func);
    for (auto i : variable_order_)
      if (u.exps[i] != v.exps[i]) return u.exps[i] < v.exps[i] ? -1 : 1;
    return 0;
  }

  bool operator==(const Ranking& o) const {
    return kind_ == o.kind_ && function_order_ == o.function_order_ && variable_order_ == o.variable_order_;
  }

 private:
  int compare_functions(std::size_t a, std::size_t b) const {
    // Smaller rank is heavier.
    return function_rank_.at(a) < function_rank_.at(b) ? 1 : -1;
  }

  RankingKind kind_ = RankingKind::orderly;
  std::vector<std::size_t> function_order_;
  std::vector<std::size_t> variable_order_;
  std::vector<std::size_t> function_rank_;
};

// Strict "greater" comparator; maps ordered with it iterate from the highest term down.
struct RankGreater {
  const Ranking* ranking;
  bool operator()(const DiffTerm& a, const DiffTerm& b) const { return ranking->compare(a, b) > 0; }
};

inline int compare_terms(const DiffTerm& u, const DiffTerm& v, const Ranking& r) { return r.compare(u, v); }

inline std::pair<DiffTerm, RatFun> leading_term(const DiffPoly& p, const Ranking& r) {
  if (!p.has_terms()) throw NoLeadingTerm();
  auto best = p.terms().begin();
  for (auto it = std::next(best); it != p.terms().end(); ++it)
    if (r.compare(it->first, best->first) > 0) best = it;
  return *best;
}

inline DiffPoly make_monic(const DiffPoly& p, const Ranking& r) {
  const auto [lt, lc] = leading_term(p, r);
  if (lc.is_one()) return p;
  return p.scaled(lc.inverse());
}

}  // namespace lda
