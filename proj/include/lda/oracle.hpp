#pragma once

#include <map>
#include <vector>

#include "lda/janet.hpp"

namespace lda {

namespace detail {

inline void for_each_multiindex(std::size_t n, int max_degree, const std::function<void(const Exponents&)>& fn) {
  Exponents e(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == n) {
      fn(e);
      return;
    }
    for (int d = 0; d <= left; ++d) {
      e[i] = d;
      rec(i + 1, left - d);
    }
    e[i] = 0;
  };
  rec(0, max_degree);
}

inline std::size_t coefficient_size(const DiffPoly& p) {
  std::size_t s = p.constant().size();
  for (const auto& [t, c] : p.terms()) s += c.size();
  return s;
}

}  // namespace detail

// Row-echelon form of all shifts theta^alpha o f, |alpha| <= D, with columns in
// ranking order. Deliberately naive: it shares no code path with Janet
// completion beyond the field arithmetic and the shift action.
class ProlongationMatrix {
 public:
  ProlongationMatrix(const std::vector<DiffPoly>& F, const Ranking& r, int D, const TermFilter& deleted = {})
      : ranking_(r), deleted_(deleted), degree_bound_(D), pivots_(RankGreater{&ranking_}) {
    for (const auto& f : F) max_input_degree_ = std::max(max_input_degree_, f.max_degree());
    detail::for_each_multiindex(r.num_variables(), D, [&](const Exponents& alpha) {
      for (const auto& f : F) insert(apply_shift(alpha, f));
    });
  }

  int degree_bound() const { return degree_bound_; }
  std::size_t rank() const { return pivots_.size() + (unit_ ? 1 : 0); }

  // True when some combination of rows is a nonzero constant.
  bool contains_unit() const { return unit_; }

  // Largest exponent degree any row can reach.
  int column_degree() const { return degree_bound_ + max_input_degree_; }

  DiffPoly normal_form(const DiffPoly& h) const {
    Row row = to_row(h);
    for (auto it = row.terms.begin(); it != row.terms.end();) {
      auto pit = pivots_.find(it->first);
      if (pit == pivots_.end()) {
        ++it;
        continue;
      }
      const DiffTerm u = it->first;
      const RatFun c = it->second;
      subtract(row, c, pit->second);
      it = row.terms.upper_bound(u);
    }
    DiffPoly out(unit_ ? RatFun(0) : row.constant);
    for (auto& [t, c] : row.terms) out.add(t, c);
    return out;
  }

  bool contains(const DiffPoly& h) const { return normal_form(h).is_zero(); }

 private:
  struct Row {
    std::map<DiffTerm, RatFun, RankGreater> terms;
    RatFun constant;
  };

  Row to_row(const DiffPoly& p) const {
    Row row{std::map<DiffTerm, RatFun, RankGreater>(RankGreater{&ranking_}), p.constant()};
    for (const auto& [t, c] : p.terms())
      if (!deleted_ || !deleted_(t)) row.terms.emplace(t, c);
    return row;
  }

  static void subtract(Row& row, const RatFun& c, const Row& pivot) {
    for (const auto& [t, a] : pivot.terms) {
      auto [it, inserted] = row.terms.try_emplace(t, RatFun(0));
      it->second -= c * a;
      if (it->second.is_zero()) row.terms.erase(it);
    }
    row.constant -= c * pivot.constant;
  }

  static std::size_t size(const Row& row) {
    std::size_t s = row.constant.size();
    for (const auto& [t, c] : row.terms) s += c.size();
    return s;
  }

  static void make_monic(Row& row) {
    const RatFun inv = row.terms.begin()->second.inverse();
    if (inv.is_one()) return;
    for (auto& [t, c] : row.terms) c *= inv;
    row.constant *= inv;
  }

  void insert(const DiffPoly& p) {
    Row row = to_row(p);
    while (!row.terms.empty()) {
      make_monic(row);
      auto pit = pivots_.find(row.terms.begin()->first);
      if (pit == pivots_.end()) {
        const DiffTerm lead = row.terms.begin()->first;
        pivots_.emplace(lead, std::move(row));
        return;
      }
      // Keep the smaller of the two rows as the pivot.
      if (size(row) < size(pit->second)) std::swap(row, pit->second);
      subtract(row, RatFun(1), pit->second);
    }
    if (!row.constant.is_zero()) unit_ = true;
  }

  Ranking ranking_;
  TermFilter deleted_;
  int degree_bound_;
  int max_input_degree_ = 0;
  std::map<DiffTerm, Row, RankGreater> pivots_;
  bool unit_ = false;
};

struct OracleResult {
  DiffPoly normal_form;
  // The normal form changed between D and D+1, or h lies outside the column range.
  bool degree_bound_too_small = false;
};

inline int default_degree_bound(const std::vector<DiffPoly>& F, const DiffPoly& h) {
  int d = h.max_degree();
  for (const auto& f : F) d = std::max(d, f.max_degree());
  return d + 2;
}

inline OracleResult oracle_normal_form(const DiffPoly& h, const std::vector<DiffPoly>& F, const Ranking& r, int D,
                                       const TermFilter& deleted = {}) {
  ProlongationMatrix m(F, r, D, deleted);
  ProlongationMatrix m1(F, r, D + 1, deleted);
  OracleResult out{m.normal_form(h), false};
  out.degree_bound_too_small = h.max_degree() > m.column_degree() || !(out.normal_form == m1.normal_form(h));
  return out;
}

inline OracleResult oracle_normal_form(const DiffPoly& h, const std::vector<DiffPoly>& F, const Ranking& r) {
  return oracle_normal_form(h, F, r, default_degree_bound(F, h));
}

}  // namespace lda
