#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <boost/container/small_vector.hpp>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lda/errors.hpp"

namespace lda {

using Integer = mpz_class;
using Exponents = boost::container::small_vector<std::int32_t, 8>;

inline int total_degree(const Exponents& e) {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

// Graded lexicographic order with symbol 0 heaviest. Returns <0, 0, >0.
inline int grlex_compare(const Exponents& a, const Exponents& b) {
  const int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

inline bool dominates(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < b[i]) return false;
  return true;
}

// Sparse multivariate polynomial over the integers. Terms are kept strictly
// descending in grlex order with nonzero coefficients.
class MultiPoly {
 public:
  struct Term {
    Exponents exps;
    Integer coeff;
  };

  MultiPoly() = default;
  explicit MultiPoly(std::size_t arity) : arity_(arity) {}

  static MultiPoly constant(std::size_t arity, const Integer& c) {
    MultiPoly p(arity);
    if (c != 0) p.terms_.push_back({Exponents(arity, 0), c});
    return p;
  }

  static MultiPoly variable(std::size_t arity, std::size_t index, int power = 1) {
    if (index >= arity) throw std::out_of_range("MultiPoly::variable index");
    MultiPoly p(arity);
    Exponents e(arity, 0);
    e[index] = power;
    p.terms_.push_back({std::move(e), Integer(1)});
    return p;
  }

  static MultiPoly monomial(Exponents exps, const Integer& c) {
    MultiPoly p(exps.size());
    if (c != 0) p.terms_.push_back({std::move(exps), c});
    return p;
  }

  // Merges like terms, drops zeros and sorts.
  static MultiPoly from_terms(std::size_t arity, std::vector<Term> raw) {
    for (const auto& t : raw)
      if (t.exps.size() != arity) throw std::invalid_argument("MultiPoly: exponent arity mismatch");
    std::sort(raw.begin(), raw.end(),
              [](const Term& a, const Term& b) { return grlex_compare(a.exps, b.exps) > 0; });
    MultiPoly p(arity);
    for (auto& t : raw) {
      if (!p.terms_.empty() && p.terms_.back().exps == t.exps) {
        p.terms_.back().coeff += t.coeff;
      } else {
        if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
        p.terms_.push_back(std::move(t));
      }
    }
    if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
    return p;
  }

  std::size_t arity() const { return arity_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && lda::total_degree(terms_[0].exps) == 0); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const { return is_constant() && !terms_.empty() && terms_[0].coeff == 1; }

  Integer constant_value() const { return is_zero() ? Integer(0) : (is_constant() ? terms_[0].coeff : Integer(0)); }

  const Term& leading() const { return terms_.front(); }
  const Integer& leading_coeff() const { return terms_.front().coeff; }

  int degree_in(std::size_t index) const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.exps[index]));
    return d;
  }

  int total_degree() const { return terms_.empty() ? 0 : lda::total_degree(terms_.front().exps); }

  bool contains(std::size_t index) const {
    for (const auto& t : terms_)
      if (t.exps[index] != 0) return true;
    return false;
  }

  Exponents min_exponents() const {
    Exponents m(arity_, 0);
    if (terms_.empty()) return m;
    m = terms_.front().exps;
    for (const auto& t : terms_)
      for (std::size_t i = 0; i < arity_; ++i) m[i] = std::min(m[i], t.exps[i]);
    return m;
  }

  Integer content() const {
    Integer g = 0;
    for (const auto& t : terms_) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
      if (g == 1) break;
    }
    return g;
  }

  // Widens an arity-0 constant to the requested arity.
  MultiPoly promoted(std::size_t arity) const {
    if (arity == arity_) return *this;
    if (arity_ != 0) throw std::invalid_argument("MultiPoly: arity mismatch");
    return constant(arity, constant_value());
  }

  bool operator==(const MultiPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    if (terms_.empty()) return true;
    if (arity_ != o.arity_) return promoted(common_arity(*this, o)) == o.promoted(common_arity(*this, o));
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (terms_[i].coeff != o.terms_[i].coeff || terms_[i].exps != o.terms_[i].exps) return false;
    return true;
  }

  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return add(a, b, false); }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return add(a, b, true); }

  friend MultiPoly operator*(const MultiPoly& a, const Integer& c) {
    if (c == 0) return MultiPoly(a.arity_);
    MultiPoly r = a;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    const std::size_t n = common_arity(a, b);
    if (a.is_zero() || b.is_zero()) return MultiPoly(n);
    if (a.is_constant()) return b.promoted(n) * a.leading_coeff();
    if (b.is_constant()) return a.promoted(n) * b.leading_coeff();
    if (a.is_monomial()) return b.times_monomial(a.terms_[0].exps, a.terms_[0].coeff);
    if (b.is_monomial()) return a.times_monomial(b.terms_[0].exps, b.terms_[0].coeff);
    std::vector<Term> raw;
    raw.reserve(a.size() * b.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) {
        Exponents e(n);
        for (std::size_t i = 0; i < n; ++i) e[i] = s.exps[i] + t.exps[i];
        raw.push_back({std::move(e), s.coeff * t.coeff});
      }
    return from_terms(n, std::move(raw));
  }

  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  MultiPoly times_monomial(const Exponents& e, const Integer& c) const {
    if (c == 0) return MultiPoly(arity_);
    MultiPoly r = *this;
    for (auto& t : r.terms_) {
      for (std::size_t i = 0; i < arity_; ++i) t.exps[i] += e[i];
      t.coeff *= c;
    }
    return r;
  }

  MultiPoly pow(unsigned e) const {
    MultiPoly result = constant(arity_, 1), base = *this;
    while (e) {
      if (e & 1u) result *= base;
      e >>= 1u;
      if (e) base *= base;
    }
    return result;
  }

  // Integer division of every coefficient; the caller guarantees exactness.
  MultiPoly divexact(const Integer& c) const {
    MultiPoly r = *this;
    for (auto& t : r.terms_) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
    return r;
  }

  MultiPoly derivative(std::size_t index) const {
    std::vector<Term> raw;
    for (const auto& t : terms_) {
      if (t.exps[index] == 0) continue;
      Term d = t;
      d.coeff *= t.exps[index];
      d.exps[index] -= 1;
      raw.push_back(std::move(d));
    }
    return from_terms(arity_, std::move(raw));
  }

  // Coefficients with respect to one symbol, indexed by degree. The returned
  // polynomials keep full arity with that symbol's exponent cleared.
  std::vector<MultiPoly> coefficients_in(std::size_t index) const {
    std::vector<std::vector<Term>> buckets(degree_in(index) + 1);
    for (const auto& t : terms_) {
      Term c = t;
      const int d = c.exps[index];
      c.exps[index] = 0;
      buckets[d].push_back(std::move(c));
    }
    std::vector<MultiPoly> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) out.push_back(from_terms(arity_, std::move(b)));
    return out;
  }

  MultiPoly leading_coeff_in(std::size_t index) const {
    const int d = degree_in(index);
    std::vector<Term> raw;
    for (const auto& t : terms_)
      if (t.exps[index] == d) {
        Term c = t;
        c.exps[index] = 0;
        raw.push_back(std::move(c));
      }
    return from_terms(arity_, std::move(raw));
  }

  // Substitutes x_i -> x_i + offsets[i] for every i < offsets.size().
  MultiPoly shifted(std::span<const std::int64_t> offsets) const {
    MultiPoly cur = *this;
    for (std::size_t i = 0; i < offsets.size() && i < arity_; ++i) {
      if (offsets[i] == 0 || !cur.contains(i)) continue;
      const Integer mu = static_cast<long>(offsets[i]);
      std::vector<Term> raw;
      for (const auto& t : cur.terms_) {
        const int e = t.exps[i];
        // (x + mu)^e = sum_j binom(e, j) mu^(e-j) x^j
        Integer binom = 1, mupow = 1;
        std::vector<Integer> mu_pows(e + 1);
        for (int j = 0; j <= e; ++j) {
          mu_pows[j] = mupow;
          mupow *= mu;
        }
        for (int j = e; j >= 0; --j) {
          Term s = t;
          s.exps[i] = j;
          s.coeff *= binom * mu_pows[e - j];
          raw.push_back(std::move(s));
          if (j > 0) {
            binom *= j;
            mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(e - j + 1));
          }
        }
      }
      cur = from_terms(arity_, std::move(raw));
    }
    return cur;
  }

  static std::size_t common_arity(const MultiPoly& a, const MultiPoly& b) {
    if (a.arity_ == b.arity_) return a.arity_;
    if (a.arity_ == 0) return b.arity_;
    if (b.arity_ == 0) return a.arity_;
    throw std::invalid_argument("MultiPoly: arity mismatch");
  }

 private:
  static MultiPoly add(const MultiPoly& a0, const MultiPoly& b0, bool subtract) {
    const std::size_t n = common_arity(a0, b0);
    const MultiPoly& a = a0.arity_ == n ? a0 : a0.promoted(n);
    const MultiPoly b = b0.arity_ == n ? b0 : b0.promoted(n);
    MultiPoly r(n);
    r.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      int c;
      if (i == a.size()) c = -1;
      else if (j == b.size()) c = 1;
      else c = grlex_compare(a.terms_[i].exps, b.terms_[j].exps);
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        Term t = b.terms_[j++];
        if (subtract) t.coeff = -t.coeff;
        r.terms_.push_back(std::move(t));
      } else {
        Integer s = subtract ? Integer(a.terms_[i].coeff - b.terms_[j].coeff)
                             : Integer(a.terms_[i].coeff + b.terms_[j].coeff);
        if (s != 0) r.terms_.push_back({a.terms_[i].exps, std::move(s)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::size_t arity_ = 0;
  std::vector<Term> terms_;
};

// Polynomial with positive leading coefficient plus the sign that was removed.
struct SignedPoly {
  int unit = 1;
  MultiPoly poly;
};

inline SignedPoly poly_normalize(std::size_t arity, std::vector<MultiPoly::Term> raw) {
  MultiPoly p = MultiPoly::from_terms(arity, std::move(raw));
  if (!p.is_zero() && p.leading_coeff() < 0) return {-1, -p};
  return {1, std::move(p)};
}

inline MultiPoly positive(const MultiPoly& p) {
  return (!p.is_zero() && p.leading_coeff() < 0) ? -p : p;
}

// Exact quotient p / d if d divides p over the integers.
inline std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& d) {
  if (d.is_zero()) throw DivisionByZero();
  const std::size_t n = MultiPoly::common_arity(p, d);
  if (p.is_zero()) return MultiPoly(n);
  if (d.is_constant()) {
    const Integer& c = d.leading_coeff();
    for (const auto& t : p.terms())
      if (!mpz_divisible_p(t.coeff.get_mpz_t(), c.get_mpz_t())) return std::nullopt;
    return p.promoted(n).divexact(c);
  }
  if (d.is_monomial()) {
    const auto& dt = d.leading();
    std::vector<MultiPoly::Term> raw;
    for (const auto& t : p.terms()) {
      if (!dominates(t.exps, dt.exps) || !mpz_divisible_p(t.coeff.get_mpz_t(), dt.coeff.get_mpz_t()))
        return std::nullopt;
      MultiPoly::Term q = t;
      for (std::size_t i = 0; i < n; ++i) q.exps[i] -= dt.exps[i];
      mpz_divexact(q.coeff.get_mpz_t(), q.coeff.get_mpz_t(), dt.coeff.get_mpz_t());
      raw.push_back(std::move(q));
    }
    return MultiPoly::from_terms(n, std::move(raw));
  }
  if (p.total_degree() < d.total_degree() || p.size() < 1) return std::nullopt;
  const auto& lt = d.leading();
  std::vector<MultiPoly::Term> quotient;
  MultiPoly r = p.promoted(n);
  while (!r.is_zero()) {
    const auto& rt = r.leading();
    if (!dominates(rt.exps, lt.exps) || !mpz_divisible_p(rt.coeff.get_mpz_t(), lt.coeff.get_mpz_t()))
      return std::nullopt;
    Exponents e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = rt.exps[i] - lt.exps[i];
    Integer c;
    mpz_divexact(c.get_mpz_t(), rt.coeff.get_mpz_t(), lt.coeff.get_mpz_t());
    r -= d.times_monomial(e, c);
    quotient.push_back({std::move(e), std::move(c)});
  }
  return MultiPoly::from_terms(n, std::move(quotient));
}

inline MultiPoly divide_exact_or_throw(const MultiPoly& p, const MultiPoly& d) {
  auto q = divide_exact(p, d);
  if (!q) throw std::logic_error("inexact polynomial division");
  return std::move(*q);
}

namespace detail {

// Pseudo-remainder of a by b, both viewed as univariate in symbol v.
inline MultiPoly pseudo_remainder(MultiPoly a, const MultiPoly& b, std::size_t v) {
  const int db = b.degree_in(v);
  const MultiPoly lcb = b.leading_coeff_in(v);
  while (!a.is_zero() && a.contains(v) && a.degree_in(v) >= db) {
    const int da = a.degree_in(v);
    MultiPoly lca = a.leading_coeff_in(v);
    Exponents shift(a.arity(), 0);
    shift[v] = da - db;
    a = a * lcb - (lca * b).times_monomial(shift, 1);
  }
  if (!a.is_zero() && db == 0) return MultiPoly(a.arity());
  return a;
}

}  // namespace detail

inline MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

// gcd of the coefficients of p viewed as univariate in symbol v.
inline MultiPoly content_in(const MultiPoly& p, std::size_t v) {
  auto coeffs = p.coefficients_in(v);
  std::sort(coeffs.begin(), coeffs.end(), [](const MultiPoly& x, const MultiPoly& y) { return x.size() < y.size(); });
  MultiPoly g(p.arity());
  for (const auto& c : coeffs) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

inline MultiPoly primitive_part_in(const MultiPoly& p, std::size_t v) {
  if (p.is_zero()) return p;
  return positive(divide_exact_or_throw(p, content_in(p, v)));
}

namespace detail {

// Heuristic gcd of two primitive polynomials in the single symbol v: evaluate
// at a large integer, take the integer gcd and read the candidate back off its
// balanced base-xi digits. Accepted only if it divides both inputs.
inline std::optional<MultiPoly> heuristic_gcd_univariate(const MultiPoly& a, const MultiPoly& b, std::size_t v) {
  const std::size_t n = a.arity();
  auto dense = [v](const MultiPoly& p) {
    std::vector<Integer> c(static_cast<std::size_t>(p.degree_in(v)) + 1);
    for (const auto& t : p.terms()) c[static_cast<std::size_t>(t.exps[v])] = t.coeff;
    return c;
  };
  auto max_norm = [](const std::vector<Integer>& c) {
    Integer m = 0;
    for (const auto& x : c)
      if (abs(x) > m) m = abs(x);
    return m;
  };
  auto eval = [](const std::vector<Integer>& c, const Integer& x) {
    Integer r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
    return r;
  };
  const std::vector<Integer> da = dense(a), db = dense(b);
  Integer xi = 2 * std::min(max_norm(da), max_norm(db)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    Integer g;
    const Integer ea = eval(da, xi), eb = eval(db, xi);
    mpz_gcd(g.get_mpz_t(), ea.get_mpz_t(), eb.get_mpz_t());
    std::vector<MultiPoly::Term> raw;
    const Integer half = xi / 2;
    for (int e = 0; g != 0; ++e) {
      Integer digit;
      mpz_fdiv_r(digit.get_mpz_t(), g.get_mpz_t(), xi.get_mpz_t());
      if (digit > half) digit -= xi;
      if (digit != 0) {
        Exponents ex(n, 0);
        ex[v] = e;
        raw.push_back({std::move(ex), digit});
      }
      g = (g - digit) / xi;
    }
    MultiPoly cand = MultiPoly::from_terms(n, std::move(raw));
    if (!cand.is_zero()) {
      cand = positive(cand.divexact(cand.content()));
      if (divide_exact(a, cand) && divide_exact(b, cand)) return cand;
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

// gcd of two integer-primitive polynomials without monomial factors.
inline MultiPoly gcd_core(const MultiPoly& a, const MultiPoly& b) {
  const std::size_t n = a.arity();
  if (a.is_constant() || b.is_constant()) return MultiPoly::constant(n, 1);
  if (positive(a) == positive(b)) return positive(a);
  const MultiPoly& small = a.size() <= b.size() ? a : b;
  const MultiPoly& large = a.size() <= b.size() ? b : a;
  if (divide_exact(large, small)) return positive(small);

  for (std::size_t v = 0; v < n; ++v) {
    const bool in_a = a.contains(v), in_b = b.contains(v);
    if (in_a && !in_b) return gcd(content_in(a, v), b);
    if (in_b && !in_a) return gcd(a, content_in(b, v));
  }
  // Both contain exactly the same symbols; recurse over the last one.
  std::size_t v = n;
  while (v-- > 0)
    if (a.contains(v)) break;

  bool univariate = true;
  for (std::size_t w = 0; w < n; ++w) univariate = univariate && (w == v || !a.contains(w));
  if (univariate)
    if (auto g = heuristic_gcd_univariate(a, b, v)) return *g;

  const MultiPoly ca = content_in(a, v), cb = content_in(b, v);
  const MultiPoly c = gcd(ca, cb);
  MultiPoly p = divide_exact_or_throw(a, ca), q = divide_exact_or_throw(b, cb);
  if (p.degree_in(v) < q.degree_in(v)) std::swap(p, q);
  MultiPoly g;
  while (true) {
    MultiPoly r = pseudo_remainder(p, q, v);
    if (r.is_zero()) {
      g = q;
      break;
    }
    if (!r.contains(v)) {
      g = MultiPoly::constant(n, 1);
      break;
    }
    p = std::move(q);
    q = primitive_part_in(r, v);
  }
  return positive(c * primitive_part_in(g, v));
}

}  // namespace detail

// Greatest common divisor with positive leading coefficient; gcd(p, 0) = +-p.
inline MultiPoly gcd(const MultiPoly& a0, const MultiPoly& b0) {
  const std::size_t n = MultiPoly::common_arity(a0, b0);
  const MultiPoly a = a0.promoted(n), b = b0.promoted(n);
  if (a.is_zero()) return positive(b);
  if (b.is_zero()) return positive(a);
  Integer ca = a.content(), cb = b.content(), ci;
  mpz_gcd(ci.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  if (a.is_constant() || b.is_constant()) return MultiPoly::constant(n, ci);

  MultiPoly pa = a.divexact(ca), pb = b.divexact(cb);
  Exponents ma = pa.min_exponents(), mb = pb.min_exponents(), mg(n);
  bool has_monomial = false;
  for (std::size_t i = 0; i < n; ++i) {
    mg[i] = std::min(ma[i], mb[i]);
    has_monomial = has_monomial || ma[i] || mb[i];
  }
  if (has_monomial) {
    pa = divide_exact_or_throw(pa, MultiPoly::monomial(ma, 1));
    pb = divide_exact_or_throw(pb, MultiPoly::monomial(mb, 1));
  }
  MultiPoly core = detail::gcd_core(pa, pb);
  return positive(core.times_monomial(mg, ci));
}

}  // namespace lda
