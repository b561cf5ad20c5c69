#pragma once

#include <map>
#include <span>
#include <utility>

#include "lda/multipoly.hpp"

namespace lda {

// Element of Q(X u C): coprime numerator and denominator, denominator with
// positive leading coefficient, zero stored as 0/1.
class RatFun {
 public:
  RatFun() : num_(), den_(MultiPoly::constant(0, 1)) {}
  RatFun(long c) : num_(MultiPoly::constant(0, c)), den_(MultiPoly::constant(0, 1)) {}  // NOLINT
  RatFun(const Integer& c) : num_(MultiPoly::constant(0, c)), den_(MultiPoly::constant(0, 1)) {}  // NOLINT
  explicit RatFun(MultiPoly p) : num_(std::move(p)), den_(MultiPoly::constant(num_.arity(), 1)) {}

  RatFun(const MultiPoly& num, const MultiPoly& den) {
    if (den.is_zero()) throw DivisionByZero();
    const std::size_t n = MultiPoly::common_arity(num, den);
    if (num.is_zero()) {
      num_ = MultiPoly(n);
      den_ = MultiPoly::constant(n, 1);
      return;
    }
    if (den.is_constant()) {
      Integer c = num.content(), d = den.constant_value(), g;
      mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
      if (d < 0) g = -g;
      num_ = num.promoted(n).divexact(g);
      den_ = MultiPoly::constant(n, d / g);
      return;
    }
    const MultiPoly g = gcd(num, den);
    num_ = divide_exact_or_throw(num.promoted(n), g);
    den_ = divide_exact_or_throw(den.promoted(n), g);
    fix_sign();
  }

  static RatFun symbol(std::size_t arity, std::size_t index) { return RatFun(MultiPoly::variable(arity, index)); }

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  std::size_t arity() const { return MultiPoly::common_arity(num_, den_); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  // Number of polynomial terms, used as a size measure for pivoting.
  std::size_t size() const { return num_.size() + den_.size(); }

  bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }

  RatFun operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RatFun operator+(const RatFun& a, const RatFun& b) { return add(a, b, false); }
  friend RatFun operator-(const RatFun& a, const RatFun& b) { return add(a, b, true); }

  friend RatFun operator*(const RatFun& a, const RatFun& b) {
    if (a.is_zero() || b.is_zero()) return RatFun(MultiPoly(MultiPoly::common_arity(a.num_, b.num_)));
    if (a.den_.is_one() && b.den_.is_one()) return raw(a.num_ * b.num_, MultiPoly::constant(0, 1));
    const MultiPoly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
    MultiPoly n = divide_exact_or_throw(a.num_, g1) * divide_exact_or_throw(b.num_, g2);
    MultiPoly d = divide_exact_or_throw(a.den_, g2) * divide_exact_or_throw(b.den_, g1);
    return raw(std::move(n), std::move(d));
  }

  friend RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }

  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

  RatFun inverse() const {
    if (is_zero()) throw DivisionByZero();
    return raw(den_, num_);
  }

  RatFun pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    return raw(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
  }

  // x_i -> x_i + offsets[i] for the leading (variable) symbols.
  RatFun shifted(std::span<const std::int64_t> offsets) const {
    bool trivial = true;
    for (auto o : offsets) trivial = trivial && o == 0;
    if (trivial) return *this;
    return raw(num_.shifted(offsets), den_.shifted(offsets));
  }

 private:
  // Assembles an already coprime pair and applies the sign convention.
  static RatFun raw(MultiPoly n, MultiPoly d) {
    RatFun r;
    const std::size_t a = MultiPoly::common_arity(n, d);
    r.num_ = n.promoted(a);
    r.den_ = d.promoted(a);
    if (r.num_.is_zero()) r.den_ = MultiPoly::constant(a, 1);
    r.fix_sign();
    return r;
  }

  void fix_sign() {
    if (den_.leading_coeff() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
  }

  static RatFun add(const RatFun& a, const RatFun& b, bool subtract) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? -b : b;
    const MultiPoly bn = subtract ? -b.num_ : b.num_;
    if (a.den_ == b.den_) return RatFun(a.num_ + bn, a.den_);
    if (a.den_.is_one()) return raw(a.num_ * b.den_ + bn, b.den_);
    if (b.den_.is_one()) return raw(a.num_ + bn * a.den_, a.den_);
    const MultiPoly g = gcd(a.den_, b.den_);
    const MultiPoly ad = divide_exact_or_throw(a.den_, g), bd = divide_exact_or_throw(b.den_, g);
    MultiPoly n = a.num_ * bd + bn * ad;
    if (n.is_zero()) return RatFun(MultiPoly(n.arity()));
    const MultiPoly g2 = gcd(n, g);
    return raw(divide_exact_or_throw(n, g2), ad * divide_exact_or_throw(b.den_, g2));
  }

  MultiPoly num_;
  MultiPoly den_;
};

// Substitutes each bound parameter (by symbol index) with a rational function.
inline RatFun specialize(const MultiPoly& p, const std::map<std::size_t, RatFun>& bindings) {
  if (bindings.empty()) return RatFun(p);
  const std::size_t n = p.arity();
  RatFun acc{MultiPoly(n)};
  std::map<std::pair<std::size_t, int>, RatFun> powers;
  for (const auto& t : p.terms()) {
    Exponents rest = t.exps;
    RatFun factor(1);
    for (const auto& [idx, value] : bindings) {
      if (idx >= n || rest[idx] == 0) continue;
      const int e = rest[idx];
      rest[idx] = 0;
      auto it = powers.find({idx, e});
      if (it == powers.end()) it = powers.emplace(std::pair{idx, e}, value.pow(e)).first;
      factor *= it->second;
    }
    acc += RatFun(MultiPoly::monomial(rest, t.coeff)) * factor;
  }
  return acc;
}

inline RatFun specialize(const RatFun& a, const std::map<std::size_t, RatFun>& bindings) {
  const RatFun n = specialize(a.num(), bindings), d = specialize(a.den(), bindings);
  if (d.is_zero()) throw DivisionByZero("denominator vanishes under specialization");
  return n / d;
}

}  // namespace lda
