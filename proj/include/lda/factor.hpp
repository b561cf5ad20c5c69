#pragma once

#include <algorithm>
#include <vector>

#include "lda/ratfun.hpp"

namespace lda {

// unit * prod(factor^multiplicity); factors are primitive with positive leading coefficient.
struct FactoredPoly {
  Integer unit = 1;
  std::vector<std::pair<MultiPoly, int>> factors;

  MultiPoly expand(std::size_t arity) const {
    MultiPoly p = MultiPoly::constant(arity, unit);
    for (const auto& [f, m] : factors) p *= f.pow(static_cast<unsigned>(m));
    return p;
  }
};

struct FactoredRatFun {
  FactoredPoly num;
  FactoredPoly den;

  RatFun value(std::size_t arity) const { return RatFun(num.expand(arity), den.expand(arity)); }
};

namespace detail {

inline constexpr std::size_t kMaxLinearCandidates = 4096;

// Divisors of |n| by trial division; large cofactors are treated as prime.
inline std::vector<Integer> integer_divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<std::pair<Integer, int>> primes;
  Integer p = 2;
  while (p * p <= n && p < 100000) {
    int e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      ++e;
    }
    if (e) primes.push_back({p, e});
    p += (p == 2 ? 1 : 2);
  }
  if (n > 1) primes.push_back({n, 1});
  std::vector<Integer> divs{1};
  for (const auto& [q, e] : primes) {
    const std::size_t count = divs.size();
    Integer qp = 1;
    for (int k = 1; k <= e; ++k) {
      qp *= q;
      for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * qp);
    }
  }
  return divs;
}

inline FactoredPoly factor_impl(const MultiPoly& p);

// All divisors of a factored polynomial up to sign, capped at `limit` entries.
inline std::vector<MultiPoly> polynomial_divisors(const FactoredPoly& f, std::size_t arity, std::size_t limit) {
  std::vector<MultiPoly> divs;
  for (const auto& d : integer_divisors(f.unit)) divs.push_back(MultiPoly::constant(arity, d));
  for (const auto& [g, m] : f.factors) {
    const std::size_t count = divs.size();
    MultiPoly gp = MultiPoly::constant(arity, 1);
    for (int k = 1; k <= m; ++k) {
      gp *= g;
      for (std::size_t i = 0; i < count; ++i) {
        divs.push_back(divs[i] * gp);
        if (divs.size() > limit) return {};
      }
    }
  }
  return divs;
}

// Finds a factor of p of degree one in symbol v, if any. p is primitive in v,
// has no monomial factor, and deg_v(p) >= 2.
inline std::optional<MultiPoly> find_linear_factor(const MultiPoly& p, std::size_t v) {
  const std::size_t n = p.arity();
  const auto coeffs = p.coefficients_in(v);
  const FactoredPoly lead = factor_impl(coeffs.back());
  const FactoredPoly tail = factor_impl(coeffs.front());
  const auto as = polynomial_divisors(lead, n, kMaxLinearCandidates);
  const auto bs = polynomial_divisors(tail, n, kMaxLinearCandidates);
  if (as.empty() || bs.empty() || as.size() * bs.size() > kMaxLinearCandidates * 8) return std::nullopt;
  const MultiPoly x = MultiPoly::variable(n, v);
  for (const auto& a : as)
    for (const auto& b : bs)
      for (int sign : {1, -1}) {
        MultiPoly cand = a * x + b * Integer(sign);
        if (gcd(a, b).total_degree() > 0) continue;
        if (divide_exact(p, cand)) return positive(cand);
      }
  return std::nullopt;
}

inline FactoredPoly factor_impl(const MultiPoly& p) {
  FactoredPoly out;
  if (p.is_zero()) {
    out.unit = 0;
    return out;
  }
  const std::size_t n = p.arity();
  out.unit = p.content();
  if (p.leading_coeff() < 0) out.unit = -out.unit;
  std::vector<std::pair<MultiPoly, int>> work{{p.divexact(out.unit), 1}};
  std::vector<std::pair<MultiPoly, int>> done;

  while (!work.empty()) {
    auto [f, m] = std::move(work.back());
    work.pop_back();
    f = positive(f);
    if (f.is_constant()) continue;

    const Exponents mins = f.min_exponents();
    bool split = false;
    for (std::size_t i = 0; i < n; ++i)
      if (mins[i] > 0) {
        done.push_back({MultiPoly::variable(n, i), m * mins[i]});
        split = true;
      }
    if (split) {
      work.push_back({divide_exact_or_throw(f, MultiPoly::monomial(mins, 1)), m});
      continue;
    }

    for (std::size_t v = 0; v < n && !split; ++v) {
      if (!f.contains(v)) continue;
      MultiPoly c = content_in(f, v);
      if (!c.is_constant()) {
        work.push_back({c, m});
        work.push_back({divide_exact_or_throw(f, c), m});
        split = true;
      }
    }
    if (split) continue;

    // Primitive in every symbol: degree one in some symbol means irreducible.
    bool linear = false;
    for (std::size_t v = 0; v < n; ++v) linear = linear || f.degree_in(v) == 1;
    if (linear) {
      done.push_back({f, m});
      continue;
    }

    for (std::size_t v = 0; v < n && !split; ++v) {
      if (f.degree_in(v) < 2) continue;
      if (auto lf = find_linear_factor(f, v)) {
        work.push_back({*lf, m});
        work.push_back({divide_exact_or_throw(f, *lf), m});
        split = true;
      }
    }
    if (split) continue;

    for (std::size_t v = 0; v < n && !split; ++v) {
      if (!f.contains(v)) continue;
      MultiPoly g = gcd(f, f.derivative(v));
      if (!g.is_constant()) {
        work.push_back({g, m});
        work.push_back({divide_exact_or_throw(f, g), m});
        split = true;
      }
    }
    if (!split) done.push_back({f, m});
  }

  std::sort(done.begin(), done.end(), [](const auto& a, const auto& b) {
    const int c = grlex_compare(a.first.leading().exps, b.first.leading().exps);
    if (c != 0) return c < 0;
    return a.first.size() < b.first.size();
  });
  for (auto& [f, m] : done) {
    auto it = std::find_if(out.factors.begin(), out.factors.end(), [&](const auto& e) { return e.first == f; });
    if (it != out.factors.end()) it->second += m;
    else out.factors.push_back({std::move(f), m});
  }
  return out;
}

}  // namespace detail

inline FactoredPoly factor_poly(const MultiPoly& p) { return detail::factor_impl(p); }

inline FactoredRatFun factor_output(const RatFun& a) {
  FactoredRatFun f{detail::factor_impl(a.num()), detail::factor_impl(a.den())};
  if (a.is_zero()) f.den = FactoredPoly{};
  return f;
}

}  // namespace lda
