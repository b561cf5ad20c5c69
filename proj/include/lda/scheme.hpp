#pragma once

#include <string>
#include <vector>

#include "lda/janet.hpp"
#include "lda/symbols.hpp"

namespace lda {

// Orders of a partial derivative of the unknown: d^x/dx d^y/dy.
struct DerivativeKey {
  int x = 0;
  int y = 0;

  int order() const { return x + y; }
  bool operator==(const DerivativeKey&) const = default;
};

// dV/dx + dW/dy = 0. V and W are linear in the derivative functions listed in
// `functions`; their coefficients may involve the grid indices and parameters.
struct ConservationPDE {
  std::string unknown = "u";
  std::string x_axis = "x";
  std::string y_axis = "y";
  SymbolTable symbols;  // variables are the grid indices
  std::vector<DerivativeKey> functions;
  DiffPoly V;
  DiffPoly W;
};

struct GridSpec {
  std::size_t x_index = 0;  // variable shifted by a step along x
  std::size_t y_index = 1;
  std::size_t x_step = 0;  // symbol index of the mesh step along x
  std::size_t y_step = 0;
};

struct ContourSpec {
  int sx = 1;
  int sy = 1;
};

enum class Quadrature { midpoint, trapezoid };

struct QuadraturePlan {
  Quadrature contour_x = Quadrature::midpoint;  // edges running along x
  Quadrature contour_y = Quadrature::midpoint;
  Quadrature relation = Quadrature::midpoint;
};

// int D d(axis) = L(end) - L(start).
struct IntegralRelation {
  DerivativeKey derivative;
  DerivativeKey lower;
  int axis = 0;  // 0 = x, 1 = y
  int span = 1;  // cells

  bool operator==(const IntegralRelation&) const = default;
};

struct DiscreteSystem {
  SymbolTable symbols;
  std::vector<DerivativeKey> functions;  // heaviest first; the unknown itself is last
  std::vector<std::string> function_names;
  std::vector<DiffPoly> equations;
  std::size_t unknown = 0;

  Ranking elimination_ranking() const {
    return Ranking::make(RankingKind::elimination, functions.size(), symbols.num_variables());
  }
};

inline std::string derivative_name(const ConservationPDE& pde, DerivativeKey k) {
  if (k.order() == 0) return pde.unknown;
  std::string s = pde.unknown + "_";
  for (int i = 0; i < k.x; ++i) s += pde.x_axis;
  for (int i = 0; i < k.y; ++i) s += pde.y_axis;
  return s;
}

namespace detail {

inline DerivativeKey lower_key(DerivativeKey k) {
  return k.y > 0 ? DerivativeKey{k.x, k.y - 1} : DerivativeKey{k.x - 1, 0};
}

// Every derivative appearing in V or W together with its chain down to the unknown.
inline std::vector<DerivativeKey> derivative_closure(const ConservationPDE& pde) {
  std::vector<DerivativeKey> keys;
  auto add = [&](DerivativeKey k) {
    while (true) {
      if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
      if (k.order() == 0) return;
      k = lower_key(k);
    }
  };
  for (const DiffPoly* p : {&pde.V, &pde.W})
    for (const auto& [t, c] : p->terms()) add(pde.functions.at(t.func));
  std::sort(keys.begin(), keys.end(), [](DerivativeKey a, DerivativeKey b) {
    if (a.order() != b.order()) return a.order() > b.order();
    return a.x > b.x;
  });
  return keys;
}

inline DiffPoly reindex(const DiffPoly& p, const std::vector<std::size_t>& map) {
  DiffPoly out(p.constant());
  for (const auto& [t, c] : p.terms()) out.add(DiffTerm{map.at(t.func), t.exps}, c);
  return out;
}

inline Exponents grid_shift(const GridSpec& g, std::size_t n, int dx, int dy) {
  Exponents e(n, 0);
  e[g.x_index] += dx;
  e[g.y_index] += dy;
  return e;
}

// Quadrature of F along `axis` over `cells` cells starting at (x0, y0).
inline DiffPoly edge_integral(const DiffPoly& F, const GridSpec& g, std::size_t n, std::size_t arity, int axis, int x0,
                              int y0, int cells, Quadrature rule) {
  const RatFun h = RatFun::symbol(arity, axis == 0 ? g.x_step : g.y_step);
  auto at = [&](int s) {
    return apply_shift(axis == 0 ? grid_shift(g, n, x0 + s, y0) : grid_shift(g, n, x0, y0 + s), F);
  };
  if (rule == Quadrature::midpoint) {
    if (cells % 2 != 0)
      throw ParityError("midpoint rule needs an even number of cells along " + std::string(axis == 0 ? "x" : "y") +
                        ", got " + std::to_string(cells));
    return at(cells / 2).scaled(RatFun(cells) * h);
  }
  DiffPoly sum;
  for (int s = 0; s <= cells; ++s) {
    const RatFun w = (s == 0 || s == cells) ? RatFun(MultiPoly::constant(0, 1), MultiPoly::constant(0, 2)) : RatFun(1);
    sum = sum + at(s).scaled(w * h);
  }
  return sum;
}

}  // namespace detail

inline std::vector<IntegralRelation> build_integral_relations(const ConservationPDE& pde, const ContourSpec& contour,
                                                              const QuadraturePlan& plan) {
  std::vector<IntegralRelation> out;
  for (const auto& k : detail::derivative_closure(pde)) {
    if (k.order() == 0) continue;
    IntegralRelation r{k, detail::lower_key(k), k.y > 0 ? 1 : 0, 1};
    if (plan.relation == Quadrature::midpoint) r.span = r.axis == 0 ? contour.sx : contour.sy;
    out.push_back(r);
  }
  return out;
}

// Counterclockwise contour equation  oint -W dx + V dy = 0  plus one
// discretized equation per integral relation.
inline DiscreteSystem discretize(const ConservationPDE& pde, const GridSpec& grid, const ContourSpec& contour,
                                 const QuadraturePlan& plan) {
  if (contour.sx < 1 || contour.sy < 1) throw ValidationError("contour extents must be at least 1");
  DiscreteSystem sys;
  sys.symbols = pde.symbols;
  const std::size_t n = sys.symbols.num_variables();
  const std::size_t arity = sys.symbols.size();
  if (pde.V.is_zero() && pde.W.is_zero()) return sys;

  sys.functions = detail::derivative_closure(pde);
  sys.unknown = sys.functions.size() - 1;
  for (const auto& k : sys.functions) sys.function_names.push_back(derivative_name(pde, k));
  std::vector<std::size_t> map(pde.functions.size(), 0);
  for (std::size_t i = 0; i < pde.functions.size(); ++i) {
    auto it = std::find(sys.functions.begin(), sys.functions.end(), pde.functions[i]);
    map[i] = it == sys.functions.end() ? 0 : static_cast<std::size_t>(it - sys.functions.begin());
  }
  const DiffPoly V = detail::reindex(pde.V, map), W = detail::reindex(pde.W, map);

  const int sx = contour.sx, sy = contour.sy;
  DiffPoly eq = detail::edge_integral(W, grid, n, arity, 0, 0, sy, sx, plan.contour_x) -
                detail::edge_integral(W, grid, n, arity, 0, 0, 0, sx, plan.contour_x) +
                detail::edge_integral(V, grid, n, arity, 1, sx, 0, sy, plan.contour_y) -
                detail::edge_integral(V, grid, n, arity, 1, 0, 0, sy, plan.contour_y);
  if (!eq.is_zero()) sys.equations.push_back(std::move(eq));

  auto index_of = [&](DerivativeKey k) {
    return static_cast<std::size_t>(std::find(sys.functions.begin(), sys.functions.end(), k) - sys.functions.begin());
  };
  for (const auto& rel : build_integral_relations(pde, contour, plan)) {
    const DiffPoly D = DiffPoly::term(DiffTerm{index_of(rel.derivative), Exponents(n, 0)});
    const DiffPoly L = DiffPoly::term(DiffTerm{index_of(rel.lower), Exponents(n, 0)});
    const Exponents end = rel.axis == 0 ? detail::grid_shift(grid, n, rel.span, 0) : detail::grid_shift(grid, n, 0, rel.span);
    DiffPoly r = detail::edge_integral(D, grid, n, arity, rel.axis, 0, 0, rel.span, plan.relation) -
                 (apply_shift(end, L) - L);
    sys.equations.push_back(std::move(r));
  }
  return sys;
}

// Members of the reduced Groebner basis that mention only the unknown.
inline std::vector<DiffPoly> generate_scheme(const std::vector<DiffPoly>& system, std::size_t keep, const Ranking& r,
                                             CompletionOptions opts = {}) {
  std::vector<DiffPoly> out;
  if (system.empty()) return out;
  for (const auto& g : reduced_groebner_basis(janet_basis(system, r, opts))) {
    const auto fs = g.functions();
    if (fs.size() == 1 && fs[0] == keep) out.push_back(g);
  }
  return out;
}

inline std::vector<DiffPoly> generate_scheme(const DiscreteSystem& sys, CompletionOptions opts = {}) {
  return generate_scheme(sys.equations, sys.unknown, sys.elimination_ranking(), opts);
}

}  // namespace lda
