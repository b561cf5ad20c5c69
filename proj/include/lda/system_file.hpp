#pragma once

#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "lda/parser.hpp"
#include "lda/reduction.hpp"
#include "lda/render.hpp"
#include "lda/scheme.hpp"

namespace lda {

struct SystemSpec {
  SymbolTable symbols;
  std::vector<std::string> functions;
  std::vector<DiffPoly> equations;  // specializations already applied
  Ranking ranking;
  std::vector<VanishingPattern> boundary;
  std::map<std::size_t, RatFun> specializations;

  Names names() const { return {&symbols, &functions}; }
};

namespace detail {

inline nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": invalid JSON: " + e.what());
  }
}

// Wraps errors with a field path such as "equations[1]".
template <class F>
auto at_field(const std::string& path, F&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ParseError& e) {
    throw ParseError(e.position(), path + ": " + std::string(e.what()));
  } catch (const InputError& e) {
    throw ValidationError(path + ": " + e.what());
  } catch (const MathError& e) {
    throw ValidationError(path + ": " + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

inline std::vector<std::string> string_list(const nlohmann::json& j, const std::string& key, bool required) {
  if (!j.contains(key)) {
    if (required) throw ValidationError(key + ": missing field");
    return {};
  }
  const auto& v = j.at(key);
  if (!v.is_array()) throw ValidationError(key + ": expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_string()) throw ValidationError(key + "[" + std::to_string(i) + "]: expected a string");
    out.push_back(v[i].get<std::string>());
  }
  return out;
}

inline std::size_t position_in(const std::vector<std::string>& names, const std::string& name, const std::string& path) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw ValidationError(path + ": unknown name '" + name + "'");
  return static_cast<std::size_t>(it - names.begin());
}

}  // namespace detail

// "f(k+j,n)=0": any identifier that is not a declared variable is a wildcard.
inline VanishingPattern parse_pattern(std::string_view text, const SymbolTable& symbols,
                                      const std::vector<std::string>& functions) {
  detail::Parser p(text, symbols, functions, {});
  const std::size_t start = p.peek().pos;
  auto [f, args] = p.function_application();
  p.expect_op("=");
  if (p.peek().kind != detail::Token::integer || p.peek().text != "0")
    throw ParseError(p.peek().pos, "a boundary condition must have the form f(...)=0");
  p.advance();
  p.expect_end();
  const std::size_t n = symbols.num_variables();
  if (args.size() != n)
    throw ArityError(start, "function '" + functions[f] + "' takes " + std::to_string(n) + " arguments");
  VanishingPattern pat{f, std::vector<std::optional<int>>(n)};
  bool constrained = false;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = args[i];
    if (a.variable && *a.variable != i)
      throw ParseError(a.pos, "argument " + std::to_string(i + 1) + " must use variable '" + symbols.variables()[i] + "'");
    if (a.wildcard) continue;
    if (!a.variable) throw ParseError(a.pos, "argument " + std::to_string(i + 1) + " needs variable '" + symbols.variables()[i] + "'");
    if (a.offset < 0) throw NegativeShiftError(a.pos, "negative shift in boundary condition");
    pat.constraints[i] = static_cast<int>(a.offset);
    constrained = true;
  }
  if (!constrained) throw ValidationError("boundary condition constrains no shift component");
  return pat;
}

inline std::string pattern_text(const VanishingPattern& p, const Names& names, const std::string& wildcard = "j") {
  std::string out = names.functions->at(p.func) + "(";
  for (std::size_t i = 0; i < p.constraints.size(); ++i) {
    if (i) out += ",";
    out += names.symbols->variables()[i];
    if (!p.constraints[i]) out += "+" + wildcard;
    else if (*p.constraints[i] > 0) out += "+" + std::to_string(*p.constraints[i]);
  }
  return out + ")=0";
}

inline Ranking parse_ranking(const nlohmann::json& j, const SymbolTable& symbols,
                             const std::vector<std::string>& functions) {
  RankingKind kind = RankingKind::orderly;
  std::vector<std::size_t> forder(functions.size()), vorder(symbols.num_variables());
  std::iota(forder.begin(), forder.end(), 0);
  std::iota(vorder.begin(), vorder.end(), 0);
  if (j.is_null()) return Ranking(kind, forder, vorder);
  if (!j.is_object()) throw ValidationError("ranking: expected an object");
  if (j.contains("type")) {
    const auto t = detail::at_field("ranking.type", [&] { return j.at("type").get<std::string>(); });
    if (t == "orderly") kind = RankingKind::orderly;
    else if (t == "elimination") kind = RankingKind::elimination;
    else throw ValidationError("ranking.type: expected \"orderly\" or \"elimination\", got \"" + t + "\"");
  }
  if (j.contains("function_order")) {
    auto names = detail::at_field("ranking", [&] { return detail::string_list(j, "function_order", true); });
    if (names.size() != functions.size()) throw ValidationError("ranking.function_order: must list every function once");
    for (std::size_t i = 0; i < names.size(); ++i)
      forder[i] = detail::position_in(functions, names[i], "ranking.function_order[" + std::to_string(i) + "]");
  }
  if (j.contains("variable_order")) {
    auto names = detail::at_field("ranking", [&] { return detail::string_list(j, "variable_order", true); });
    if (names.size() != symbols.num_variables())
      throw ValidationError("ranking.variable_order: must list every variable once");
    for (std::size_t i = 0; i < names.size(); ++i)
      vorder[i] = detail::position_in(symbols.variables(), names[i], "ranking.variable_order[" + std::to_string(i) + "]");
  }
  return detail::at_field("ranking", [&] { return Ranking(kind, forder, vorder); });
}

inline SystemSpec parse_system(const nlohmann::json& j) {
  if (!j.is_object()) throw ValidationError("system file: expected a JSON object");
  SystemSpec s;
  auto vars = detail::string_list(j, "variables", true);
  auto params = detail::string_list(j, "parameters", false);
  if (vars.empty()) throw ValidationError("variables: at least one variable is required");
  s.symbols = detail::at_field("variables", [&] { return SymbolTable(vars, params); });
  s.functions = detail::string_list(j, "functions", true);
  if (s.functions.empty()) throw ValidationError("functions: at least one function is required");
  for (std::size_t i = 0; i < s.functions.size(); ++i) {
    const std::string path = "functions[" + std::to_string(i) + "]";
    if (s.symbols.index_of(s.functions[i])) throw ValidationError(path + ": '" + s.functions[i] + "' is also a symbol");
    for (std::size_t k = 0; k < i; ++k)
      if (s.functions[k] == s.functions[i]) throw ValidationError(path + ": duplicate function");
  }

  if (j.contains("specialize")) {
    const auto& sp = j.at("specialize");
    if (!sp.is_object()) throw ValidationError("specialize: expected an object");
    for (auto it = sp.begin(); it != sp.end(); ++it) {
      const std::string path = "specialize." + it.key();
      auto idx = s.symbols.index_of(it.key());
      if (!idx || s.symbols.is_variable(*idx)) throw ValidationError(path + ": not a declared parameter");
      s.specializations[*idx] = detail::at_field(path, [&] {
        return it.value().is_number_integer() ? RatFun(Integer(it.value().get<long>()))
                                              : parse_ratfun(it.value().get<std::string>(), s.symbols);
      });
    }
  }

  const auto eqs = detail::string_list(j, "equations", true);
  if (eqs.empty()) throw ValidationError("equations: at least one equation is required");
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    const std::string path = "equations[" + std::to_string(i) + "]";
    DiffPoly p = detail::at_field(path, [&] { return parse_expression(eqs[i], s.symbols, s.functions); });
    if (!s.specializations.empty()) {
      p = detail::at_field(path, [&] {
        DiffPoly q(specialize(p.constant(), s.specializations));
        for (const auto& [t, c] : p.terms()) q.add(t, specialize(c, s.specializations));
        return q;
      });
    }
    s.equations.push_back(std::move(p));
  }

  s.ranking = parse_ranking(j.contains("ranking") ? j.at("ranking") : nlohmann::json(), s.symbols, s.functions);

  const auto boundary = detail::string_list(j, "boundary", false);
  for (std::size_t i = 0; i < boundary.size(); ++i)
    s.boundary.push_back(detail::at_field("boundary[" + std::to_string(i) + "]",
                                          [&] { return parse_pattern(boundary[i], s.symbols, s.functions); }));
  return s;
}

inline SystemSpec load_system(const std::string& path) { return parse_system(detail::read_json_file(path)); }

// Same schema as the input; equations are written with specializations applied.
inline nlohmann::json system_json(const SystemSpec& s) {
  const Names names = s.names();
  nlohmann::json eqs = nlohmann::json::array();
  for (const auto& e : s.equations) eqs.push_back(render_text(e, names, s.ranking));
  nlohmann::json forder = nlohmann::json::array(), vorder = nlohmann::json::array();
  for (auto f : s.ranking.function_order()) forder.push_back(s.functions[f]);
  for (auto v : s.ranking.variable_order()) vorder.push_back(s.symbols.variables()[v]);
  nlohmann::json boundary = nlohmann::json::array();
  for (const auto& b : s.boundary) {
    // Pick a wildcard name that does not collide with a declared symbol.
    std::string w = "j";
    while (s.symbols.index_of(w)) w += "_";
    boundary.push_back(pattern_text(b, names, w));
  }
  return {{"variables", s.symbols.variables()},
          {"parameters", s.symbols.parameters()},
          {"functions", s.functions},
          {"equations", eqs},
          {"ranking",
           {{"type", s.ranking.kind() == RankingKind::orderly ? "orderly" : "elimination"},
            {"function_order", forder},
            {"variable_order", vorder}}},
          {"boundary", boundary}};
}

// Input of the `scheme` command.
struct SchemeSpec {
  ConservationPDE pde;
  GridSpec grid;
  ContourSpec contour;
  QuadraturePlan plan;
};

namespace detail {

inline Quadrature parse_quadrature(const nlohmann::json& q, const std::string& key, Quadrature fallback) {
  if (!q.contains(key)) return fallback;
  const auto v = at_field("quadrature." + key, [&] { return q.at(key).get<std::string>(); });
  if (v == "midpoint") return Quadrature::midpoint;
  if (v == "trapezoid") return Quadrature::trapezoid;
  throw ValidationError("quadrature." + key + ": expected \"midpoint\" or \"trapezoid\", got \"" + v + "\"");
}

// Parses V or W; derivative functions are recognised by name (u, u_x, u_xt, ...).
inline DiffPoly parse_flux(const std::string& text, ConservationPDE& pde, const std::string& path) {
  constexpr int kMaxOrder = 6;
  std::vector<std::string> names;
  std::vector<DerivativeKey> keys;
  for (int d = 0; d <= kMaxOrder; ++d)
    for (int x = d; x >= 0; --x) {
      keys.push_back({x, d - x});
      names.push_back(derivative_name(pde, keys.back()));
    }
  DiffPoly p = at_field(path, [&] { return parse_expression(text, pde.symbols, names, {.allow_bare_functions = true}); });
  DiffPoly out(p.constant());
  for (const auto& [t, c] : p.terms()) {
    if (total_degree(t.exps) != 0)
      throw ValidationError(path + ": use bare derivative names; grid shifts are produced by the discretization");
    auto it = std::find(pde.functions.begin(), pde.functions.end(), keys[t.func]);
    std::size_t idx = static_cast<std::size_t>(it - pde.functions.begin());
    if (it == pde.functions.end()) pde.functions.push_back(keys[t.func]);
    out.add(DiffTerm{idx, t.exps}, c);
  }
  if (!out.constant().is_zero()) throw ValidationError(path + ": flux must be linear and homogeneous in u");
  return out;
}

}  // namespace detail

inline SchemeSpec parse_scheme_spec(const nlohmann::json& j) {
  if (!j.is_object()) throw ValidationError("pde file: expected a JSON object");
  SchemeSpec s;
  auto& pde = s.pde;
  if (j.contains("unknown")) pde.unknown = detail::at_field("unknown", [&] { return j.at("unknown").get<std::string>(); });
  const auto axes = detail::string_list(j, "axes", false);
  if (!axes.empty()) {
    if (axes.size() != 2 || axes[0] == axes[1]) throw ValidationError("axes: expected two distinct names");
    pde.x_axis = axes[0];
    pde.y_axis = axes[1];
  }
  const auto indices = detail::string_list(j, "indices", true);
  if (indices.size() != 2 || indices[0] == indices[1]) throw ValidationError("indices: expected two distinct names");
  auto vars = detail::string_list(j, "variables", false);
  if (vars.empty()) vars = indices;
  if (vars.size() != 2 || std::find(vars.begin(), vars.end(), indices[0]) == vars.end() ||
      std::find(vars.begin(), vars.end(), indices[1]) == vars.end())
    throw ValidationError("variables: must be a permutation of indices");
  const auto params = detail::string_list(j, "parameters", false);
  pde.symbols = detail::at_field("parameters", [&] { return SymbolTable(vars, params); });
  s.grid.x_index = *pde.symbols.variable_index(indices[0]);
  s.grid.y_index = *pde.symbols.variable_index(indices[1]);

  const auto steps = detail::string_list(j, "steps", true);
  if (steps.size() != 2) throw ValidationError("steps: expected two mesh-step parameter names");
  for (std::size_t i = 0; i < 2; ++i) {
    auto idx = pde.symbols.index_of(steps[i]);
    if (!idx || pde.symbols.is_variable(*idx))
      throw ValidationError("steps[" + std::to_string(i) + "]: '" + steps[i] + "' is not a declared parameter");
    (i == 0 ? s.grid.x_step : s.grid.y_step) = *idx;
  }

  auto flux = [&](const char* key) {
    if (!j.contains(key)) throw ValidationError(std::string(key) + ": missing field");
    const auto text = detail::at_field(key, [&] { return j.at(key).get<std::string>(); });
    return detail::parse_flux(text, pde, key);
  };
  pde.V = flux("V");
  pde.W = flux("W");

  if (j.contains("contour")) {
    const auto c = detail::at_field("contour", [&] { return j.at("contour").get<std::vector<int>>(); });
    if (c.size() != 2 || c[0] < 1 || c[1] < 1) throw ValidationError("contour: expected two positive cell counts");
    s.contour = {c[0], c[1]};
  }
  const nlohmann::json q = j.contains("quadrature") ? j.at("quadrature") : nlohmann::json::object();
  if (!q.is_object()) throw ValidationError("quadrature: expected an object");
  s.plan.contour_x = detail::parse_quadrature(q, "x", Quadrature::midpoint);
  s.plan.contour_y = detail::parse_quadrature(q, "y", Quadrature::midpoint);
  s.plan.relation = detail::parse_quadrature(q, "relation", Quadrature::midpoint);
  return s;
}

inline SchemeSpec load_scheme_spec(const std::string& path) { return parse_scheme_spec(detail::read_json_file(path)); }

}  // namespace lda
