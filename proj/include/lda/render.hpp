#pragma once

#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "lda/factor.hpp"
#include "lda/janet.hpp"
#include "lda/parser.hpp"
#include "lda/reduction.hpp"

namespace lda {

enum class Format { text, json, latex };

// Names needed to print anything: coefficient symbols and function names.
struct Names {
  const SymbolTable* symbols;
  const std::vector<std::string>* functions;
};

namespace detail {

inline std::string render_monomial(const Exponents& e, const SymbolTable& s, bool latex) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += latex ? " " : "*";
    out += s.name(i);
    if (e[i] > 1) out += latex ? "^{" + std::to_string(e[i]) + "}" : "^" + std::to_string(e[i]);
  }
  return out;
}

// Polynomial with its sign folded into the first term.
inline std::string render_poly(const MultiPoly& p, const SymbolTable& s, bool latex = false) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool neg = t.coeff < 0;
    const Integer mag = neg ? Integer(-t.coeff) : t.coeff;
    if (first) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    first = false;
    const std::string mono = render_monomial(t.exps, s, latex);
    if (mono.empty()) out += mag.get_str();
    else if (mag == 1) out += mono;
    else out += mag.get_str() + (latex ? " " : "*") + mono;
  }
  return out;
}

inline bool single_factor(const MultiPoly& p) { return p.size() == 1; }

inline std::string render_ratfun(const RatFun& a, const SymbolTable& s) {
  std::string num = render_poly(a.num(), s);
  if (a.is_polynomial()) return num;
  if (!single_factor(a.num())) num = "(" + num + ")";
  std::string den = render_poly(a.den(), s);
  const bool bare = a.den().is_constant() || (a.den().size() == 1 && a.den().leading_coeff() == 1 &&
                                              total_degree(a.den().leading().exps) == 1);
  return num + "/" + (bare ? den : "(" + den + ")");
}

inline std::string render_latex_ratfun(const RatFun& a, const SymbolTable& s) {
  if (a.is_polynomial()) return render_poly(a.num(), s, true);
  return "\\frac{" + render_poly(a.num(), s, true) + "}{" + render_poly(a.den(), s, true) + "}";
}

// Leading sign of a rational function as printed.
inline bool is_negative(const RatFun& a) { return !a.is_zero() && a.num().leading_coeff() < 0; }

inline std::string render_factored_poly(const FactoredPoly& f, const SymbolTable& s, bool& negative) {
  negative = f.unit < 0;
  const Integer mag = negative ? Integer(-f.unit) : f.unit;
  std::vector<std::string> parts;
  if (mag != 1 || f.factors.empty()) parts.push_back(mag.get_str());
  for (const auto& [g, m] : f.factors) {
    std::string b = render_poly(g, s);
    const bool atom = g.size() == 1 && total_degree(g.leading().exps) == 1 && g.leading_coeff() == 1;
    if (!atom) b = "(" + b + ")";
    if (m > 1) b += "^" + std::to_string(m);
    parts.push_back(b);
  }
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "*" : "") + parts[i];
  return out;
}

}  // namespace detail

inline std::string term_text(const DiffTerm& t, const Names& names) {
  std::string out = names.functions->at(t.func) + "(";
  const auto& vars = names.symbols->variables();
  for (std::size_t i = 0; i < t.exps.size(); ++i) {
    if (i) out += ",";
    out += vars[i];
    if (t.exps[i] > 0) out += "+" + std::to_string(t.exps[i]);
  }
  return out + ")";
}

inline std::string ratfun_text(const RatFun& a, const SymbolTable& s) { return detail::render_ratfun(a, s); }

inline std::string factored_text(const FactoredRatFun& f, const SymbolTable& s) {
  bool nneg = false, dneg = false;
  std::string num = detail::render_factored_poly(f.num, s, nneg);
  std::string den = detail::render_factored_poly(f.den, s, dneg);
  const bool negative = nneg != dneg;
  const bool trivial_den = den == "1";
  if (f.num.unit == 0) return "0";
  if (!trivial_den) {
    const bool single_den = f.den.factors.size() + (f.den.unit == 1 || f.den.unit == -1 ? 0 : 1) == 1 &&
                            (f.den.factors.empty() || f.den.factors[0].second == 1);
    if (!single_den) den = "(" + den + ")";
    num += "/" + den;
  }
  return negative ? "-" + num : num;
}

// Deterministic, re-parseable rendering; terms descend in the given ranking.
inline std::string render_text(const DiffPoly& p, const Names& names, const Ranking& r) {
  std::vector<std::pair<DiffTerm, RatFun>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) { return r.compare(a.first, b.first) > 0; });
  if (!p.constant().is_zero()) terms.emplace_back(DiffTerm{}, p.constant());
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [t, c] = terms[i];
    const bool is_constant = i + 1 == terms.size() && !p.constant().is_zero();
    const bool negative = detail::is_negative(c);
    const RatFun mag = negative ? -c : c;
    if (i == 0) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    std::string coeff = detail::render_ratfun(mag, *names.symbols);
    if (is_constant) {
      out += mag.is_polynomial() && mag.num().size() > 1 && i > 0 ? "(" + coeff + ")" : coeff;
      continue;
    }
    if (mag.is_one()) {
      out += term_text(t, names);
      continue;
    }
    const bool simple = mag.is_polynomial() && mag.num().size() == 1;
    out += (simple ? coeff : "(" + coeff + ")") + "*" + term_text(t, names);
  }
  return out;
}

inline std::string render_latex(const DiffPoly& p, const Names& names, const Ranking& r) {
  std::vector<std::pair<DiffTerm, RatFun>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) { return r.compare(a.first, b.first) > 0; });
  if (terms.empty() && p.constant().is_zero()) return "0";
  std::string out;
  auto sep = [&](bool negative) {
    if (out.empty()) return std::string(negative ? "-" : "");
    return std::string(negative ? " - " : " + ");
  };
  for (const auto& [t, c] : terms) {
    const bool negative = detail::is_negative(c);
    const RatFun mag = negative ? -c : c;
    out += sep(negative);
    if (!mag.is_one()) {
      const std::string s = detail::render_latex_ratfun(mag, *names.symbols);
      out += (mag.is_polynomial() && mag.num().size() > 1 ? "\\left(" + s + "\\right)" : s) + "\\,";
    }
    out += term_text(t, names);
  }
  if (!p.constant().is_zero()) {
    const bool negative = detail::is_negative(p.constant());
    out += sep(negative) + detail::render_latex_ratfun(negative ? -p.constant() : p.constant(), *names.symbols);
  }
  return out;
}

inline std::string render(const DiffPoly& p, const Names& names, const Ranking& r, Format f);

inline nlohmann::json to_json(const DiffPoly& p, const Names& names, const Ranking& r) {
  std::vector<std::pair<DiffTerm, RatFun>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) { return r.compare(a.first, b.first) > 0; });
  nlohmann::json jt = nlohmann::json::array();
  for (const auto& [t, c] : terms)
    jt.push_back({{"function", names.functions->at(t.func)},
                  {"shift", std::vector<int>(t.exps.begin(), t.exps.end())},
                  {"coefficient", ratfun_text(c, *names.symbols)}});
  return {{"terms", jt}, {"constant", ratfun_text(p.constant(), *names.symbols)}, {"text", render_text(p, names, r)}};
}

// Inverse of to_json; the "text" field is informational and ignored.
inline DiffPoly diffpoly_from_json(const nlohmann::json& j, const Names& names) {
  const std::size_t n = names.symbols->num_variables();
  DiffPoly p(parse_ratfun(j.at("constant").get<std::string>(), *names.symbols));
  for (const auto& jt : j.at("terms")) {
    const auto fname = jt.at("function").get<std::string>();
    auto it = std::find(names.functions->begin(), names.functions->end(), fname);
    if (it == names.functions->end()) throw ValidationError("unknown function '" + fname + "'");
    const auto shift = jt.at("shift").get<std::vector<int>>();
    if (shift.size() != n) throw ValidationError("shift has wrong length");
    DiffTerm t{static_cast<std::size_t>(it - names.functions->begin()), Exponents(shift.begin(), shift.end())};
    p.add(t, parse_ratfun(jt.at("coefficient").get<std::string>(), *names.symbols));
  }
  return p;
}

inline std::string render(const DiffPoly& p, const Names& names, const Ranking& r, Format f) {
  switch (f) {
    case Format::json: return to_json(p, names, r).dump();
    case Format::latex: return render_latex(p, names, r);
    default: return render_text(p, names, r);
  }
}

inline std::string render_terms(const std::vector<DiffTerm>& terms, const Names& names) {
  std::string out = "[";
  for (std::size_t i = 0; i < terms.size(); ++i) out += (i ? ", " : "") + term_text(terms[i], names);
  return out + "]";
}

inline std::vector<std::string> multiplicative_names(const MarkedElement& e, const SymbolTable& s) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < e.multiplicative.size(); ++i)
    if (e.multiplicative[i]) out.push_back(s.variables()[i]);
  return out;
}

inline nlohmann::json basis_json(const MarkedBasis& b, const Names& names) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : b.elements()) {
    nlohmann::json j = to_json(e.poly, names, b.ranking());
    j["lead"] = term_text(e.lead, names);
    j["multiplicative"] = multiplicative_names(e, *names.symbols);
    out.push_back(j);
  }
  return out;
}

// One element per line, highest leading term first.
inline std::string render_basis(const MarkedBasis& b, const Names& names, Format f) {
  if (f == Format::json) return basis_json(b, names).dump(2);
  std::string out;
  for (auto it = b.elements().rbegin(); it != b.elements().rend(); ++it) {
    out += render(it->poly, names, b.ranking(), f);
    if (f == Format::text) {
      const auto m = multiplicative_names(*it, *names.symbols);
      out += "    # multiplicative: {";
      for (std::size_t i = 0; i < m.size(); ++i) out += (i ? "," : "") + m[i];
      out += "}";
    }
    out += "\n";
  }
  return out;
}

inline std::string render_polys(const std::vector<DiffPoly>& ps, const Names& names, const Ranking& r, Format f) {
  if (f == Format::json) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& p : ps) out.push_back(to_json(p, names, r));
    return out.dump(2);
  }
  std::string out;
  for (const auto& p : ps) out += render(p, names, r, f) + "\n";
  return out;
}

inline nlohmann::json report_json(const ReductionReport& rep, const Names& names) {
  nlohmann::json comb = nlohmann::json::array();
  for (std::size_t i = 0; i < rep.combination.size(); ++i) {
    nlohmann::json e{{"master", term_text(rep.combination[i].first, names)},
                     {"coefficient", ratfun_text(rep.combination[i].second, *names.symbols)}};
    if (i < rep.factored.size()) e["factored"] = factored_text(rep.factored[i], *names.symbols);
    comb.push_back(e);
  }
  nlohmann::json masters = nlohmann::json::array();
  for (const auto& m : rep.masters) masters.push_back(term_text(m, names));
  return {{"target", term_text(rep.target, names)},
          {"combination", comb},
          {"constant", ratfun_text(rep.constant, *names.symbols)},
          {"masters", masters},
          {"masters_complete", rep.masters_enumerated}};
}

inline std::string render_report(const ReductionReport& rep, const Names& names, const Ranking& r, Format f) {
  if (f == Format::json) return report_json(rep, names).dump(2);
  std::string rhs;
  if (!rep.factored.empty() && f == Format::text) {
    for (std::size_t i = 0; i < rep.combination.size(); ++i) {
      std::string c = factored_text(rep.factored[i], *names.symbols);
      const bool negative = !c.empty() && c[0] == '-';
      if (negative) c.erase(0, 1);
      rhs += i == 0 ? (negative ? "-" : "") : (negative ? " - " : " + ");
      rhs += (c == "1" ? "" : (c.find_first_of("+-/") == std::string::npos ? c : "(" + c + ")") + "*") +
             term_text(rep.combination[i].first, names);
    }
    if (!rep.constant.is_zero()) {
      const bool negative = detail::is_negative(rep.constant);
      rhs += (rhs.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ")) +
             ratfun_text(negative ? -rep.constant : rep.constant, *names.symbols);
    }
    if (rhs.empty()) rhs = "0";
  } else {
    rhs = render(rep.as_poly(), names, r, f);
  }
  return term_text(rep.target, names) + " = " + rhs;
}

}  // namespace lda
