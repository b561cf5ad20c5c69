// Command-line front end: Janet bases, master integrals, reduction and
// finite-difference scheme generation for linear difference systems.

#include <CLI11.hpp>
#include <iostream>

#include "lda/lda.hpp"

namespace {

using namespace lda;

Format output_format(bool json, bool latex) { return json ? Format::json : latex ? Format::latex : Format::text; }

int cmd_basis(const std::string& file, bool reduced, Format fmt) {
  const SystemSpec s = load_system(file);
  const MarkedBasis b = janet_basis(s.equations, s.ranking);
  if (reduced) std::cout << render_polys(reduced_groebner_basis(b), s.names(), s.ranking, fmt);
  else std::cout << render_basis(b, s.names(), fmt);
  if (fmt == Format::json) std::cout << "\n";
  return 0;
}

int cmd_masters(const std::string& file, Format fmt) {
  const SystemSpec s = load_system(file);
  const MarkedBasis b = janet_basis(s.equations, s.ranking);
  const auto masters = residue_class_basis(b, s.boundary, s.functions.size());
  if (fmt == Format::json) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& m : masters) out.push_back(term_text(m, s.names()));
    std::cout << out.dump() << "\n";
  } else {
    std::cout << render_terms(masters, s.names()) << "\n";
  }
  return 0;
}

int cmd_reduce(const std::string& file, const std::string& target, bool factor, Format fmt) {
  const SystemSpec s = load_system(file);
  const DiffTerm t = parse_term(target, s.symbols, s.functions);
  const MarkedBasis b = janet_basis(s.equations, s.ranking);
  const ReductionReport rep = reduce_to_masters(t, b, s.boundary, s.functions.size(), factor);
  std::cout << render_report(rep, s.names(), s.ranking, fmt) << "\n";
  return 0;
}

int cmd_scheme(const std::string& file, bool show_system, Format fmt) {
  const SchemeSpec spec = load_scheme_spec(file);
  const DiscreteSystem sys = discretize(spec.pde, spec.grid, spec.contour, spec.plan);
  const Names names{&sys.symbols, &sys.function_names};
  const Ranking r = sys.elimination_ranking();
  if (show_system) {
    std::cerr << "discretized system:\n" << render_polys(sys.equations, names, r, Format::text);
  }
  const auto scheme = generate_scheme(sys);
  if (scheme.empty()) std::cerr << "elimination produced no equation in " << sys.function_names[sys.unknown] << " alone\n";
  std::cout << render_polys(scheme, names, r, fmt);
  if (fmt == Format::json) std::cout << "\n";
  return 0;
}

// Cross-checks the Janet basis against the prolongation-matrix oracle.
int cmd_verify(const std::string& file, int degree) {
  const SystemSpec s = load_system(file);
  const MarkedBasis b = janet_basis(s.equations, s.ranking);
  const Names names = s.names();
  bool ok = check_janet_basis(b);
  std::cout << (ok ? "ok  " : "FAIL") << " characterization: nonmultiplicative prolongations reduce to 0\n";
  for (std::size_t i = 0; i < s.equations.size(); ++i) {
    const bool zero = j_normal_form(s.equations[i], b).is_zero();
    ok = ok && zero;
    std::cout << (zero ? "ok  " : "FAIL") << " input " << i + 1 << " reduces to 0\n";
  }
  const ProlongationMatrix m(s.equations, s.ranking, degree);
  for (const auto& g : b.elements()) {
    if (g.poly.max_degree() > m.column_degree()) {
      std::cout << "skip " << term_text(g.lead, names) << ": outside degree bound " << degree << "\n";
      continue;
    }
    const bool member = m.contains(g.poly);
    std::cout << (member ? "ok  " : "?   ") << " element with lead " << term_text(g.lead, names)
              << (member ? " is in the span of the prolongations" : " not reached at this degree bound") << "\n";
  }
  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Janet bases for linear difference systems"};
  app.require_subcommand(1);
  bool json = false, latex = false, reduced = false, factor = false, show_system = false;
  std::string file, target;
  int degree = 0;

  auto* basis = app.add_subcommand("basis", "minimal Janet basis of the system");
  basis->add_option("file", file, "system file")->required()->check(CLI::ExistingFile);
  basis->add_flag("--reduced", reduced, "print the reduced Groebner basis instead");
  basis->add_flag("--json", json, "JSON output");
  basis->add_flag("--latex", latex, "LaTeX output");

  auto* masters = app.add_subcommand("masters", "residue classes surviving the boundary conditions");
  masters->add_option("file", file, "system file")->required()->check(CLI::ExistingFile);
  masters->add_flag("--json", json, "JSON output");

  auto* reduce = app.add_subcommand("reduce", "reduce a term to master integrals");
  reduce->add_option("file", file, "system file")->required()->check(CLI::ExistingFile);
  reduce->add_option("--target", target, "term such as f(k+3,n+2)")->required();
  reduce->add_flag("--factor", factor, "factor the coefficients");
  reduce->add_flag("--json", json, "JSON output");
  reduce->add_flag("--latex", latex, "LaTeX output");

  auto* scheme = app.add_subcommand("scheme", "difference scheme for a conservation-law PDE");
  scheme->add_option("file", file, "PDE file")->required()->check(CLI::ExistingFile);
  scheme->add_flag("--show-system", show_system, "print the discretized system on stderr");
  scheme->add_flag("--json", json, "JSON output");
  scheme->add_flag("--latex", latex, "LaTeX output");

  auto* verify = app.add_subcommand("verify", "cross-check the basis with the prolongation oracle");
  verify->add_option("file", file, "system file")->required()->check(CLI::ExistingFile);
  verify->add_option("--degree", degree, "shift degree bound")->required()->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    const Format fmt = output_format(json, latex);
    if (*basis) return cmd_basis(file, reduced, fmt);
    if (*masters) return cmd_masters(file, fmt);
    if (*reduce) return cmd_reduce(file, target, factor, fmt);
    if (*scheme) return cmd_scheme(file, show_system, fmt);
    if (*verify) return cmd_verify(file, degree);
  } catch (const lda::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const lda::MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
