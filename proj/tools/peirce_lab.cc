// peirce-lab: command-line front end for the Peirce polynomial toolkit.
//
// Exit codes: 0 success, 1 a verification failed, 2 malformed input or
// usage, 3 the identity is invalid for the request (zero-sum violation,
// degenerate or irrational spectrum, bad family parameters), 4 internal
// error.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "peirce/builders.h"
#include "peirce/identity.h"
#include "peirce/io.h"
#include "peirce/peirce.h"
#include "peirce/verify.h"

namespace {

using peirce::Json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitIdentity = 3;
constexpr int kExitInternal = 4;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Source {
  std::string expr;
  std::string catalog;
  std::string params;
  std::string identity_file;
};

struct Options {
  bool json = false;
  Source source;
  std::string mode = "generic";
  unsigned degree = 0;
  std::string builder;
  std::string algebra_file;
  std::size_t idempotent = 0;
  std::size_t trials = 50;
  unsigned lin_degree = 5;
  std::uint64_t seed = 1;
};

std::string digest(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << "fnv1a64:" << std::hex << h;
  return out.str();
}

Json read_json_file(const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) throw peirce::FormatError("cannot open " + path);
    in = &file;
  }
  try {
    return Json::parse(*in);
  } catch (const Json::parse_error& e) {
    throw peirce::FormatError(path + ": " + e.what());
  }
}

// A monomial or an identity, whichever the source names.
struct Input {
  std::optional<peirce::Monomial> monomial;
  std::optional<peirce::WeightedIdentity> identity;

  Json describe() const {
    if (monomial) {
      const std::string text = peirce::format_monomial(*monomial);
      return {{"kind", "monomial"}, {"text", text}, {"digest", digest(text)}};
    }
    Json j = peirce::to_json(*identity);
    return {{"kind", "identity"}, {"identity", j}, {"digest", digest(j.dump())}};
  }
};

Input load_input(const Source& s, bool allow_monomial) {
  const int given = !s.expr.empty() + !s.catalog.empty() + !s.identity_file.empty();
  if (given != 1) {
    throw UsageError(allow_monomial
                         ? "give exactly one of MONOMIAL, --catalog or --identity"
                         : "give exactly one of --catalog or --identity");
  }
  if (!s.params.empty() && s.catalog.empty()) {
    throw UsageError("--params requires --catalog");
  }
  Input in;
  if (!s.expr.empty()) {
    if (!allow_monomial) throw UsageError("this command needs an identity");
    in.monomial = peirce::parse_monomial(s.expr);
  } else if (!s.catalog.empty()) {
    in.identity = peirce::catalog(s.catalog, peirce::parse_catalog_params(s.params));
  } else {
    in.identity = peirce::identity_from_json(read_json_file(s.identity_file));
  }
  return in;
}

Json report_header(const std::string& command, const std::vector<std::string>& argv) {
  return {{"command", command}, {"argv", argv}};
}

void emit(const Options& opt, const Json& report, const std::string& text) {
  if (opt.json) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

std::string roots_text(const peirce::SpectrumReport& s) {
  std::string out;
  for (const auto& r : s.roots) {
    if (!out.empty()) out += ", ";
    out += r.root.str();
    out += r.multiplicity == 1 ? " (simple)" : " (multiplicity " + std::to_string(r.multiplicity) + ")";
  }
  return out.empty() ? "none" : out;
}

std::string spectrum_text(const peirce::WeightedIdentity& id,
                          const peirce::SpectrumReport& s) {
  std::ostringstream out;
  out << "identity: " << id.str() << " = 0\n";
  out << "peirce_poly: " << s.peirce_poly.str() << "\n";
  out << "degenerate: " << (s.degenerate ? "true" : "false") << "\n";
  if (!s.degenerate) {
    out << "factorization: " << peirce::format_factorization({s.roots, s.residual}) << "\n";
    out << "roots: " << roots_text(s) << "\n";
    if (!s.rational()) out << "irrational_factor: " << s.residual.str() << "\n";
  }
  return out.str();
}

Json spectrum_json(const peirce::SpectrumReport& s) {
  Json j = peirce::to_json(s);
  j["factorization"] = s.degenerate ? Json(nullptr)
                                    : Json(peirce::format_factorization({s.roots, s.residual}));
  return j;
}

int cmd_poly(const Options& opt, const std::vector<std::string>& argv, bool spectrum_only) {
  const Input in = load_input(opt.source, !spectrum_only);
  Json report = report_header(spectrum_only ? "spectrum" : "poly", argv);
  report["input"] = in.describe();
  if (in.monomial) {
    const peirce::Poly1 rho = peirce::peirce_poly(*in.monomial);
    report["results"] = {{"peirce_poly", peirce::to_json(rho)}};
    emit(opt, report, rho.str() + "\n");
    return kExitOk;
  }
  const auto s = peirce::spectrum(*in.identity);
  report["results"] = spectrum_json(s);
  emit(opt, report, spectrum_text(*in.identity, s));
  return kExitOk;
}

int cmd_symbol(const Options& opt, const std::vector<std::string>& argv) {
  const Input in = load_input(opt.source, true);
  Json report = report_header("symbol", argv);
  report["input"] = in.describe();
  const peirce::Poly3 y = in.monomial ? peirce::peirce_symbol(*in.monomial)
                                      : peirce::identity_symbol(*in.identity);
  report["results"] = {{"symbol", peirce::to_json(y)}};
  emit(opt, report, y.str() + "\n");
  return kExitOk;
}

std::string fusion_text(const peirce::FusionTable& t) {
  std::ostringstream out;
  out << "mode: " << peirce::to_string(t.mode) << "\n";
  if (t.mode == peirce::FusionMode::kMetrizedOrthogonal) {
    out << "assumes: b-orthogonal Peirce components; tau_1 vanishes on Peirce "
           "components; products project onto b(u, v) c\n";
  } else {
    out << "note: sound superset; 1, lambda and mu stay allowed without tau data\n";
  }
  out << "eigenvalues:";
  for (const auto& e : t.eigenvalues) out << " " << e;
  out << "\n";
  for (std::size_t i = 0; i < t.eigenvalues.size(); ++i) {
    for (std::size_t j = i; j < t.eigenvalues.size(); ++j) {
      const auto& lambda = t.eigenvalues[i];
      const auto& mu = t.eigenvalues[j];
      out << lambda << " * " << mu << " = {";
      bool first = true;
      for (const auto& nu : t.allowed(lambda, mu)) {
        out << (first ? "" : ", ") << nu;
        first = false;
      }
      out << "}\n";
    }
  }
  if (!t.refinements_applied.empty()) {
    out << "refinements:";
    for (const auto& r : t.refinements_applied) out << " " << r;
    out << "\n";
  }
  return out.str();
}

int cmd_fusion(const Options& opt, const std::vector<std::string>& argv) {
  const Input in = load_input(opt.source, false);
  const auto mode = peirce::parse_fusion_mode(opt.mode);
  const auto table = peirce::fusion_table(*in.identity, mode);
  Json report = report_header("fusion", argv);
  report["input"] = in.describe();
  report["results"] = peirce::to_json(table);
  emit(opt, report, fusion_text(table));
  return kExitOk;
}

unsigned max_degree_from_env() {
  const char* env = std::getenv("PEIRCE_LAB_MAX_DEGREE");
  if (env == nullptr || *env == '\0') return peirce::kDefaultMaxEnumerationDegree;
  try {
    std::size_t used = 0;
    const unsigned long v = std::stoul(env, &used);
    if (used != std::string(env).size() || v == 0 || v > 64) throw std::invalid_argument(env);
    return static_cast<unsigned>(v);
  } catch (const std::logic_error&) {
    throw UsageError(std::string("PEIRCE_LAB_MAX_DEGREE must be an integer in 1..64, got '") +
                     env + "'");
  }
}

int cmd_enumerate(const Options& opt, const std::vector<std::string>& argv) {
  const unsigned max = max_degree_from_env();
  if (opt.degree < 1 || opt.degree > max) {
    throw UsageError("degree must be in 1.." + std::to_string(max) +
                     " (raise with PEIRCE_LAB_MAX_DEGREE)");
  }
  const auto list = peirce::enumerate_monomials(opt.degree, max);
  Json items = Json::array();
  std::ostringstream text;
  for (const auto& m : list) {
    items.push_back(peirce::format_monomial(m));
    text << peirce::format_monomial(m) << "\n";
  }
  text << "count: " << list.size() << "\n";
  Json report = report_header("enumerate", argv);
  report["input"] = {{"kind", "degree"}, {"degree", opt.degree}, {"max_degree", max}};
  report["results"] = {{"count", list.size()}, {"monomials", items}};
  emit(opt, report, text.str());
  return kExitOk;
}

int cmd_catalog_list(const Options& opt, const std::vector<std::string>& argv) {
  Json items = Json::array();
  std::ostringstream text;
  for (const auto& e : peirce::catalog_entries()) {
    items.push_back({{"name", e.name}, {"description", e.description}, {"params", e.params}});
    text << e.name << "\n    " << e.description << "\n";
    if (!e.params.empty()) text << "    params: " << e.params << "\n";
  }
  Json report = report_header("catalog list", argv);
  report["results"] = {{"identities", items}};
  emit(opt, report, text.str());
  return kExitOk;
}

struct Check {
  std::string name;
  std::string status;  // "pass", "fail" or "skip"
  std::string detail;
};

int cmd_verify(const Options& opt, const std::vector<std::string>& argv) {
  if (opt.builder.empty() == opt.algebra_file.empty()) {
    throw UsageError("give exactly one of --builder or --algebra");
  }
  const peirce::StructureAlgebra alg = opt.builder.empty()
                                           ? peirce::algebra_from_json(read_json_file(opt.algebra_file))
                                           : peirce::build_algebra(opt.builder);
  const Input in = load_input(opt.source, false);
  const peirce::WeightedIdentity& id = *in.identity;
  const auto mode = peirce::parse_fusion_mode(opt.mode);
  if (opt.idempotent >= alg.idempotents().size()) {
    throw UsageError("algebra lists " + std::to_string(alg.idempotents().size()) +
                     " idempotents; index " + std::to_string(opt.idempotent) + " is out of range");
  }
  const peirce::Vector& c = alg.idempotents()[opt.idempotent];

  std::vector<Check> checks;
  auto add = [&](std::string name, bool ok, std::string detail) {
    checks.push_back({std::move(name), ok ? "pass" : "fail", std::move(detail)});
  };
  auto skip = [&](std::string name, std::string why) {
    checks.push_back({std::move(name), "skip", std::move(why)});
  };

  add("idempotent", !peirce::is_zero(c) && alg.is_idempotent(c), peirce::str(c));
  const auto decomp = peirce::eigen_decomposition(alg, c);
  {
    std::ostringstream d;
    d << "char_poly " << decomp.char_poly.str() << "; eigenvalues";
    for (const auto& r : decomp.eigenvalues) {
      d << " " << r.root << " (dim " << decomp.dimension(r.root) << ")";
    }
    if (!decomp.rational()) d << "; irrational factor " << decomp.residual.str();
    add("peirce_decomposition", decomp.semisimple, d.str());
  }

  const auto ident = peirce::verify_identity(alg, id, opt.trials, opt.seed);
  add("identity", ident.passed(),
      std::to_string(ident.failures) + " of " + std::to_string(ident.trials) +
          " random vectors give a nonzero value");

  const auto spec = peirce::spectrum(id);
  if (spec.degenerate) {
    skip("spectrum_inclusion", "identity is degenerate");
  } else {
    const auto inc = peirce::spectrum_inclusion_check(decomp, id);
    std::string d = inc.violations.empty() ? "eigenvalues other than 1 are roots"
                                           : "not roots:";
    for (const auto& v : inc.violations) d += " " + v.str();
    add("spectrum_inclusion", inc.passed(), d);
  }

  std::vector<peirce::Monomial> monomials;
  for (unsigned d = 1; d <= opt.lin_degree; ++d) {
    for (const auto& m : peirce::enumerate_monomials(d)) monomials.push_back(m);
  }
  for (const auto& t : id.terms()) {
    if (t.monomial.degree() > opt.lin_degree) monomials.push_back(t.monomial);
  }
  {
    std::size_t bad = 0;
    for (const auto& m : monomials) bad += !peirce::verify_first_linearization(alg, c, m).passed;
    add("first_linearization", bad == 0,
        std::to_string(monomials.size() - bad) + " of " + std::to_string(monomials.size()) +
            " monomials satisfy D1(m; c, .) = rho(m, L_c)");
  }
  if (decomp.rational()) {
    std::size_t pairs = 0;
    std::size_t bad = 0;
    for (const auto& m : monomials) {
      for (const auto& [lambda, bl] : decomp.eigenbases) {
        for (const auto& [mu, bm] : decomp.eigenbases) {
          const auto r = peirce::verify_second_linearization(alg, decomp, m, lambda, mu);
          pairs += r.pairs_checked;
          bad += r.failures;
        }
      }
    }
    add("second_linearization", bad == 0,
        std::to_string(pairs - bad) + " of " + std::to_string(pairs) +
            " eigenvector pairs satisfy D2(m; c, x, y) = D(m; lambda, mu, L_c)(xy)");
  } else {
    skip("second_linearization", "L_c has irrational eigenvalues");
  }

  Json fusion_json = nullptr;
  if (spec.degenerate || !spec.rational()) {
    skip("fusion", spec.degenerate ? "identity is degenerate" : "identity spectrum is irrational");
  } else if (!decomp.semisimple) {
    skip("fusion", "L_c is not diagonalizable over the rationals");
  } else {
    const auto table = peirce::fusion_table(id, mode);
    fusion_json = peirce::to_json(table);
    const auto emp = peirce::fusion_empirical(alg, decomp, table);
    std::string d = "mode " + peirce::to_string(mode) + "; ";
    if (emp.violations.empty()) {
      d += "all eigenvector products respect the table";
    } else {
      d += "violations:";
      for (const auto& v : emp.violations) {
        d += " (" + v.lambda.str() + " * " + v.mu.str() + " -> " + v.nu.str() + ")";
      }
    }
    add("fusion", emp.passed(), d);
  }

  const bool hsiang_type =
      !spec.degenerate && spec.roots.size() == 3 && spec.contains(peirce::Rational(-1)) &&
      spec.contains(peirce::Rational(-1, 2)) && spec.contains(peirce::Rational(1, 2));
  if (hsiang_type) {
    const auto dims = peirce::dimension_constraints_check(decomp);
    add("dimension_constraints", dims.passed(),
        "n1=" + std::to_string(dims.n1) + " n2=" + std::to_string(dims.n2) +
            " n3=" + std::to_string(dims.n3) + " dim=" + std::to_string(dims.dim));
  } else {
    skip("dimension_constraints", "identity spectrum is not {-1, -1/2, 1/2}");
  }

  bool passed = true;
  Json checks_json = Json::array();
  std::ostringstream text;
  text << "algebra: " << (alg.name().empty() ? opt.algebra_file : alg.name())
       << " (dim " << alg.dim() << "), idempotent " << opt.idempotent << "\n";
  text << "identity: " << id.str() << " = 0\n";
  for (const auto& ch : checks) {
    passed &= ch.status != "fail";
    checks_json.push_back({{"name", ch.name}, {"status", ch.status}, {"detail", ch.detail}});
    text << ch.status << "  " << ch.name << ": " << ch.detail << "\n";
  }
  text << (passed ? "PASSED" : "FAILED") << "\n";

  Json report = report_header("verify", argv);
  Json input = in.describe();
  input["algebra"] = alg.name().empty() ? opt.algebra_file : alg.name();
  input["idempotent"] = opt.idempotent;
  report["input"] = input;
  report["results"] = {{"decomposition", peirce::to_json(decomp)},
                       {"spectrum", spectrum_json(spec)},
                       {"fusion_table", fusion_json},
                       {"checks", checks_json},
                       {"passed", passed}};
  emit(opt, report, text.str());
  return passed ? kExitOk : kExitFailed;
}

void add_source(CLI::App* cmd, Source& s, bool positional) {
  if (positional) cmd->add_option("monomial", s.expr, "Monomial, e.g. \"z^2 * z^2\"");
  cmd->add_option("--catalog", s.catalog, "Named identity (see `catalog list`)");
  cmd->add_option("--params", s.params, "Family parameters k=v,...");
  cmd->add_option("--identity", s.identity_file, "Identity JSON file ('-' for stdin)");
}

int report_error(const Options& opt, const std::string& type, const std::string& message,
                 int code) {
  std::cerr << "error: " << message << "\n";
  if (opt.json) {
    Json j = {{"error", {{"type", type}, {"message", message}}}, {"exit_code", code}};
    std::cout << j.dump(2) << "\n";
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Peirce polynomials, symbols, spectra and fusion tables of algebra identities"};
  app.require_subcommand(1);
  Options opt;
  std::vector<std::string> args(argv + 1, argv + argc);

  auto* poly = app.add_subcommand("poly", "Peirce polynomial of a monomial or identity");
  auto* spec = app.add_subcommand("spectrum", "Peirce spectrum of an identity");
  auto* symbol = app.add_subcommand("symbol", "Peirce symbol of a monomial or identity");
  auto* fusion = app.add_subcommand("fusion", "Fusion table of an identity");
  auto* enumerate = app.add_subcommand("enumerate", "All monomials of a given degree");
  auto* verify = app.add_subcommand("verify", "Check the predictions on a concrete algebra");
  auto* cat = app.add_subcommand("catalog", "Named identity families");
  auto* cat_list = cat->add_subcommand("list", "List catalog identities");
  cat->require_subcommand(1);

  for (auto* cmd : {poly, spec, symbol, fusion, enumerate, verify, cat_list}) {
    cmd->add_flag("--json", opt.json, "Machine-readable output");
  }
  add_source(poly, opt.source, true);
  add_source(spec, opt.source, false);
  add_source(symbol, opt.source, true);
  add_source(fusion, opt.source, false);
  add_source(verify, opt.source, false);
  for (auto* cmd : {fusion, verify}) {
    cmd->add_option("--mode", opt.mode, "generic | metrized")->capture_default_str();
  }
  enumerate->add_option("degree", opt.degree, "Degree")->required();
  verify->add_option("--builder", opt.builder, "jordan_sym2 | jordan_sym3 | spin<d> | hsiang_sym3");
  verify->add_option("--algebra", opt.algebra_file, "Algebra JSON file ('-' for stdin)");
  verify->add_option("--idempotent", opt.idempotent, "Index into the algebra's idempotents")
      ->capture_default_str();
  verify->add_option("--trials", opt.trials, "Random vectors for the identity check")
      ->capture_default_str();
  verify->add_option("--degree", opt.lin_degree, "Largest monomial degree for linearization checks")
      ->capture_default_str();
  verify->add_option("--seed", opt.seed, "Random seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*poly) return cmd_poly(opt, args, false);
    if (*spec) return cmd_poly(opt, args, true);
    if (*symbol) return cmd_symbol(opt, args);
    if (*fusion) return cmd_fusion(opt, args);
    if (*enumerate) return cmd_enumerate(opt, args);
    if (*verify) return cmd_verify(opt, args);
    if (*cat_list) return cmd_catalog_list(opt, args);
  } catch (const UsageError& e) {
    return report_error(opt, "usage", e.what(), kExitInput);
  } catch (const peirce::ParseError& e) {
    return report_error(opt, "parse", e.what(), kExitInput);
  } catch (const peirce::FormatError& e) {
    return report_error(opt, "format", e.what(), kExitInput);
  } catch (const peirce::AlgebraError& e) {
    return report_error(opt, "algebra", e.what(), kExitInput);
  } catch (const peirce::ZeroSumViolation& e) {
    return report_error(opt, "zero_sum_violation", e.what(), kExitIdentity);
  } catch (const peirce::EmptyIdentity& e) {
    return report_error(opt, "empty_identity", e.what(), kExitIdentity);
  } catch (const peirce::DegenerateIdentity& e) {
    return report_error(opt, "degenerate_identity", e.what(), kExitIdentity);
  } catch (const peirce::IrrationalSpectrum& e) {
    return report_error(opt, "irrational_spectrum", e.what(), kExitIdentity);
  } catch (const peirce::CatalogError& e) {
    return report_error(opt, "catalog_parameters", e.what(), kExitIdentity);
  } catch (const std::out_of_range& e) {
    return report_error(opt, "unknown_name", e.what(), kExitInput);
  } catch (const std::invalid_argument& e) {
    return report_error(opt, "invalid_argument", e.what(), kExitInput);
  } catch (const std::exception& e) {
    return report_error(opt, "internal", e.what(), kExitInternal);
  }
  return kExitInput;
}
