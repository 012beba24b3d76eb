#include "peirce/verify.h"

#include <algorithm>
#include <set>

#include "peirce/peirce.h"

namespace peirce {

FirstLinearizationReport verify_first_linearization(const StructureAlgebra& alg,
                                                    const Vector& c,
                                                    const Monomial& m) {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < alg.dim(); ++j) {
    cols.push_back(linearize(alg, m, 1, c, alg.basis_vector(j)));
  }
  FirstLinearizationReport report{m, Matrix::from_columns(cols, alg.dim()),
                                  eval_at(peirce_poly(m), alg.mult_operator(c))};
  report.passed = report.d1_operator == report.rho_at_lc;
  return report;
}

SecondLinearizationReport verify_second_linearization(
    const StructureAlgebra& alg, const PeirceDecomposition& decomp,
    const Monomial& m, const Rational& lambda, const Rational& mu) {
  auto xs = decomp.eigenbases.find(lambda);
  auto ys = decomp.eigenbases.find(mu);
  if (xs == decomp.eigenbases.end() || ys == decomp.eigenbases.end()) {
    throw std::invalid_argument("eigenvalue not present in the decomposition");
  }
  const Matrix lc = alg.mult_operator(decomp.idempotent);
  const Poly1 symbol = peirce_symbol(m).specialize_ab(lambda, mu);
  SecondLinearizationReport report{m, lambda, mu};
  for (const auto& x : xs->second) {
    for (const auto& y : ys->second) {
      const Vector lhs = second_linearization(alg, m, decomp.idempotent, x, y);
      const Vector rhs = apply_poly(symbol, lc, alg.multiply(x, y));
      ++report.pairs_checked;
      if (lhs != rhs) ++report.failures;
    }
  }
  return report;
}

IdentityCheckReport verify_identity(const StructureAlgebra& alg,
                                    const WeightedIdentity& identity,
                                    std::size_t trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  IdentityCheckReport report;
  for (std::size_t i = 0; i < trials; ++i) {
    const Vector x = random_vector(alg.dim(), rng);
    const Vector value = evaluate_identity(alg, identity, x);
    ++report.trials;
    if (!is_zero(value)) {
      if (report.failures == 0) {
        report.first_counterexample = x;
        report.first_value = value;
      }
      ++report.failures;
    }
  }
  return report;
}

SpectrumInclusionReport spectrum_inclusion_check(const PeirceDecomposition& decomp,
                                                 const WeightedIdentity& identity) {
  SpectrumInclusionReport report;
  for (const auto& r : decomp.eigenvalues) report.algebra_eigenvalues.push_back(r.root);
  const SpectrumReport spec = spectrum(identity);
  if (spec.degenerate) {
    report.degenerate = true;
    return report;
  }
  for (const auto& r : spec.roots) report.identity_roots.push_back(r.root);
  for (const auto& lambda : report.algebra_eigenvalues) {
    if (lambda != Rational(1) && !spec.peirce_poly.eval(lambda).is_zero()) {
      report.violations.push_back(lambda);
    }
  }
  return report;
}

EmpiricalFusionReport fusion_empirical(const StructureAlgebra& alg,
                                       const PeirceDecomposition& decomp,
                                       const FusionTable& predicted) {
  if (!decomp.semisimple) {
    throw std::logic_error("empirical fusion requires a semisimple decomposition");
  }
  EmpiricalFusionReport report;
  for (auto i = decomp.eigenbases.begin(); i != decomp.eigenbases.end(); ++i) {
    for (auto j = i; j != decomp.eigenbases.end(); ++j) {
      const Rational& lambda = i->first;
      const Rational& mu = j->first;
      auto& seen = report.observed[{lambda, mu}];
      const bool known = predicted.has_eigenvalue(lambda) && predicted.has_eigenvalue(mu);
      for (const auto& x : i->second) {
        for (const auto& y : j->second) {
          for (const auto& [nu, part] : decomp.components(alg.multiply(x, y))) {
            seen.insert(nu);
          }
        }
      }
      for (const auto& nu : seen) {
        if (!known || !predicted.allowed(lambda, mu).contains(nu)) {
          report.violations.push_back({lambda, mu, nu});
        }
      }
    }
  }
  return report;
}

DimensionReport dimension_constraints_check(std::size_t n1, std::size_t n2,
                                            std::size_t n3, std::size_t dim) {
  DimensionReport r{n1, n2, n3, dim};
  r.n3_relation = static_cast<long>(n3) == 2 * static_cast<long>(n1) +
                                               static_cast<long>(n2) - 2;
  r.dim_relation = static_cast<long>(dim) == 3 * static_cast<long>(n1) +
                                                 2 * static_cast<long>(n2) - 1;
  return r;
}

DimensionReport dimension_constraints_check(const PeirceDecomposition& decomp) {
  const auto dim = static_cast<std::size_t>(decomp.char_poly.degree());
  bool unexpected = !decomp.semisimple;
  const std::set<Rational> allowed = {Rational(1), Rational(-1), Rational(-1, 2),
                                      Rational(1, 2)};
  for (const auto& [lambda, basis] : decomp.eigenbases) {
    if (!allowed.contains(lambda) && !basis.empty()) unexpected = true;
  }
  auto r = dimension_constraints_check(decomp.dimension(Rational(-1)),
                                       decomp.dimension(Rational(-1, 2)),
                                       decomp.dimension(Rational(1, 2)), dim);
  r.unexpected_eigenvalues = unexpected;
  return r;
}

}  // namespace peirce
