#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "peirce/algebra.h"
#include "peirce/identity.h"

namespace peirce {

// D^1(m; c, y) = rho(m, L_c) y for all y, compared as matrices.
struct FirstLinearizationReport {
  Monomial monomial;
  Matrix d1_operator;  // columns D^1(m; c, e_j)
  Matrix rho_at_lc;    // rho(m, L_c)
  bool passed = false;
};

FirstLinearizationReport verify_first_linearization(const StructureAlgebra& alg,
                                                    const Vector& c,
                                                    const Monomial& m);

// D^2(m; c, x, y) = D(m; lambda, mu, L_c)(xy) over eigenbasis pairs
// x in A_c(lambda), y in A_c(mu).
struct SecondLinearizationReport {
  Monomial monomial;
  Rational lambda;
  Rational mu;
  std::size_t pairs_checked = 0;
  std::size_t failures = 0;
  bool passed() const { return failures == 0; }
};

// Throws std::invalid_argument if lambda or mu is not an eigenvalue in the
// decomposition.
SecondLinearizationReport verify_second_linearization(
    const StructureAlgebra& alg, const PeirceDecomposition& decomp,
    const Monomial& m, const Rational& lambda, const Rational& mu);

struct IdentityCheckReport {
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::optional<Vector> first_counterexample;
  std::optional<Vector> first_value;
  bool passed() const { return failures == 0; }
};

// Evaluates the identity at `trials` random rational vectors drawn from a
// generator seeded with `seed`. Throws UnrealizableWeight.
IdentityCheckReport verify_identity(const StructureAlgebra& alg,
                                    const WeightedIdentity& identity,
                                    std::size_t trials, std::uint64_t seed = 1);

// Eigenvalues of L_c other than 1 must be roots of the identity's Peirce
// polynomial.
struct SpectrumInclusionReport {
  std::vector<Rational> algebra_eigenvalues;
  std::vector<Rational> identity_roots;
  std::vector<Rational> violations;
  bool degenerate = false;  // nothing to check
  bool passed() const { return violations.empty(); }
};

SpectrumInclusionReport spectrum_inclusion_check(const PeirceDecomposition& decomp,
                                                 const WeightedIdentity& identity);

struct FusionViolation {
  Rational lambda;
  Rational mu;
  Rational nu;
};

struct EmpiricalFusionReport {
  // Eigenvalue pairs (lambda <= mu) mapped to the components observed in
  // products of eigenbasis vectors.
  std::map<std::pair<Rational, Rational>, std::set<Rational>> observed;
  std::vector<FusionViolation> violations;
  bool passed() const { return violations.empty(); }
};

// Requires a semisimple decomposition (throws std::logic_error otherwise).
// An eigenvalue of L_c missing from the predicted table makes every product
// involving it a violation.
EmpiricalFusionReport fusion_empirical(const StructureAlgebra& alg,
                                       const PeirceDecomposition& decomp,
                                       const FusionTable& predicted);

// Peirce dimension constraints of Hsiang-type spectra, with n1, n2, n3 the
// dimensions of A_c(-1), A_c(-1/2), A_c(1/2):
//   n3 = 2 n1 + n2 - 2  and  dim = 3 n1 + 2 n2 - 1.
struct DimensionReport {
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  std::size_t n3 = 0;
  std::size_t dim = 0;
  bool unexpected_eigenvalues = false;  // spectrum outside {1, -1, -1/2, 1/2}
  bool n3_relation = false;
  bool dim_relation = false;
  bool passed() const { return !unexpected_eigenvalues && n3_relation && dim_relation; }
};

DimensionReport dimension_constraints_check(std::size_t n1, std::size_t n2,
                                            std::size_t n3, std::size_t dim);
DimensionReport dimension_constraints_check(const PeirceDecomposition& decomp);

}  // namespace peirce
