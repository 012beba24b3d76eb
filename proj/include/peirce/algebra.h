#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "peirce/identity.h"
#include "peirce/linalg.h"
#include "peirce/monomial.h"
#include "peirce/poly1.h"
#include "peirce/rational.h"

namespace peirce {

class AlgebraError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The identity uses omega or b but the algebra does not provide it.
class UnrealizableWeight : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

// Structure constants: constants[i][j][k] is the e_k coordinate of e_i e_j.
using StructureConstants = std::vector<std::vector<Vector>>;

// Finite-dimensional commutative algebra over the rationals, immutable after
// construction.
class StructureAlgebra {
 public:
  // Validates shapes, commutativity, symmetry of the form and the associating
  // law b(xy, z) = b(x, yz) on basis triples, and that every listed
  // idempotent satisfies c c = c. Throws AlgebraError.
  static StructureAlgebra make(StructureConstants constants,
                               std::optional<Matrix> bilinear_form = std::nullopt,
                               std::optional<Vector> weight = std::nullopt,
                               std::vector<Vector> idempotents = {},
                               std::string name = "");

  std::size_t dim() const { return constants_.size(); }
  const std::string& name() const { return name_; }
  const StructureConstants& constants() const { return constants_; }
  const std::optional<Matrix>& bilinear_form() const { return form_; }
  const std::optional<Vector>& weight() const { return weight_; }
  // Idempotents supplied with the algebra, in input order.
  const std::vector<Vector>& idempotents() const { return idempotents_; }

  Vector basis_vector(std::size_t i) const;

  // Throw std::invalid_argument on dimension mismatch.
  Vector multiply(const Vector& x, const Vector& y) const;
  // L_c as a matrix acting on coordinate columns.
  Matrix mult_operator(const Vector& c) const;
  bool is_idempotent(const Vector& c) const;
  // Throw UnrealizableWeight when the form or weight is absent.
  Rational form(const Vector& x, const Vector& y) const;
  Rational omega(const Vector& x) const;

 private:
  StructureAlgebra() = default;
  void check_size(const Vector& v) const;

  StructureConstants constants_;
  std::optional<Matrix> form_;
  std::optional<Vector> weight_;
  std::vector<Vector> idempotents_;
  std::string name_;
};

// Value of the monomial tree with every leaf set to x.
Vector evaluate_monomial(const StructureAlgebra& alg, const Monomial& m,
                         const Vector& x);

// D^k(m; x, y): sum over all labelings with exactly k leaves set to y and the
// rest to x of the tree value. Throws std::out_of_range unless
// 0 <= k <= degree(m).
Vector linearize(const StructureAlgebra& alg, const Monomial& m, unsigned k,
                 const Vector& x, const Vector& y);

// All D^0, ..., D^deg at once.
std::vector<Vector> linearizations(const StructureAlgebra& alg,
                                   const Monomial& m, const Vector& x,
                                   const Vector& y);

// D^2(m; c, x, y) = D^2(m; c, x + y) - D^2(m; c, x) - D^2(m; c, y).
Vector second_linearization(const StructureAlgebra& alg, const Monomial& m,
                            const Vector& c, const Vector& x, const Vector& y);

// P(x) = sum coeff * omega(x)^k * prod b(x, x^m) * x^alpha. Throws
// UnrealizableWeight.
Vector evaluate_identity(const StructureAlgebra& alg,
                         const WeightedIdentity& identity, const Vector& x);

struct PeirceDecomposition {
  Vector idempotent;
  Poly1 char_poly;
  // Rational eigenvalues ascending, with algebraic multiplicities.
  std::vector<RootMultiplicity> eigenvalues;
  std::map<Rational, std::vector<Vector>> eigenbases;
  // Factor of the characteristic polynomial without rational roots.
  Poly1 residual;
  bool semisimple = false;

  bool rational() const { return residual.degree() < 1; }
  std::size_t dimension(const Rational& lambda) const;
  // Components of v along each eigenspace (only nonzero ones). Requires a
  // semisimple decomposition; throws std::logic_error otherwise.
  std::map<Rational, Vector> components(const Vector& v) const;

 private:
  friend PeirceDecomposition eigen_decomposition(const StructureAlgebra&,
                                                 const Vector&);
  std::vector<Rational> column_eigenvalue_;
  std::vector<Vector> columns_;
  Matrix inverse_basis_;
};

// Exact Peirce decomposition of L_c. Throws AlgebraError if c is zero or not
// idempotent. When the spectrum is not rational the result is partial:
// residual is nonconstant and semisimple is false.
PeirceDecomposition eigen_decomposition(const StructureAlgebra& alg,
                                        const Vector& c);

// Random vector with entries num/den, |num| <= 6, 1 <= den <= 4.
Vector random_vector(std::size_t dim, std::mt19937_64& rng);

}  // namespace peirce
