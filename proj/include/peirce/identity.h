#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "peirce/monomial.h"
#include "peirce/poly1.h"
#include "peirce/poly3.h"
#include "peirce/rational.h"
#include "peirce/roots.h"

namespace peirce {

// ---------------------------------------------------------------------------
// Errors

class IdentityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Coefficients at an idempotent do not sum to zero, so the term list cannot
// vanish at any nonzero idempotent.
class ZeroSumViolation : public IdentityError {
 public:
  explicit ZeroSumViolation(const Rational& sum)
      : IdentityError("coefficients at the idempotent sum to " + sum.str() +
                      ", expected 0"),
        sum_(sum) {}
  const Rational& sum() const { return sum_; }

 private:
  Rational sum_;
};

class EmptyIdentity : public IdentityError {
 public:
  EmptyIdentity() : IdentityError("identity has no nonzero terms") {}
};

class DegenerateIdentity : public IdentityError {
 public:
  DegenerateIdentity()
      : IdentityError("identity is degenerate: its Peirce polynomial is zero") {}
};

// Peirce polynomial has a factor without rational roots; fusion tables can
// only be enumerated over rational spectra.
class IrrationalSpectrum : public IdentityError {
 public:
  explicit IrrationalSpectrum(const Poly1& residual)
      : IdentityError("Peirce polynomial has irrational factor " +
                      residual.str()),
        residual_(residual) {}
  const Poly1& residual() const { return residual_; }

 private:
  Poly1 residual_;
};

// A nonzero Peirce polynomial of a validated identity that does not vanish at
// 1/2. Cannot happen for correct inputs.
class InternalHalfRootMissing : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Family parameters violating a defining constraint.
class CatalogError : public IdentityError {
 public:
  using IdentityError::IdentityError;
};

// ---------------------------------------------------------------------------
// Identities

// Polynomial-map coefficient phi(z) = gamma * omega(z)^baric *
// prod_i b(z, z^{m_i}), with gamma carried on the term. The three elementary
// kinds are constant, baric power and a single bilinear factor; products of
// identities combine them. At a nonzero idempotent with omega(c) = 1 and
// b(c, c) = 1 every weight evaluates to 1.
struct Weight {
  unsigned baric = 0;
  std::vector<Monomial> bilinear;  // sorted

  static Weight constant() { return {}; }
  static Weight baric_power(unsigned k) { return {k, {}}; }
  static Weight bilinear_with(const Monomial& m) { return {0, {m}}; }

  bool is_constant() const { return baric == 0 && bilinear.empty(); }
  // "constant", "baric", "bilinear" or "product".
  std::string kind() const;
  std::string str() const;

  friend Weight operator*(const Weight& x, const Weight& y);
  friend bool operator==(const Weight&, const Weight&) = default;
  friend std::strong_ordering operator<=>(const Weight& x, const Weight& y);
};

struct IdentityTerm {
  Rational coeff;  // phi(c), the coefficient value at a normalized idempotent
  Monomial monomial;
  Weight weight;

  friend bool operator==(const IdentityTerm&, const IdentityTerm&) = default;
};

// Sums coefficients of terms sharing (monomial, weight) and drops zeros.
// Result is sorted by monomial then weight.
std::vector<IdentityTerm> merge_terms(std::vector<IdentityTerm> terms);

// Peirce polynomial sum(coeff * rho(monomial)) of an arbitrary term list.
Poly1 terms_peirce_poly(std::span<const IdentityTerm> terms);

// Free product of two term lists, merged.
std::vector<IdentityTerm> multiply_terms(std::span<const IdentityTerm> x,
                                         std::span<const IdentityTerm> y);

// P(z) = sum phi(z) z^alpha = 0, with coefficients given by their values at a
// normalized idempotent. Validated: nonempty and coefficients sum to zero.
class WeightedIdentity {
 public:
  // Throws EmptyIdentity or ZeroSumViolation.
  static WeightedIdentity make(std::vector<IdentityTerm> terms,
                               std::optional<std::string> name = std::nullopt);

  const std::vector<IdentityTerm>& terms() const { return terms_; }
  const std::optional<std::string>& name() const { return name_; }
  unsigned max_degree() const;
  bool uses_baric() const;
  bool uses_bilinear() const;

  // Human-readable form, e.g. "z^4 - z^[3]".
  std::string str() const;

 private:
  WeightedIdentity() = default;
  std::vector<IdentityTerm> terms_;
  std::optional<std::string> name_;
};

Poly1 identity_peirce_poly(const WeightedIdentity& identity);

// Y(a, b, p) = sum phi(c) D(z^alpha; a, b, p).
Poly3 identity_symbol(const WeightedIdentity& identity);

struct SpectrumReport {
  Poly1 peirce_poly;
  std::vector<RootMultiplicity> roots;  // empty when degenerate
  Poly1 residual;                       // zero when degenerate
  bool degenerate = false;

  bool rational() const { return degenerate || residual.degree() < 1; }
  bool contains(const Rational& value) const;
  std::optional<unsigned> multiplicity(const Rational& value) const;
};

// Throws InternalHalfRootMissing if a nondegenerate Peirce polynomial does not
// vanish at 1/2.
SpectrumReport spectrum(const WeightedIdentity& identity);

WeightedIdentity multiply_identities(const WeightedIdentity& x,
                                     const WeightedIdentity& y);

// ---------------------------------------------------------------------------
// Fusion tables

enum class FusionMode { kGeneric, kMetrizedOrthogonal };

std::string to_string(FusionMode mode);
// Accepts "generic", "metrized" and "metrized_orthogonal".
FusionMode parse_fusion_mode(const std::string& text);

class FusionTable {
 public:
  using Key = std::pair<Rational, Rational>;

  FusionMode mode = FusionMode::kGeneric;
  // 1 first, then the remaining eigenvalues in ascending order.
  std::vector<Rational> eigenvalues;
  // Stored for lambda <= mu in eigenvalue order; use allowed().
  std::map<Key, std::set<Rational>> entries;
  std::vector<std::string> refinements_applied;

  // Symmetric lookup. Throws std::out_of_range for unknown eigenvalues.
  const std::set<Rational>& allowed(const Rational& lambda,
                                    const Rational& mu) const;
  bool has_eigenvalue(const Rational& value) const;
};

// Generic mode: lambda * mu = {nu : Y(lambda, mu, nu) = 0} plus {1, lambda,
// mu}, over nu in the identity spectrum with 1 adjoined; then for each simple
// root lambda != 1, lambda is removed from lambda * 1/2.
//
// Metrized-orthogonal mode assumes b-orthogonal Peirce components and a
// vanishing tau_1 term, so the right-hand side of the second linearization is
// proportional to b(u, v) c: row 1 is {mu}; distinct lambda, mu give
// {nu : Y = 0}; lambda * lambda gives {nu != 1 : Y = 0} plus {1}.
//
// Throws DegenerateIdentity or IrrationalSpectrum.
FusionTable fusion_table(const WeightedIdentity& identity, FusionMode mode);

// ---------------------------------------------------------------------------
// Catalog

using CatalogParams = std::map<std::string, std::string>;

struct CatalogEntry {
  std::string name;
  std::string description;
  std::string params;  // "key=default, ..." or empty
};

const std::vector<CatalogEntry>& catalog_entries();

// Builds a named identity family. Throws std::out_of_range for an unknown
// name and CatalogError for bad or unknown parameters.
WeightedIdentity catalog(const std::string& name,
                         const CatalogParams& params = {});

// Parses "k=v,k2=v2" into a parameter map. Throws CatalogError.
CatalogParams parse_catalog_params(const std::string& text);

// Parses a colon-separated rational list such as "1:-1:0".
std::vector<Rational> parse_rational_list(const std::string& text);

// ---------------------------------------------------------------------------
// Train algebras

enum class TrainFamily { kPrincipal, kPlenary };

struct TrainClosedForm {
  Poly1 peirce_poly;
  // Principal trains: T(t) with rho = (2t - 1) T(t). Empty for plenary.
  std::optional<Poly1> cofactor;
  Poly3 symbol;
};

// Identity of a train algebra of rank n = gamma.size() with gamma[0] = 1 and
// sum(gamma) = 0:
//   principal: sum_k gamma[n-k] omega^(n-k) z^k,
//   plenary:   sum_k gamma[n-k] omega^(2^(n-1) - 2^(k-1)) z^[k].
// Throws CatalogError on constraint violations.
WeightedIdentity train_identity(TrainFamily family,
                                std::span<const Rational> gamma);

// Closed forms of rho and Y for train identities:
//   principal: rho = (2t - 1) T(t), T(t) = sum_k gamma[n-k] t^(k-1) / (t - 1),
//              Y = R(p, a) + R(p, b) - R(p, 1/2) with R the divided
//              difference of rho;
//   plenary:   rho = sum_k gamma[n-k] (2t)^(k-1),
//              Y = (rho(p) - rho(2ab)) / (p - 2ab).
TrainClosedForm train_closed_forms(TrainFamily family,
                                   std::span<const Rational> gamma);

}  // namespace peirce
