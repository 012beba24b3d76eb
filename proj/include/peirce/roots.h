#pragma once

#include <string>
#include <vector>

#include "peirce/poly1.h"
#include "peirce/rational.h"

namespace peirce {

struct RootMultiplicity {
  Rational root;
  unsigned multiplicity = 0;

  friend bool operator==(const RootMultiplicity&,
                         const RootMultiplicity&) = default;
};

struct RationalRoots {
  // Ascending by root value.
  std::vector<RootMultiplicity> roots;
  // f == residual * prod (t - root)^multiplicity, exactly; residual has no
  // rational roots. It keeps the leading coefficient of f.
  Poly1 residual;
};

// Extracts all rational roots of a nonzero polynomial with multiplicities.
// Throws std::invalid_argument on the zero polynomial.
//
// Candidates come from real-root isolation of the square-free part (Sturm
// sequences, exact bisection). After clearing denominators to an integer
// primitive polynomial with leading coefficient L, any rational root r has
// L*r integral, so each isolating interval is shrunk until it holds at most
// one candidate of the form s/L, which is then tested exactly. No integer
// factorization is required.
RationalRoots rational_roots(const Poly1& f);

// Renders residual * prod (t - root)^multiplicity with integer linear
// factors, e.g. "2*(t + 1)*(2*t + 1)*(2*t - 1)".
std::string format_factorization(const RationalRoots& factored);

// Integer primitive polynomial with positive leading coefficient that is a
// rational multiple of f.
Poly1 primitive_part(const Poly1& f);

// Number of distinct real roots of a square-free f in the half-open interval
// (lo, hi].
int count_real_roots(const Poly1& square_free, const Rational& lo,
                     const Rational& hi);

}  // namespace peirce
