#pragma once

#include <span>

#include "peirce/monomial.h"
#include "peirce/poly1.h"
#include "peirce/poly3.h"
#include "peirce/rational.h"

namespace peirce {

// Peirce polynomial of a monomial in the variable t (written q in the
// literature): rho(z) = 1, rho(x y) = t (rho(x) + rho(y)).
// Results are memoized per canonical monomial; safe to call concurrently.
Poly1 peirce_poly(const Monomial& m);

// Peirce symbol D(m; a, b, p):
//   D(z) = 0,
//   D(x y) = p (D(x) + D(y)) + rho(x, a) rho(y, b) + rho(x, b) rho(y, a).
// Symmetric under a <-> b. Memoized like peirce_poly.
Poly3 peirce_symbol(const Monomial& m);

// Closed forms for z^n = z^(n-1) z and z^[n] = z^[n-1] z^[n-1], computed by
// exact division. All throw std::invalid_argument for n = 0.
//
//   rho(z^n)   = (2 t^n - t^(n-1) - t) / (t - 1)
//   rho(z^[n]) = (2 t)^(n-1)
//   D(z^n)     = R(p, a) + R(p, b) - R(p, 1/2),  R(x, y) = divided difference
//                of rho(z^n)
//   D(z^[n])   = 2^k (p^k - (2ab)^k) / (p - 2ab),  k = n - 1
Poly1 principal_peirce_closed(unsigned n);
Poly1 plenary_peirce_closed(unsigned n);
Poly3 principal_symbol_closed(unsigned n);
Poly3 plenary_symbol_closed(unsigned n);

// (rho(m, p) - rho(m, a)) / (p - a) as a polynomial in a and p. Agrees with
// peirce_symbol(m) at b = 1/2.
Poly3 half_specialization(const Monomial& m);

// Symmetrized Peirce operator over all leaf permutations, in closed form:
// (deg - 1)! * sum(leaf_values) * rho(m, q). Throws std::invalid_argument
// when leaf_values.size() != degree(m).
Rational total_peirce_value(const Monomial& m,
                            std::span<const Rational> leaf_values,
                            const Rational& q);

}  // namespace peirce
