#pragma once

#include <array>
#include <map>
#include <string>

#include "peirce/poly1.h"
#include "peirce/rational.h"

namespace peirce {

// Variables of the trivariate ring Q[a, b, p]. In fusion computations a and b
// carry the two input eigenvalues and p the output eigenvalue.
enum class Var { kA = 0, kB = 1, kP = 2 };

using Exponents = std::array<unsigned, 3>;  // indexed by Var

// Orders exponent vectors lexicographically on (p, a, b), largest first.
struct LexPAB {
  bool operator()(const Exponents& x, const Exponents& y) const {
    if (x[2] != y[2]) return x[2] > y[2];
    if (x[0] != y[0]) return x[0] > y[0];
    return x[1] > y[1];
  }
};

// Sparse polynomial in (a, b, p) with rational coefficients. No zero
// coefficients are stored.
class Poly3 {
 public:
  using Terms = std::map<Exponents, Rational, LexPAB>;

  Poly3() = default;
  Poly3(Rational constant);  // NOLINT(google-explicit-constructor)
  Poly3(int constant) : Poly3(Rational(constant)) {}  // NOLINT

  static Poly3 term(const Rational& coeff, const Exponents& exps);
  static Poly3 var(Var v);
  // Embeds f(t) as f(v).
  static Poly3 from_poly1(const Poly1& f, Var v);

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  Rational coeff(const Exponents& exps) const;
  unsigned degree_in(Var v) const;

  Poly3& operator+=(const Poly3& o);
  Poly3& operator-=(const Poly3& o);
  Poly3& operator*=(const Poly3& o);
  Poly3& operator*=(const Rational& s);

  friend Poly3 operator+(Poly3 x, const Poly3& y) { return x += y; }
  friend Poly3 operator-(Poly3 x, const Poly3& y) { return x -= y; }
  friend Poly3 operator*(Poly3 x, const Poly3& y) { return x *= y; }
  friend Poly3 operator*(Poly3 x, const Rational& s) { return x *= s; }
  friend Poly3 operator*(const Rational& s, Poly3 x) { return x *= s; }
  Poly3 operator-() const;

  friend bool operator==(const Poly3& x, const Poly3& y) = default;

  Rational eval(const Rational& a, const Rational& b, const Rational& p) const;
  // Substitutes a value for one variable; the result no longer depends on it.
  Poly3 substitute(Var v, const Rational& value) const;
  // Fixes a and b, leaving a polynomial in p.
  Poly1 specialize_ab(const Rational& a, const Rational& b) const;
  Poly3 derivative(Var v) const;
  // Swaps the roles of two variables.
  Poly3 swap(Var v, Var w) const;

  // Descending lex order on (p, a, b); variables printed as a, b, p.
  std::string str() const;

 private:
  void add_term(const Exponents& e, const Rational& c);
  Terms terms_;
};

// f(g) where g is a trivariate polynomial.
Poly3 compose(const Poly1& f, const Poly3& inner);

// Exact multivariate division with respect to the (p, a, b) lex order.
// Throws InexactDivision when g does not divide f.
Poly3 divide_exact(const Poly3& f, const Poly3& g);

// (f(x) - f(y)) / (x - y) for two distinct variables x, y.
Poly3 divided_difference(const Poly1& f, Var x, Var y);

}  // namespace peirce
