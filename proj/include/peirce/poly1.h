#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "peirce/rational.h"

namespace peirce {

// Raised when an exact division leaves a nonzero remainder. Every closed form
// in this library divides exactly, so seeing this means a bug upstream.
class InexactDivision : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Dense univariate polynomial over the rationals. Coefficient i multiplies
// t^i. The zero polynomial has no stored coefficients; otherwise the top
// coefficient is nonzero.
class Poly1 {
 public:
  Poly1() = default;
  Poly1(Rational constant);  // NOLINT(google-explicit-constructor)
  Poly1(int constant) : Poly1(Rational(constant)) {}  // NOLINT
  // Coefficients in ascending order of exponent.
  explicit Poly1(std::vector<Rational> ascending);
  Poly1(std::initializer_list<Rational> ascending)
      : Poly1(std::vector<Rational>(ascending)) {}

  static Poly1 monomial(const Rational& coeff, std::size_t exponent);
  static Poly1 variable() { return monomial(Rational(1), 1); }
  // t - root
  static Poly1 linear_factor(const Rational& root);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  // Degree of the zero polynomial is reported as -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(std::size_t exponent) const;
  Rational leading() const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Poly1& operator+=(const Poly1& o);
  Poly1& operator-=(const Poly1& o);
  Poly1& operator*=(const Poly1& o);
  Poly1& operator*=(const Rational& s);

  friend Poly1 operator+(Poly1 a, const Poly1& b) { return a += b; }
  friend Poly1 operator-(Poly1 a, const Poly1& b) { return a -= b; }
  friend Poly1 operator*(Poly1 a, const Poly1& b) { return a *= b; }
  friend Poly1 operator*(Poly1 a, const Rational& s) { return a *= s; }
  friend Poly1 operator*(const Rational& s, Poly1 a) { return a *= s; }
  Poly1 operator-() const;

  friend bool operator==(const Poly1& a, const Poly1& b) = default;

  Rational eval(const Rational& x) const;
  Poly1 derivative() const;
  // f(g(t))
  Poly1 compose(const Poly1& inner) const;

  // Rendered with descending exponents, e.g. "2*t^3 - 3*t^2 + t".
  std::string str(std::string_view var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Poly1 scale(const Poly1& f, const Rational& s);
Poly1 pow(const Poly1& f, unsigned exponent);

// Euclidean division: returns (quotient, remainder) with
// f = g * quotient + remainder and deg(remainder) < deg(g).
// Throws std::domain_error when g is zero.
std::pair<Poly1, Poly1> divmod(const Poly1& f, const Poly1& g);

// Quotient of an exact division. Throws InexactDivision on a nonzero
// remainder.
Poly1 divide_exact(const Poly1& f, const Poly1& g);

// Monic greatest common divisor; gcd(0, 0) = 0.
Poly1 gcd(const Poly1& f, const Poly1& g);

}  // namespace peirce
