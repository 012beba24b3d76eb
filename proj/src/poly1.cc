#include "peirce/poly1.h"

#include <sstream>

namespace peirce {

namespace {

// Appends "coeff*var^k" to out using the sign-separated style shared with
// Poly3 rendering.
void append_term(std::ostringstream& out, bool first, const Rational& c,
                 const std::string& body) {
  Rational mag = abs(c);
  if (first) {
    if (c.sign() < 0) out << "-";
  } else {
    out << (c.sign() < 0 ? " - " : " + ");
  }
  if (body.empty()) {
    out << mag.str();
  } else if (mag == Rational(1)) {
    out << body;
  } else {
    out << mag.str() << "*" << body;
  }
}

}  // namespace

Poly1::Poly1(Rational constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

Poly1::Poly1(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) {
  trim();
}

Poly1 Poly1::monomial(const Rational& coeff, std::size_t exponent) {
  if (coeff.is_zero()) return {};
  std::vector<Rational> c(exponent + 1);
  c[exponent] = coeff;
  return Poly1(std::move(c));
}

Poly1 Poly1::linear_factor(const Rational& root) {
  return Poly1({-root, Rational(1)});
}

Rational Poly1::coeff(std::size_t exponent) const {
  return exponent < coeffs_.size() ? coeffs_[exponent] : Rational();
}

Rational Poly1::leading() const {
  return coeffs_.empty() ? Rational() : coeffs_.back();
}

void Poly1::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly1& Poly1::operator+=(const Poly1& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly1& Poly1::operator-=(const Poly1& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly1& Poly1::operator*=(const Poly1& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Poly1& Poly1::operator*=(const Rational& s) {
  if (s.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Poly1 Poly1::operator-() const {
  Poly1 r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Rational Poly1::eval(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

Poly1 Poly1::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  }
  return Poly1(std::move(d));
}

Poly1 Poly1::compose(const Poly1& inner) const {
  Poly1 acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= inner;
    acc += Poly1(*it);
  }
  return acc;
}

std::string Poly1::str(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string body;
    if (k == 1) {
      body = std::string(var);
    } else if (k > 1) {
      body = std::string(var) + "^" + std::to_string(k);
    }
    append_term(out, first, c, body);
    first = false;
  }
  return out.str();
}

Poly1 scale(const Poly1& f, const Rational& s) { return f * s; }

Poly1 pow(const Poly1& f, unsigned exponent) {
  Poly1 result(Rational(1));
  for (unsigned i = 0; i < exponent; ++i) result *= f;
  return result;
}

std::pair<Poly1, Poly1> divmod(const Poly1& f, const Poly1& g) {
  if (g.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = f.coefficients();
  const auto& gc = g.coefficients();
  const std::size_t gd = gc.size() - 1;
  if (rem.size() < gc.size()) return {Poly1(), f};
  std::vector<Rational> quot(rem.size() - gd);
  const Rational& lead = gc.back();
  for (std::size_t k = rem.size(); k-- > gd;) {
    if (rem[k].is_zero()) continue;
    Rational q = rem[k] / lead;
    quot[k - gd] = q;
    for (std::size_t j = 0; j <= gd; ++j) rem[k - gd + j] -= q * gc[j];
  }
  return {Poly1(std::move(quot)), Poly1(std::move(rem))};
}

Poly1 divide_exact(const Poly1& f, const Poly1& g) {
  auto [q, r] = divmod(f, g);
  if (!r.is_zero()) {
    throw InexactDivision("(" + f.str() + ") / (" + g.str() +
                          ") leaves remainder " + r.str());
  }
  return q;
}

Poly1 gcd(const Poly1& f, const Poly1& g) {
  Poly1 a = f;
  Poly1 b = g;
  while (!b.is_zero()) {
    Poly1 r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * (Rational(1) / a.leading());
}

}  // namespace peirce
