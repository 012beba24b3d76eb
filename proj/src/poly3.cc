#include "peirce/poly3.h"

#include <sstream>
#include <utility>

namespace peirce {

namespace {

constexpr const char* kVarNames[3] = {"a", "b", "p"};

std::size_t idx(Var v) { return static_cast<std::size_t>(v); }

}  // namespace

Poly3::Poly3(Rational constant) {
  if (!constant.is_zero()) terms_.emplace(Exponents{0, 0, 0}, std::move(constant));
}

Poly3 Poly3::term(const Rational& coeff, const Exponents& exps) {
  Poly3 r;
  r.add_term(exps, coeff);
  return r;
}

Poly3 Poly3::var(Var v) {
  Exponents e{0, 0, 0};
  e[idx(v)] = 1;
  return term(Rational(1), e);
}

Poly3 Poly3::from_poly1(const Poly1& f, Var v) {
  Poly3 r;
  const auto& c = f.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    Exponents e{0, 0, 0};
    e[idx(v)] = static_cast<unsigned>(k);
    r.add_term(e, c[k]);
  }
  return r;
}

void Poly3::add_term(const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational Poly3::coeff(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational() : it->second;
}

unsigned Poly3::degree_in(Var v) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[idx(v)]);
  return d;
}

Poly3& Poly3::operator+=(const Poly3& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly3& Poly3::operator-=(const Poly3& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly3& Poly3::operator*=(const Poly3& o) {
  Poly3 out;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      out.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2);
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

Poly3& Poly3::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Poly3 Poly3::operator-() const {
  Poly3 r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Rational Poly3::eval(const Rational& a, const Rational& b,
                     const Rational& p) const {
  Rational acc;
  for (const auto& [e, c] : terms_) {
    acc += c * pow(a, e[0]) * pow(b, e[1]) * pow(p, e[2]);
  }
  return acc;
}

Poly3 Poly3::substitute(Var v, const Rational& value) const {
  Poly3 r;
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f[idx(v)] = 0;
    r.add_term(f, c * pow(value, e[idx(v)]));
  }
  return r;
}

Poly1 Poly3::specialize_ab(const Rational& a, const Rational& b) const {
  Poly1 r;
  for (const auto& [e, c] : terms_) {
    r += Poly1::monomial(c * pow(a, e[0]) * pow(b, e[1]), e[2]);
  }
  return r;
}

Poly3 Poly3::derivative(Var v) const {
  Poly3 r;
  for (const auto& [e, c] : terms_) {
    if (e[idx(v)] == 0) continue;
    Exponents f = e;
    f[idx(v)] -= 1;
    r.add_term(f, c * Rational(static_cast<long>(e[idx(v)])));
  }
  return r;
}

Poly3 Poly3::swap(Var v, Var w) const {
  Poly3 r;
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    std::swap(f[idx(v)], f[idx(w)]);
    r.add_term(f, c);
  }
  return r;
}

std::string Poly3::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string body;
    for (std::size_t v = 0; v < 3; ++v) {
      if (e[v] == 0) continue;
      if (!body.empty()) body += "*";
      body += kVarNames[v];
      if (e[v] > 1) body += "^" + std::to_string(e[v]);
    }
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
    first = false;
  }
  return out.str();
}

Poly3 compose(const Poly1& f, const Poly3& inner) {
  Poly3 acc;
  const auto& c = f.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= inner;
    acc += Poly3(*it);
  }
  return acc;
}

Poly3 divide_exact(const Poly3& f, const Poly3& g) {
  if (g.is_zero()) throw std::domain_error("polynomial division by zero");
  const auto& [lead_e, lead_c] = *g.terms().begin();
  Poly3 rem = f;
  Poly3 quot;
  while (!rem.is_zero()) {
    const auto& [e, c] = *rem.terms().begin();
    if (e[0] < lead_e[0] || e[1] < lead_e[1] || e[2] < lead_e[2]) {
      throw InexactDivision("(" + f.str() + ") / (" + g.str() +
                            ") is not exact");
    }
    Poly3 step = Poly3::term(
        c / lead_c, {e[0] - lead_e[0], e[1] - lead_e[1], e[2] - lead_e[2]});
    quot += step;
    rem -= step * g;
  }
  return quot;
}

Poly3 divided_difference(const Poly1& f, Var x, Var y) {
  Poly3 num = Poly3::from_poly1(f, x) - Poly3::from_poly1(f, y);
  return divide_exact(num, Poly3::var(x) - Poly3::var(y));
}

}  // namespace peirce
