#include "peirce/peirce.h"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace peirce {

namespace {

template <typename Value>
class MemoTable {
 public:
  template <typename Compute>
  Value get(const Monomial& m, Compute&& compute) {
    {
      std::shared_lock lock(mutex_);
      auto it = table_.find(m);
      if (it != table_.end()) return it->second;
    }
    Value v = compute();
    std::unique_lock lock(mutex_);
    return table_.try_emplace(m, std::move(v)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::unordered_map<Monomial, Value> table_;
};

MemoTable<Poly1>& rho_table() {
  static MemoTable<Poly1> table;
  return table;
}

MemoTable<Poly3>& symbol_table() {
  static MemoTable<Poly3> table;
  return table;
}

void require_positive(unsigned n) {
  if (n == 0) throw std::invalid_argument("power exponent must be >= 1");
}

}  // namespace

Poly1 peirce_poly(const Monomial& m) {
  if (m.is_atom()) return Poly1(Rational(1));
  return rho_table().get(m, [&] {
    return Poly1::variable() * (peirce_poly(m.left()) + peirce_poly(m.right()));
  });
}

Poly3 peirce_symbol(const Monomial& m) {
  if (m.is_atom()) return Poly3();
  return symbol_table().get(m, [&] {
    const Monomial x = m.left();
    const Monomial y = m.right();
    const Poly1 rx = peirce_poly(x);
    const Poly1 ry = peirce_poly(y);
    Poly3 result = Poly3::var(Var::kP) * (peirce_symbol(x) + peirce_symbol(y));
    result += Poly3::from_poly1(rx, Var::kA) * Poly3::from_poly1(ry, Var::kB);
    result += Poly3::from_poly1(rx, Var::kB) * Poly3::from_poly1(ry, Var::kA);
    return result;
  });
}

Poly1 principal_peirce_closed(unsigned n) {
  require_positive(n);
  Poly1 num = Poly1::monomial(Rational(2), n) -
              Poly1::monomial(Rational(1), n - 1) - Poly1::variable();
  return divide_exact(num, Poly1::linear_factor(Rational(1)));
}

Poly1 plenary_peirce_closed(unsigned n) {
  require_positive(n);
  return pow(Poly1::monomial(Rational(2), 1), n - 1);
}

Poly3 principal_symbol_closed(unsigned n) {
  require_positive(n);
  const Poly1 rho = principal_peirce_closed(n);
  const Rational half(1, 2);
  Poly3 at_half = divide_exact(Poly3::from_poly1(rho, Var::kP) - Poly3(rho.eval(half)),
                               Poly3::var(Var::kP) - Poly3(half));
  return divided_difference(rho, Var::kP, Var::kA) +
         divided_difference(rho, Var::kP, Var::kB) - at_half;
}

Poly3 plenary_symbol_closed(unsigned n) {
  require_positive(n);
  const unsigned k = n - 1;
  const Poly3 p = Poly3::var(Var::kP);
  const Poly3 two_ab = Poly3(2) * Poly3::var(Var::kA) * Poly3::var(Var::kB);
  Poly3 pk(1);
  Poly3 abk(1);
  for (unsigned i = 0; i < k; ++i) {
    pk *= p;
    abk *= two_ab;
  }
  return Poly3(pow(Rational(2), k)) * divide_exact(pk - abk, p - two_ab);
}

Poly3 half_specialization(const Monomial& m) {
  return divided_difference(peirce_poly(m), Var::kP, Var::kA);
}

Rational total_peirce_value(const Monomial& m,
                            std::span<const Rational> leaf_values,
                            const Rational& q) {
  if (leaf_values.size() != m.degree()) {
    throw std::invalid_argument("expected " + std::to_string(m.degree()) +
                                " leaf values, got " +
                                std::to_string(leaf_values.size()));
  }
  Rational factorial(1);
  for (unsigned k = 2; k < m.degree(); ++k) factorial *= Rational(static_cast<long>(k));
  Rational trace;
  for (const auto& v : leaf_values) trace += v;
  return factorial * trace * peirce_poly(m).eval(q);
}

}  // namespace peirce
