#include "peirce/roots.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace peirce {

namespace {

std::vector<Poly1> sturm_chain(const Poly1& f) {
  std::vector<Poly1> chain{f, f.derivative()};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    Poly1 r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  if (chain.back().is_zero()) chain.pop_back();
  return chain;
}

int sign_variations(const std::vector<Poly1>& chain, const Rational& x) {
  int variations = 0;
  int last = 0;
  for (const auto& s : chain) {
    int sg = s.eval(x).sign();
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++variations;
    last = sg;
  }
  return variations;
}

mpz_class floor_of(const Rational& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
  return q;
}

Rational cauchy_bound(const Poly1& f) {
  Rational lead = abs(f.leading());
  Rational best;
  for (int k = 0; k < f.degree(); ++k) {
    best = std::max(best, abs(f.coeff(static_cast<std::size_t>(k))) / lead);
  }
  return best + Rational(1);
}

// Finds the rational root inside (lo, hi], which holds exactly one real root
// of the square-free integer polynomial `prim`, if that root is rational.
bool refine_rational(const Poly1& prim, const std::vector<Poly1>& chain,
                     Rational lo, Rational hi, Rational* out) {
  const Rational lead(prim.leading().num());
  for (;;) {
    if (prim.eval(hi).is_zero()) {
      *out = hi;
      return true;
    }
    mpz_class first = floor_of(lo * lead) + 1;
    mpz_class last = floor_of(hi * lead);
    if (last < first) return false;
    if (first == last) {
      Rational candidate(first, lead.num());
      if (prim.eval(candidate).is_zero()) {
        *out = candidate;
        return true;
      }
      return false;
    }
    Rational mid = (lo + hi) / Rational(2);
    if (sign_variations(chain, lo) - sign_variations(chain, mid) > 0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
}

}  // namespace

Poly1 primitive_part(const Poly1& f) {
  if (f.is_zero()) return f;
  mpz_class den_lcm = 1;
  for (const auto& c : f.coefficients()) {
    if (!c.is_zero()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                              c.den().get_mpz_t());
  }
  mpz_class num_gcd = 0;
  for (const auto& c : f.coefficients()) {
    mpz_class n = c.num() * (den_lcm / c.den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  Rational factor(den_lcm, num_gcd);
  if (f.leading().sign() < 0) factor = -factor;
  return f * factor;
}

int count_real_roots(const Poly1& square_free, const Rational& lo,
                     const Rational& hi) {
  auto chain = sturm_chain(square_free);
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

RationalRoots rational_roots(const Poly1& f) {
  if (f.is_zero()) {
    throw std::invalid_argument("rational_roots of the zero polynomial");
  }
  RationalRoots result;
  result.residual = f;
  if (f.degree() < 1) return result;

  Poly1 square_free = divide_exact(f, gcd(f, f.derivative()));
  Poly1 prim = primitive_part(square_free);
  auto chain = sturm_chain(prim);

  Rational bound = cauchy_bound(prim);
  std::vector<std::pair<Rational, Rational>> pending{{-bound, bound}};
  std::vector<Rational> found;
  while (!pending.empty()) {
    auto [lo, hi] = pending.back();
    pending.pop_back();
    int n = sign_variations(chain, lo) - sign_variations(chain, hi);
    if (n == 0) continue;
    if (n == 1) {
      Rational root;
      if (refine_rational(prim, chain, lo, hi, &root)) found.push_back(root);
      continue;
    }
    Rational mid = (lo + hi) / Rational(2);
    pending.emplace_back(lo, mid);
    pending.emplace_back(mid, hi);
  }
  std::sort(found.begin(), found.end());

  for (const auto& r : found) {
    Poly1 factor = Poly1::linear_factor(r);
    unsigned mult = 0;
    for (;;) {
      auto [q, rem] = divmod(result.residual, factor);
      if (!rem.is_zero()) break;
      result.residual = std::move(q);
      ++mult;
    }
    if (mult == 0) {
      throw std::logic_error("rational root " + r.str() +
                             " failed exact division");
    }
    result.roots.push_back({r, mult});
  }
  return result;
}

std::string format_factorization(const RationalRoots& factored) {
  Poly1 rest = factored.residual;
  std::string factors;
  for (const auto& r : factored.roots) {
    // (t - n/d) = (d t - n) / d
    const Rational d(r.root.den());
    const Rational n(r.root.num());
    std::string f;
    if (n.is_zero()) {
      f = "t";
    } else {
      f = "(" + Poly1({-n, d}).str() + ")";
    }
    if (r.multiplicity > 1) f += "^" + std::to_string(r.multiplicity);
    factors += (factors.empty() ? "" : "*") + f;
    rest *= Rational(1) / pow(d, r.multiplicity);
  }
  if (factors.empty()) return rest.str();
  if (!rest.is_constant()) return "(" + rest.str() + ")*" + factors;
  const Rational c = rest.coeff(0);
  if (c == Rational(1)) return factors;
  if (c == Rational(-1)) return "-" + factors;
  return c.str() + "*" + factors;
}

}  // namespace peirce
