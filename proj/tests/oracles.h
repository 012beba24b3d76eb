// Independent reference computations and random generators shared by the
// test binaries. Nothing here calls the recursions under test.
#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "peirce/algebra.h"
#include "peirce/identity.h"
#include "peirce/linalg.h"
#include "peirce/monomial.h"
#include "peirce/poly1.h"
#include "peirce/poly3.h"
#include "peirce/rational.h"

namespace oracle {

using peirce::Matrix;
using peirce::Monomial;
using peirce::Poly1;
using peirce::Poly3;
using peirce::Rational;
using peirce::Vector;

// ---------------------------------------------------------------------------
// Random generators

inline Rational random_rational(std::mt19937_64& rng, long max_num = 9, long max_den = 6) {
  std::uniform_int_distribution<long> num(-max_num, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(std::mt19937_64& rng) {
  Rational r;
  while (r.is_zero()) r = random_rational(rng);
  return r;
}

inline Poly1 random_poly1(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<Rational> c(deg(rng) + 1);
  for (auto& x : c) x = random_rational(rng);
  return Poly1(c);
}

inline Poly3 random_poly3(std::mt19937_64& rng, unsigned max_exp, int terms) {
  std::uniform_int_distribution<unsigned> e(0, max_exp);
  Poly3 f;
  for (int i = 0; i < terms; ++i) {
    f += Poly3::term(random_rational(rng), {e(rng), e(rng), e(rng)});
  }
  return f;
}

// Uniform split point at every node.
inline Monomial random_monomial(std::mt19937_64& rng, unsigned degree) {
  if (degree == 1) return Monomial::atom();
  std::uniform_int_distribution<unsigned> split(1, degree - 1);
  const unsigned l = split(rng);
  return Monomial::product(random_monomial(rng, l), random_monomial(rng, degree - l));
}

inline Monomial random_monomial_up_to(std::mt19937_64& rng, unsigned max_degree) {
  std::uniform_int_distribution<unsigned> d(1, max_degree);
  return random_monomial(rng, d(rng));
}

// Term list with random monomials, weights and coefficients. With
// `zero_sum` the last coefficient is adjusted so the sum vanishes.
inline std::vector<peirce::IdentityTerm> random_terms(std::mt19937_64& rng,
                                                      unsigned max_degree,
                                                      bool zero_sum) {
  std::uniform_int_distribution<int> count(2, 5);
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<unsigned> k(0, 3);
  std::vector<peirce::IdentityTerm> terms;
  const int n = count(rng);
  Rational sum;
  for (int i = 0; i < n; ++i) {
    peirce::Weight w;
    switch (kind(rng)) {
      case 1: w = peirce::Weight::baric_power(k(rng)); break;
      case 2: w = peirce::Weight::bilinear_with(random_monomial_up_to(rng, 3)); break;
      default: break;
    }
    Rational c = random_nonzero_rational(rng);
    sum += c;
    terms.push_back({c, random_monomial_up_to(rng, max_degree), w});
  }
  if (zero_sum) {
    // Fresh monomial so the adjustment cannot cancel against another term.
    terms.push_back({-sum, random_monomial_up_to(rng, max_degree), peirce::Weight::baric_power(7)});
  }
  return terms;
}

// Keeps drawing until validation succeeds (merging can empty a list).
inline peirce::WeightedIdentity random_identity(std::mt19937_64& rng, unsigned max_degree) {
  for (;;) {
    try {
      return peirce::WeightedIdentity::make(random_terms(rng, max_degree, true));
    } catch (const peirce::IdentityError&) {
    }
  }
}

// ---------------------------------------------------------------------------
// Trees

// Leaf depths of a monomial tree, left to right.
inline void leaf_depths(const Monomial& m, unsigned depth, std::vector<unsigned>& out) {
  if (m.is_atom()) {
    out.push_back(depth);
    return;
  }
  leaf_depths(m.left(), depth + 1, out);
  leaf_depths(m.right(), depth + 1, out);
}

// rho(T, q) = sum over leaves of q^depth, the closed form of the recursion.
inline Poly1 rho_by_leaf_depth(const Monomial& m) {
  std::vector<unsigned> d;
  leaf_depths(m, 0, d);
  Poly1 out;
  for (unsigned x : d) out += Poly1::monomial(Rational(1), x);
  return out;
}

inline void internal_nodes(const Monomial& m, unsigned depth,
                           std::vector<std::pair<Monomial, unsigned>>& out) {
  if (m.is_atom()) return;
  out.emplace_back(m, depth);
  internal_nodes(m.left(), depth + 1, out);
  internal_nodes(m.right(), depth + 1, out);
}

// Unrolled symbol: sum over internal nodes v at depth d of
// p^d (rho(L, a) rho(R, b) + rho(L, b) rho(R, a)), each rho written as a sum
// of powers over leaf depths relative to the child.
inline Poly3 symbol_by_internal_nodes(const Monomial& m) {
  std::vector<std::pair<Monomial, unsigned>> nodes;
  internal_nodes(m, 0, nodes);
  Poly3 out;
  for (const auto& [v, d] : nodes) {
    std::vector<unsigned> l;
    std::vector<unsigned> r;
    leaf_depths(v.left(), 0, l);
    leaf_depths(v.right(), 0, r);
    for (unsigned i : l) {
      for (unsigned j : r) {
        out += Poly3::term(Rational(1), {i, j, d});
        out += Poly3::term(Rational(1), {j, i, d});
      }
    }
  }
  return out;
}

// Canonical string of an unordered binary tree given as a planar string
// "z" or "(A,B)": children sorted as strings, independent of the library's
// ordering.
inline std::string canonical_string(const std::string& left, const std::string& right) {
  return left < right ? "(" + left + "," + right + ")" : "(" + right + "," + left + ")";
}

inline std::string canonical_string(const Monomial& m) {
  if (m.is_atom()) return "z";
  return canonical_string(canonical_string(m.left()), canonical_string(m.right()));
}

// All unordered binary trees with d leaves, by brute force over planar trees
// followed by canonicalization.
inline std::set<std::string> brute_force_trees(unsigned d) {
  std::vector<std::set<std::string>> planar(d + 1);
  planar[1] = {"z"};
  for (unsigned n = 2; n <= d; ++n) {
    for (unsigned l = 1; l < n; ++l) {
      for (const auto& a : planar[l]) {
        for (const auto& b : planar[n - l]) planar[n].insert(canonical_string(a, b));
      }
    }
  }
  return planar[d];
}

// Labeled Peirce operator: sum over leaves of label * q^depth, at a point q.
inline Rational labeled_rho(const Monomial& m, const std::vector<Rational>& labels,
                            const Rational& q) {
  std::vector<unsigned> d;
  leaf_depths(m, 0, d);
  Rational out;
  for (std::size_t i = 0; i < d.size(); ++i) out += labels[i] * pow(q, d[i]);
  return out;
}

// Total Peirce operator by summing over all leaf permutations.
inline Rational brute_total_peirce(const Monomial& m, std::vector<Rational> labels,
                                   const Rational& q) {
  std::vector<std::size_t> perm(labels.size());
  std::iota(perm.begin(), perm.end(), 0);
  Rational total;
  do {
    std::vector<Rational> permuted;
    for (auto i : perm) permuted.push_back(labels[i]);
    total += labeled_rho(m, permuted, q);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// ---------------------------------------------------------------------------
// Concrete algebras

// Tree value with leaf i labeled by labels[i] (left to right).
inline Vector labeled_value(const peirce::StructureAlgebra& alg, const Monomial& m,
                            const std::vector<const Vector*>& labels, std::size_t& next) {
  if (m.is_atom()) return *labels[next++];
  Vector l = labeled_value(alg, m.left(), labels, next);
  Vector r = labeled_value(alg, m.right(), labels, next);
  return alg.multiply(l, r);
}

// D^k by enumerating all C(deg, k) labelings explicitly.
inline Vector brute_linearization(const peirce::StructureAlgebra& alg, const Monomial& m,
                                  unsigned k, const Vector& x, const Vector& y) {
  const unsigned n = m.degree();
  if (k > n) return Vector(alg.dim());  // no labelings
  std::vector<bool> mask(n, false);
  std::fill(mask.end() - k, mask.end(), true);
  Vector total(alg.dim());
  do {
    std::vector<const Vector*> labels;
    for (unsigned i = 0; i < n; ++i) labels.push_back(mask[i] ? &y : &x);
    std::size_t next = 0;
    total = total + labeled_value(alg, m, labels, next);
  } while (std::next_permutation(mask.begin(), mask.end()));
  return total;
}

// Characteristic polynomial det(tI - M) by Faddeev-LeVerrier.
inline Poly1 faddeev_leverrier(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Matrix mk(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk + Matrix::identity(n) * c[n - k + 1];
    c[n - k] = -peirce::trace(m * mk) / Rational(static_cast<long>(k));
  }
  return Poly1(c);
}

// det(tI - M) by cofactor expansion over polynomial entries; small n only.
inline Poly1 cofactor_char_poly(const std::vector<std::vector<Poly1>>& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  Poly1 det;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Poly1>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Poly1> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(a[i][k]);
      }
      minor.push_back(row);
    }
    Poly1 term = a[0][j] * cofactor_char_poly(minor);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

inline Poly1 cofactor_char_poly(const Matrix& m) {
  std::vector<std::vector<Poly1>> a(m.rows(), std::vector<Poly1>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      a[i][j] = Poly1(-m(i, j));
      if (i == j) a[i][j] += Poly1::variable();
    }
  }
  return cofactor_char_poly(a);
}

}  // namespace oracle
