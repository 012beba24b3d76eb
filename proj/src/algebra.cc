#include "peirce/algebra.h"

#include <functional>

#include "peirce/roots.h"

namespace peirce {

StructureAlgebra StructureAlgebra::make(StructureConstants constants,
                                        std::optional<Matrix> bilinear_form,
                                        std::optional<Vector> weight,
                                        std::vector<Vector> idempotents,
                                        std::string name) {
  const std::size_t n = constants.size();
  if (n == 0) throw AlgebraError("algebra dimension must be positive");
  for (const auto& row : constants) {
    if (row.size() != n) throw AlgebraError("structure constants must be dim x dim x dim");
    for (const auto& v : row) {
      if (v.size() != n) throw AlgebraError("structure constants must be dim x dim x dim");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (constants[i][j] != constants[j][i]) {
        throw AlgebraError("structure constants not commutative at (" +
                           std::to_string(i) + ", " + std::to_string(j) + ")");
      }
    }
  }
  StructureAlgebra alg;
  alg.constants_ = std::move(constants);
  alg.name_ = std::move(name);

  if (weight) {
    if (weight->size() != n) throw AlgebraError("weight functional has wrong length");
    alg.weight_ = std::move(weight);
  }
  if (bilinear_form) {
    const Matrix& b = *bilinear_form;
    if (b.rows() != n || b.cols() != n) throw AlgebraError("bilinear form must be dim x dim");
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (b(i, j) != b(j, i)) throw AlgebraError("bilinear form is not symmetric");
      }
    }
    alg.form_ = std::move(bilinear_form);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Vector ij = alg.multiply(alg.basis_vector(i), alg.basis_vector(j));
        for (std::size_t k = 0; k < n; ++k) {
          const Vector jk = alg.multiply(alg.basis_vector(j), alg.basis_vector(k));
          if (alg.form(ij, alg.basis_vector(k)) != alg.form(alg.basis_vector(i), jk)) {
            throw AlgebraError("bilinear form is not associating on basis triple (" +
                               std::to_string(i) + ", " + std::to_string(j) + ", " +
                               std::to_string(k) + ")");
          }
        }
      }
    }
  }
  for (std::size_t i = 0; i < idempotents.size(); ++i) {
    if (idempotents[i].size() != n) {
      throw AlgebraError("idempotent " + std::to_string(i) + " has wrong length");
    }
    if (!alg.is_idempotent(idempotents[i])) {
      throw AlgebraError("idempotent " + std::to_string(i) + " does not satisfy c c = c");
    }
  }
  alg.idempotents_ = std::move(idempotents);
  return alg;
}

void StructureAlgebra::check_size(const Vector& v) const {
  if (v.size() != dim()) {
    throw AlgebraError("vector of length " + std::to_string(v.size()) +
                                " in algebra of dimension " + std::to_string(dim()));
  }
}

Vector StructureAlgebra::basis_vector(std::size_t i) const {
  Vector v(dim());
  v.at(i) = 1;
  return v;
}

Vector StructureAlgebra::multiply(const Vector& x, const Vector& y) const {
  check_size(x);
  check_size(y);
  const std::size_t n = dim();
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const Rational xy = x[i] * y[j];
      const Vector& e = constants_[i][j];
      for (std::size_t k = 0; k < n; ++k) {
        if (!e[k].is_zero()) out[k] += xy * e[k];
      }
    }
  }
  return out;
}

Matrix StructureAlgebra::mult_operator(const Vector& c) const {
  check_size(c);
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < dim(); ++j) cols.push_back(multiply(c, basis_vector(j)));
  return Matrix::from_columns(cols, dim());
}

bool StructureAlgebra::is_idempotent(const Vector& c) const {
  return multiply(c, c) == c;
}

Rational StructureAlgebra::form(const Vector& x, const Vector& y) const {
  if (!form_) throw UnrealizableWeight("algebra has no bilinear form");
  check_size(x);
  check_size(y);
  Rational out;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) out += x[i] * (*form_)(i, j) * y[j];
  }
  return out;
}

Rational StructureAlgebra::omega(const Vector& x) const {
  if (!weight_) throw UnrealizableWeight("algebra has no weight functional");
  check_size(x);
  Rational out;
  for (std::size_t i = 0; i < dim(); ++i) out += (*weight_)[i] * x[i];
  return out;
}

Vector evaluate_monomial(const StructureAlgebra& alg, const Monomial& m,
                         const Vector& x) {
  if (m.is_atom()) {
    if (x.size() != alg.dim()) throw std::invalid_argument("vector length mismatch");
    return x;
  }
  const Vector l = evaluate_monomial(alg, m.left(), x);
  if (m.left() == m.right()) return alg.multiply(l, l);
  return alg.multiply(l, evaluate_monomial(alg, m.right(), x));
}

std::vector<Vector> linearizations(const StructureAlgebra& alg,
                                   const Monomial& m, const Vector& x,
                                   const Vector& y) {
  if (m.is_atom()) return {x, y};
  // A labeling of the product splits into labelings of the two subtrees.
  const auto l = linearizations(alg, m.left(), x, y);
  const auto r = linearizations(alg, m.right(), x, y);
  std::vector<Vector> out(m.degree() + 1, Vector(alg.dim()));
  for (std::size_t i = 0; i < l.size(); ++i) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      out[i + j] = out[i + j] + alg.multiply(l[i], r[j]);
    }
  }
  return out;
}

Vector linearize(const StructureAlgebra& alg, const Monomial& m, unsigned k,
                 const Vector& x, const Vector& y) {
  if (k > m.degree()) {
    throw std::out_of_range("linearization order " + std::to_string(k) +
                            " exceeds degree " + std::to_string(m.degree()));
  }
  if (x.size() != alg.dim() || y.size() != alg.dim()) {
    throw std::invalid_argument("vector length mismatch");
  }
  return linearizations(alg, m, x, y)[k];
}

Vector second_linearization(const StructureAlgebra& alg, const Monomial& m,
                            const Vector& c, const Vector& x, const Vector& y) {
  if (m.degree() < 2) return Vector(alg.dim());
  return linearize(alg, m, 2, c, x + y) - linearize(alg, m, 2, c, x) -
         linearize(alg, m, 2, c, y);
}

Vector evaluate_identity(const StructureAlgebra& alg,
                         const WeightedIdentity& identity, const Vector& x) {
  if (identity.uses_baric() && !alg.weight()) {
    throw UnrealizableWeight("identity uses omega but the algebra has no weight functional");
  }
  if (identity.uses_bilinear() && !alg.bilinear_form()) {
    throw UnrealizableWeight("identity uses b but the algebra has no bilinear form");
  }
  const Rational w = alg.weight() ? alg.omega(x) : Rational(0);
  Vector out(alg.dim());
  for (const auto& t : identity.terms()) {
    Rational scalar = t.coeff * pow(w, t.weight.baric);
    for (const auto& m : t.weight.bilinear) {
      scalar *= alg.form(x, evaluate_monomial(alg, m, x));
    }
    if (scalar.is_zero()) continue;
    out = out + scalar * evaluate_monomial(alg, t.monomial, x);
  }
  return out;
}

std::size_t PeirceDecomposition::dimension(const Rational& lambda) const {
  auto it = eigenbases.find(lambda);
  return it == eigenbases.end() ? 0 : it->second.size();
}

std::map<Rational, Vector> PeirceDecomposition::components(const Vector& v) const {
  if (!semisimple) {
    throw std::logic_error("components require a semisimple decomposition");
  }
  const Vector coords = inverse_basis_ * v;
  std::map<Rational, Vector> out;
  for (std::size_t j = 0; j < coords.size(); ++j) {
    if (coords[j].is_zero()) continue;
    auto [it, inserted] = out.try_emplace(column_eigenvalue_[j], Vector(v.size()));
    it->second = it->second + coords[j] * columns_[j];
  }
  std::erase_if(out, [](const auto& kv) { return is_zero(kv.second); });
  return out;
}

PeirceDecomposition eigen_decomposition(const StructureAlgebra& alg,
                                        const Vector& c) {
  if (c.size() != alg.dim()) throw AlgebraError("idempotent has wrong length");
  if (is_zero(c)) throw AlgebraError("the zero idempotent has no Peirce decomposition");
  if (!alg.is_idempotent(c)) throw AlgebraError("vector is not an idempotent");
  PeirceDecomposition d;
  d.idempotent = c;
  const Matrix lc = alg.mult_operator(c);
  d.char_poly = char_poly(lc);
  auto roots = rational_roots(d.char_poly);
  d.eigenvalues = std::move(roots.roots);
  d.residual = std::move(roots.residual);
  std::size_t total = 0;
  for (const auto& r : d.eigenvalues) {
    Matrix shifted = lc - Matrix::identity(alg.dim()) * r.root;
    auto basis = null_space(std::move(shifted));
    total += basis.size();
    for (const auto& v : basis) {
      d.column_eigenvalue_.push_back(r.root);
      d.columns_.push_back(v);
    }
    d.eigenbases.emplace(r.root, std::move(basis));
  }
  d.semisimple = d.rational() && total == alg.dim();
  if (d.semisimple) d.inverse_basis_ = inverse(Matrix::from_columns(d.columns_, alg.dim()));
  return d;
}

Vector random_vector(std::size_t dim, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 4);
  Vector v(dim);
  for (auto& x : v) x = Rational(num(rng), den(rng));
  return v;
}

}  // namespace peirce
