#include "peirce/builders.h"

#include <functional>
#include <stdexcept>

namespace peirce {

namespace {

using MatrixProduct = std::function<Matrix(const Matrix&, const Matrix&)>;
using Coordinates = std::function<Vector(const Matrix&)>;

Matrix unit_symmetric(unsigned n, unsigned i, unsigned j) {
  Matrix m(n, n);
  m(i, j) = 1;
  m(j, i) = 1;
  return m;
}

Matrix jordan_product(const Matrix& x, const Matrix& y) {
  return (x * y + y * x) * Rational(1, 2);
}

StructureConstants constants_from(const std::vector<Matrix>& basis,
                                  const MatrixProduct& product,
                                  const Coordinates& coords) {
  const std::size_t n = basis.size();
  StructureConstants c(n, std::vector<Vector>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Matrix p = product(basis[i], basis[j]);
      c[i][j] = coords(p);
      // Coordinates must reproduce the product exactly.
      Matrix back(p.rows(), p.cols());
      for (std::size_t k = 0; k < n; ++k) back += basis[k] * c[i][j][k];
      if (back != p) throw std::logic_error("product left the basis span");
    }
  }
  return c;
}

Matrix gram(const std::vector<Matrix>& basis,
            const std::function<Rational(const Matrix&, const Matrix&)>& form) {
  Matrix g(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) g(i, j) = form(basis[i], basis[j]);
  }
  return g;
}

}  // namespace

StructureAlgebra jordan_sym(unsigned n) {
  if (n != 2 && n != 3) throw AlgebraError("jordan_sym supports n = 2 or 3");
  std::vector<Matrix> basis;
  std::vector<std::pair<unsigned, unsigned>> slots;
  for (unsigned i = 0; i < n; ++i) {
    Matrix e(n, n);
    e(i, i) = 1;
    basis.push_back(e);
    slots.emplace_back(i, i);
  }
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = i + 1; j < n; ++j) {
      basis.push_back(unit_symmetric(n, i, j));
      slots.emplace_back(i, j);
    }
  }
  auto coords = [&](const Matrix& m) {
    Vector v;
    for (auto [i, j] : slots) v.push_back(m(i, j));
    return v;
  };
  auto constants = constants_from(basis, jordan_product, coords);
  Matrix form = gram(basis, [](const Matrix& x, const Matrix& y) { return trace(x * y); });

  const std::size_t dim = basis.size();
  std::vector<Vector> idempotents;
  Vector e11(dim);
  e11[0] = 1;
  Vector e11_e22(dim);
  e11_e22[0] = 1;
  e11_e22[1] = 1;
  Vector unit(dim);
  for (unsigned i = 0; i < n; ++i) unit[i] = 1;
  idempotents = {e11, e11_e22};
  if (n == 3) idempotents.push_back(unit);
  return StructureAlgebra::make(std::move(constants), std::move(form), std::nullopt,
                                std::move(idempotents),
                                "jordan_sym" + std::to_string(n));
}

StructureAlgebra spin_factor(unsigned d) {
  if (d < 2) throw AlgebraError("spin_factor requires d >= 2");
  const std::size_t dim = d + 1;
  StructureConstants c(dim, std::vector<Vector>(dim, Vector(dim)));
  for (std::size_t i = 0; i < dim; ++i) {
    c[0][i][i] = 1;
    c[i][0][i] = 1;
  }
  for (std::size_t i = 1; i < dim; ++i) c[i][i][0] = 1;
  Matrix form = Matrix::identity(dim) * Rational(2);
  Vector half(dim);
  half[0] = Rational(1, 2);
  half[1] = Rational(1, 2);
  Vector unit(dim);
  unit[0] = 1;
  return StructureAlgebra::make(std::move(c), std::move(form), std::nullopt,
                                {half, unit}, "spin" + std::to_string(d));
}

StructureAlgebra hsiang_tracefree_sym3() {
  Matrix d1(3, 3);
  d1(0, 0) = 1;
  d1(1, 1) = -1;
  Matrix d2(3, 3);
  d2(1, 1) = 1;
  d2(2, 2) = -1;
  const std::vector<Matrix> basis = {d1, d2, unit_symmetric(3, 0, 1),
                                     unit_symmetric(3, 0, 2), unit_symmetric(3, 1, 2)};
  auto product = [](const Matrix& x, const Matrix& y) {
    return jordan_product(x, y) - Matrix::identity(3) * (trace(x * y) / Rational(3));
  };
  // diag(s, t - s, -t) = s D1 + t D2.
  auto coords = [](const Matrix& m) {
    return Vector{m(0, 0), -m(2, 2), m(0, 1), m(0, 2), m(1, 2)};
  };
  auto constants = constants_from(basis, product, coords);
  Matrix form = gram(basis, [](const Matrix& x, const Matrix& y) {
    return trace(x * y) / Rational(6);
  });
  Vector c{Rational(-1), Rational(-2), Rational(0), Rational(0), Rational(0)};
  return StructureAlgebra::make(std::move(constants), std::move(form), std::nullopt,
                                {c}, "hsiang_sym3");
}

StructureAlgebra build_algebra(const std::string& name) {
  if (name == "jordan_sym2") return jordan_sym(2);
  if (name == "jordan_sym3") return jordan_sym(3);
  if (name == "hsiang_sym3") return hsiang_tracefree_sym3();
  if (name.starts_with("spin") && name.size() > 4 &&
      name.find_first_not_of("0123456789", 4) == std::string::npos && name.size() < 7) {
    return spin_factor(static_cast<unsigned>(std::stoul(name.substr(4))));
  }
  throw std::out_of_range("unknown algebra builder '" + name + "'");
}

std::vector<std::string> builder_names() {
  return {"jordan_sym2", "jordan_sym3", "spin<d> (d >= 2)", "hsiang_sym3"};
}

}  // namespace peirce
