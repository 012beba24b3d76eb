#include "peirce/linalg.h"

#include <sstream>
#include <stdexcept>

namespace peirce {

namespace {

void require_same_shape(const Matrix& x, const Matrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw std::invalid_argument("matrix shape mismatch");
  }
}

void require_square(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix is not square");
}

// Reduces m in place to reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
    }
    const Rational inv = Rational(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require_same_shape(*this, o);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require_same_shape(*this, o);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  if (x.cols() != y.rows()) throw std::invalid_argument("matrix shape mismatch");
  Matrix out(x.rows(), y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t k = 0; k < x.cols(); ++k) {
      if (x(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < y.cols(); ++j) out(i, j) += x(i, k) * y(k, j);
    }
  }
  return out;
}

Vector operator*(const Matrix& m, const Vector& v) {
  if (m.cols() != v.size()) throw std::invalid_argument("matrix/vector size mismatch");
  Vector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!v[j].is_zero()) out[i] += m(i, j) * v[j];
    }
  }
  return out;
}

std::string Matrix::str() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) out << ", ";
    out << "[";
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? ", " : "") << (*this)(i, j);
    out << "]";
  }
  out << "]";
  return out.str();
}

Vector operator+(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw std::invalid_argument("vector size mismatch");
  Vector out(x);
  for (std::size_t i = 0; i < x.size(); ++i) out[i] += y[i];
  return out;
}

Vector operator-(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw std::invalid_argument("vector size mismatch");
  Vector out(x);
  for (std::size_t i = 0; i < x.size(); ++i) out[i] -= y[i];
  return out;
}

Vector operator*(const Rational& s, const Vector& x) {
  Vector out(x);
  for (auto& v : out) v *= s;
  return out;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

std::string str(const Vector& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
  out << ")";
  return out.str();
}

Rational trace(const Matrix& m) {
  require_square(m);
  Rational t;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

Poly1 char_poly(const Matrix& m) {
  require_square(m);
  const std::size_t n = m.rows();
  // Coefficients of the characteristic polynomial of the leading k x k block,
  // highest degree first.
  std::vector<Rational> p{Rational(1)};
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t r = k - 1;  // index of the new row/column
    // Toeplitz column: 1, -a_rr, -R C, -R M C, ..., -R M^(k-2) C.
    std::vector<Rational> toeplitz(k + 1);
    toeplitz[0] = 1;
    toeplitz[1] = -m(r, r);
    Vector power_c(r);  // M^j C
    for (std::size_t i = 0; i < r; ++i) power_c[i] = m(i, r);
    for (std::size_t j = 2; j <= k; ++j) {
      Rational rc;
      for (std::size_t i = 0; i < r; ++i) rc += m(r, i) * power_c[i];
      toeplitz[j] = -rc;
      Vector next(r);
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t l = 0; l < r; ++l) next[i] += m(i, l) * power_c[l];
      }
      power_c = std::move(next);
    }
    std::vector<Rational> q(k + 1);
    for (std::size_t i = 0; i <= k; ++i) {
      for (std::size_t j = 0; j < p.size() && j <= i; ++j) q[i] += toeplitz[i - j] * p[j];
    }
    p = std::move(q);
  }
  return Poly1(std::vector<Rational>(p.rbegin(), p.rend()));
}

Matrix eval_at(const Poly1& f, const Matrix& m) {
  require_square(m);
  Matrix out(m.rows(), m.cols());
  const auto& c = f.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    out = out * m + Matrix::identity(m.rows()) * *it;
  }
  return out;
}

Vector apply_poly(const Poly1& f, const Matrix& m, const Vector& v) {
  Vector out(v.size());
  const auto& c = f.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) out = m * out + *it * v;
  return out;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

std::vector<Vector> null_space(Matrix m) {
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix inverse(Matrix m) {
  require_square(m);
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) {
    throw std::domain_error("matrix is singular");
  }
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  }
  return out;
}

}  // namespace peirce
