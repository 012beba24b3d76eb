#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "peirce/poly1.h"
#include "peirce/rational.h"

namespace peirce {

using Vector = std::vector<Rational>;

// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  // Matrix whose columns are the given vectors (all of equal length).
  static Matrix from_columns(const std::vector<Vector>& columns,
                             std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Vector column(std::size_t j) const;
  bool is_zero() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& s);
  friend Matrix operator+(Matrix x, const Matrix& y) { return x += y; }
  friend Matrix operator-(Matrix x, const Matrix& y) { return x -= y; }
  friend Matrix operator*(Matrix x, const Rational& s) { return x *= s; }
  friend Matrix operator*(const Matrix& x, const Matrix& y);
  friend Vector operator*(const Matrix& m, const Vector& v);
  friend bool operator==(const Matrix&, const Matrix&) = default;

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Vector operator+(const Vector& x, const Vector& y);
Vector operator-(const Vector& x, const Vector& y);
Vector operator*(const Rational& s, const Vector& x);
bool is_zero(const Vector& v);
std::string str(const Vector& v);

Rational trace(const Matrix& m);

// det(t I - m), computed with Berkowitz's division-free recurrence.
Poly1 char_poly(const Matrix& m);

// f(m) as a matrix, and f(m) v without forming f(m).
Matrix eval_at(const Poly1& f, const Matrix& m);
Vector apply_poly(const Poly1& f, const Matrix& m, const Vector& v);

std::size_t rank(Matrix m);

// Basis of {v : m v = 0} from the reduced row echelon form; one vector per
// free column, with a 1 in that column.
std::vector<Vector> null_space(Matrix m);

// Inverse of a square matrix. Throws std::domain_error when singular.
Matrix inverse(Matrix m);

}  // namespace peirce
