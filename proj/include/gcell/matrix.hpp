#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gcell/scalar.hpp"

namespace gcell {

/// Coefficient vector with respect to some fixed basis.
using Vector = std::vector<Scalar>;

Vector zero_vector(const Field& f, std::size_t n);
Vector unit_vector(const Field& f, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector operator+(Vector a, const Vector& b);
Vector operator-(Vector a, const Vector& b);
Vector operator*(const Scalar& c, Vector v);
/// a += c * b
void axpy(Vector& a, const Scalar& c, const Vector& b);
std::string to_string(const Vector& v);

/// Dense row-major matrix over a single Field.
class Matrix {
 public:
  Matrix() : field_(Field::rational()) {}
  Matrix(const Field& f, std::size_t rows, std::size_t cols);
  static Matrix identity(const Field& f, std::size_t n);
  static Matrix from_rows(const Field& f, std::size_t cols, const std::vector<Vector>& rows);
  static Matrix from_columns(const Field& f, std::size_t rows, const std::vector<Vector>& cols);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Matrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;
  /// True when the matrix equals c * identity for some c; writes c.
  bool is_scalar_multiple_of_identity(Scalar* c = nullptr) const;

  Matrix operator*(const Matrix& o) const;
  Vector operator*(const Vector& v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  friend Matrix operator*(const Scalar& c, Matrix m);
  friend bool operator==(const Matrix& a, const Matrix& b);

  /// Rows rendered as "[a, b; c, d]".
  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form with deterministic pivoting: columns left to
/// right, the first row at or below the current one with a nonzero entry.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
Scalar determinant(const Matrix& m);

/// One exact solution x of a x = b with free variables set to zero, or
/// nullopt when the system is inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
/// Inverse of a square matrix, nullopt when singular.
std::optional<Matrix> invert(const Matrix& m);
/// Basis of the right kernel {x : m x = 0}, one vector per free column.
std::vector<Vector> nullspace(const Matrix& m);

}  // namespace gcell
