#include "gcell/matrix.hpp"

#include <sstream>

#include "gcell/error.hpp"

namespace gcell {

Vector zero_vector(const Field& f, std::size_t n) { return Vector(n, Scalar::zero(f)); }

Vector unit_vector(const Field& f, std::size_t n, std::size_t i) {
  Vector v = zero_vector(f, n);
  v.at(i) = Scalar::one(f);
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& s : v) {
    if (!s.is_zero()) return false;
  }
  return true;
}

Vector operator+(Vector a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::dimension_mismatch, "vector sum of different lengths");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Vector operator-(Vector a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::dimension_mismatch, "vector difference of different lengths");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

Vector operator*(const Scalar& c, Vector v) {
  for (auto& s : v) s *= c;
  return v;
}

void axpy(Vector& a, const Scalar& c, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::dimension_mismatch, "axpy on different lengths");
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!b[i].is_zero()) a[i] += c * b[i];
  }
}

std::string to_string(const Vector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ')';
  return os.str();
}

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(const Field& f, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::dimension_mismatch, "row length differs from column count");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const Field& f, std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(f, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw Error(ErrorCode::dimension_mismatch, "column length differs from row count");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool Matrix::is_zero() const { return gcell::is_zero(data_); }

bool Matrix::is_identity() const {
  if (!square()) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const Scalar& s = (*this)(r, c);
      if (r == c ? !s.is_one() : !s.is_zero()) return false;
    }
  }
  return true;
}

bool Matrix::is_scalar_multiple_of_identity(Scalar* c) const {
  if (!square()) return false;
  Scalar diag = rows_ ? (*this)(0, 0) : Scalar::zero(field_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t col = 0; col < cols_; ++col) {
      const Scalar& s = (*this)(r, col);
      if (r == col ? !(s == diag) : !s.is_zero()) return false;
    }
  }
  if (c) *c = diag;
  return true;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorCode::dimension_mismatch, "matrix product shapes");
  Matrix out(field_, rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) {
        const Scalar& b = o(k, c);
        if (!b.is_zero()) out(r, c) += a * b;
      }
    }
  }
  return out;
}

Vector Matrix::operator*(const Vector& v) const {
  if (cols_ != v.size()) throw Error(ErrorCode::dimension_mismatch, "matrix-vector shapes");
  Vector out = zero_vector(field_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!v[c].is_zero() && !(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * v[c];
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::dimension_mismatch, "matrix sum shapes");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::dimension_mismatch, "matrix difference shapes");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
  return out;
}

Matrix operator*(const Scalar& c, Matrix m) {
  for (auto& s : m.data_) s *= c;
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << "; ";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ", ";
      os << (*this)(r, c);
    }
  }
  os << ']';
  return os.str();
}

RrefResult rref(const Matrix& m) {
  RrefResult out{m, 0, {}};
  Matrix& a = out.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(pivot, c), a(row, c));
    }
    Scalar inv = a(row, col).inverse();
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      Scalar factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) {
        if (!a(row, c).is_zero()) a(r, c) -= factor * a(row, c);
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = row;
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Scalar determinant(const Matrix& m) {
  if (!m.square()) throw Error(ErrorCode::dimension_mismatch, "determinant of a non-square matrix");
  Matrix a = m;
  const std::size_t n = a.rows();
  Scalar det = Scalar::one(a.field());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return Scalar::zero(a.field());
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    Scalar inv = a(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      Scalar factor = a(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) a(r, c) -= factor * a(col, c);
    }
  }
  return det;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorCode::dimension_mismatch, "solve: row counts differ");
  const std::size_t n = a.cols();
  Matrix aug(a.field(), a.rows(), n + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) aug(r, n + c) = b(r, c);
  }
  RrefResult rr = rref(aug);
  if (!rr.pivots.empty() && rr.pivots.back() >= n) return std::nullopt;
  Matrix x(a.field(), n, b.cols());
  for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
    for (std::size_t c = 0; c < b.cols(); ++c) x(rr.pivots[i], c) = rr.reduced(i, n + c);
  }
  return x;
}

std::optional<Matrix> invert(const Matrix& m) {
  if (!m.square()) throw Error(ErrorCode::dimension_mismatch, "invert: matrix is not square");
  if (rank(m) < m.rows()) return std::nullopt;
  return solve(m, Matrix::identity(m.field(), m.rows()));
}

std::vector<Vector> nullspace(const Matrix& m) {
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : rr.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = unit_vector(m.field(), m.cols(), free);
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) v[rr.pivots[i]] = -rr.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace gcell
