#include "gcell/subspace.hpp"

#include "gcell/error.hpp"

namespace gcell {

namespace {

void require_compatible(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(ErrorCode::dimension_mismatch, "subspaces of K^" + std::to_string(a.ambient_dim()) + " and K^" +
                                                   std::to_string(b.ambient_dim()));
  }
  if (!(a.field() == b.field())) throw Error(ErrorCode::field_mismatch, "subspaces over different fields");
}

}  // namespace

Subspace Subspace::zero(const Field& f, std::size_t ambient_dim) {
  Subspace s(Matrix(f, 0, ambient_dim));
  return s;
}

Subspace Subspace::full(const Field& f, std::size_t ambient_dim) {
  Subspace s(Matrix::identity(f, ambient_dim));
  for (std::size_t i = 0; i < ambient_dim; ++i) s.pivots_.push_back(i);
  return s;
}

Subspace Subspace::span(const Field& f, std::size_t ambient_dim, const std::vector<Vector>& generators) {
  if (generators.empty()) return zero(f, ambient_dim);
  RrefResult rr = rref(Matrix::from_rows(f, ambient_dim, generators));
  Matrix basis(f, rr.rank, ambient_dim);
  for (std::size_t r = 0; r < rr.rank; ++r) {
    for (std::size_t c = 0; c < ambient_dim; ++c) basis(r, c) = rr.reduced(r, c);
  }
  Subspace s(std::move(basis));
  s.pivots_ = std::move(rr.pivots);
  return s;
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  for (std::size_t r = 0; r < dim(); ++r) out.push_back(basis_.row(r));
  return out;
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (v.size() != ambient_dim()) throw Error(ErrorCode::dimension_mismatch, "vector length differs from ambient dimension");
  // With a reduced echelon basis the coordinate on row r is v at its pivot.
  Vector coords;
  Vector rest = v;
  for (std::size_t r = 0; r < dim(); ++r) {
    Scalar c = v[pivots_[r]];
    coords.push_back(c);
    axpy(rest, -c, basis_.row(r));
  }
  if (!is_zero(rest)) return std::nullopt;
  return coords;
}

bool Subspace::contains(const Vector& v) const { return coordinates(v).has_value(); }

Subspace sum(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  std::vector<Vector> gens = a.basis_vectors();
  for (auto& v : b.basis_vectors()) gens.push_back(std::move(v));
  return Subspace::span(a.field(), a.ambient_dim(), gens);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  const std::size_t n = a.ambient_dim();
  const Field& f = a.field();
  // Rows (u | u) for u in a and (v | 0) for v in b; after reduction the rows
  // whose left half vanishes carry a basis of the intersection on the right.
  std::vector<Vector> rows;
  for (const auto& u : a.basis_vectors()) {
    Vector r = u;
    r.insert(r.end(), u.begin(), u.end());
    rows.push_back(std::move(r));
  }
  for (const auto& v : b.basis_vectors()) {
    Vector r = v;
    Vector z = zero_vector(f, n);
    r.insert(r.end(), z.begin(), z.end());
    rows.push_back(std::move(r));
  }
  if (rows.empty()) return Subspace::zero(f, n);
  RrefResult rr = rref(Matrix::from_rows(f, 2 * n, rows));
  std::vector<Vector> gens;
  for (std::size_t r = 0; r < rr.rank; ++r) {
    if (rr.pivots[r] < n) continue;
    Vector right(n, Scalar::zero(f));
    for (std::size_t c = 0; c < n; ++c) right[c] = rr.reduced(r, n + c);
    gens.push_back(std::move(right));
  }
  return Subspace::span(f, n, gens);
}

bool contains(const Subspace& a, const Subspace& b) { return !containment_witness(a, b).has_value(); }

std::optional<Vector> containment_witness(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  for (const auto& v : b.basis_vectors()) {
    if (!a.contains(v)) return v;
  }
  return std::nullopt;
}

}  // namespace gcell
