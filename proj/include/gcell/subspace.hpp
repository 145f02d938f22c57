#pragma once

#include <optional>
#include <vector>

#include "gcell/matrix.hpp"

namespace gcell {

/// A subspace of K^n held by its canonical basis: the nonzero rows of the
/// reduced row-echelon form. Two subspaces are equal exactly when their
/// canonical bases are identical.
class Subspace {
 public:
  static Subspace zero(const Field& f, std::size_t ambient_dim);
  static Subspace full(const Field& f, std::size_t ambient_dim);
  static Subspace span(const Field& f, std::size_t ambient_dim, const std::vector<Vector>& generators);

  const Field& field() const noexcept { return basis_.field(); }
  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Matrix& basis() const noexcept { return basis_; }
  std::vector<Vector> basis_vectors() const;

  bool contains(const Vector& v) const;
  /// Coordinates of v in the canonical basis, nullopt when v is outside.
  std::optional<Vector> coordinates(const Vector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  explicit Subspace(Matrix basis) : basis_(std::move(basis)) {}

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
/// Zassenhaus intersection.
Subspace intersect(const Subspace& a, const Subspace& b);
/// b is a subspace of a.
bool contains(const Subspace& a, const Subspace& b);
/// First canonical basis vector of b lying outside a, if any.
std::optional<Vector> containment_witness(const Subspace& a, const Subspace& b);

}  // namespace gcell
