#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gcell/matrix.hpp"
#include "gcell/subspace.hpp"

namespace gcell {

/// One structure constant: x_i x_j has coefficient `coeff` on x_k.
struct ProductEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  Scalar coeff;
};

struct StructureTerm {
  std::size_t k = 0;
  Scalar coeff;
};

/// Which axioms Algebra::make enforces. Associativity and the identity are
/// always enforced; grading and involution checks can be deferred to
/// cell-datum validation so that deliberately invalid cellular data can
/// still be represented.
struct AlgebraChecks {
  bool grading = true;
  bool involution = true;
};

/// A finite-dimensional associative unital Z-graded algebra given by
/// structure constants x_i x_j = sum_k r_ijk x_k, together with a linear
/// map * (stored as a matrix whose column j holds the coordinates of x_j*).
class Algebra {
 public:
  using Checks = AlgebraChecks;

  /// Builds and verifies an algebra. The identity element is solved for.
  /// Throws Error with code non_associative, no_identity, not_graded or
  /// bad_involution naming the first violation.
  static std::shared_ptr<const Algebra> make(const Field& field, std::vector<std::string> labels,
                                             const std::vector<ProductEntry>& mult, std::vector<int> degrees,
                                             Matrix involution, Checks checks = {});

  const Field& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<int>& degrees() const noexcept { return degrees_; }
  int degree(std::size_t i) const { return degrees_.at(i); }
  const Matrix& involution() const noexcept { return involution_; }
  const Vector& identity() const noexcept { return identity_; }

  std::span<const StructureTerm> product_terms(std::size_t i, std::size_t j) const {
    return table_[i * dim() + j];
  }
  Scalar structure_constant(std::size_t i, std::size_t j, std::size_t k) const;
  /// All nonzero structure constants in (i, j, k) order.
  std::vector<ProductEntry> product_entries() const;

  Vector zero() const { return zero_vector(field_, dim()); }
  Vector basis_vector(std::size_t i) const { return unit_vector(field_, dim(), i); }
  Vector multiply(const Vector& a, const Vector& b) const;
  /// x_i * v
  Vector left_multiply(std::size_t i, const Vector& v) const;
  /// v * x_j
  Vector right_multiply(const Vector& v, std::size_t j) const;
  Vector apply_involution(const Vector& v) const { return involution_ * v; }

  /// Distinct degrees occurring in the basis, ascending.
  std::vector<int> degree_values() const;
  /// Homogeneous of some degree (the zero vector counts as homogeneous).
  std::optional<int> homogeneous_degree(const Vector& v) const;

  /// First (i, j, k) with (x_i x_j) x_k != x_i (x_j x_k).
  std::optional<std::array<std::size_t, 3>> associativity_violation() const;
  /// Description of the first structure constant breaking A_i A_j ⊆ A_{i+j}.
  std::optional<std::string> grading_violation() const;
  /// Description of the first failure of * being a degree-preserving
  /// involutive anti-automorphism.
  std::optional<std::string> involution_violation() const;

 private:
  Algebra() = default;

  Field field_ = Field::rational();
  std::vector<std::string> labels_;
  std::vector<int> degrees_;
  std::vector<std::vector<StructureTerm>> table_;
  Matrix involution_;
  Vector identity_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// An element of a specific algebra.
class AlgElement {
 public:
  AlgElement(AlgebraPtr algebra, Vector coeffs);
  static AlgElement basis(AlgebraPtr algebra, std::size_t i);
  static AlgElement one(AlgebraPtr algebra);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  const Vector& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const { return gcell::is_zero(coeffs_); }

  friend AlgElement operator*(const AlgElement& a, const AlgElement& b);
  friend AlgElement operator+(const AlgElement& a, const AlgElement& b);
  friend AlgElement operator-(const AlgElement& a, const AlgElement& b);
  friend AlgElement operator*(const Scalar& c, const AlgElement& a);
  friend bool operator==(const AlgElement& a, const AlgElement& b);

  /// Linear combination of basis labels, e.g. "2*x + 1".
  std::string to_string() const;

 private:
  AlgebraPtr algebra_;
  Vector coeffs_;
};

/// Bilinear product; throws Error(algebra_mismatch) for elements of
/// different algebras.
AlgElement multiply(const AlgElement& a, const AlgElement& b);

/// Linear combination rendered with the algebra's basis labels.
std::string format_element(const Algebra& alg, const Vector& v);

/// Span of the basis vectors of degree i.
Subspace degree_component(const Algebra& alg, int i);
/// {z : z x_i = x_i z for all i}.
Subspace center(const Algebra& alg);
/// {a : a b = b a for every b in s}.
Subspace centralizer(const Algebra& alg, const Subspace& s);
/// z x_i = x_i z for every basis element.
bool is_central(const Algebra& alg, const Vector& z);

}  // namespace gcell
