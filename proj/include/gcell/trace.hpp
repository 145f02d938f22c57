#pragma once

#include <optional>
#include <utility>

#include "gcell/algebra.hpp"

namespace gcell {

/// A linear functional on an algebra, stored by its values on the basis.
class TraceForm {
 public:
  TraceForm(AlgebraPtr algebra, Vector values);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  const Vector& values() const noexcept { return values_; }
  Scalar operator()(const Vector& v) const;

  /// The unique d with the form nonzero only on A_{-d}; nullopt when it is
  /// nonzero on two components or identically zero.
  std::optional<int> degree() const;
  /// T_ij = tau(x_i x_j).
  Matrix gram() const;

 private:
  AlgebraPtr algebra_;
  Vector values_;
};

/// Like TraceForm::degree but throws Error(not_homogeneous) or
/// Error(zero_trace).
int trace_degree(const TraceForm& t);

struct SymmetrizingCheck {
  bool symmetric = true;
  bool nondegenerate = true;
  /// First basis pair (i, j) with tau(x_i x_j) != tau(x_j x_i).
  std::optional<std::pair<std::size_t, std::size_t>> asymmetric_pair;

  bool ok() const { return symmetric && nondegenerate; }
  explicit operator bool() const { return ok(); }
};

SymmetrizingCheck is_symmetrizing(const TraceForm& t);

/// tau_z(a) = tau(z a). Throws Error(not_central) unless z is central and
/// Error(degenerate) when the twisted form is degenerate.
TraceForm twist_trace(const TraceForm& t, const AlgElement& z);

}  // namespace gcell
