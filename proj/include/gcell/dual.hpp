#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gcell/cellular.hpp"
#include "gcell/trace.hpp"

namespace gcell {

/// The dual basis {y_j} of a non-degenerate trace, tau(x_i y_j) = delta_ij,
/// with y_j = sum_k B_kj x_k. When a cell datum is attached the duals are
/// relabelled as D^lambda_{U,V} := dual of C^lambda_{V,U}, which gives
/// tau(C^lambda_{S,T} D^mu_{U,V}) = delta_{lambda mu} delta_{SV} delta_{TU}.
class DualBasis {
 public:
  /// Throws Error(degenerate) when the trace Gram matrix is singular.
  explicit DualBasis(TraceForm trace);
  DualBasis(TraceForm trace, CellDatum cells);

  const TraceForm& trace() const noexcept { return trace_; }
  const Algebra& algebra() const noexcept { return *trace_.algebra(); }
  const Matrix& change_of_basis() const noexcept { return change_; }
  const Vector& dual(std::size_t j) const { return duals_.at(j); }

  bool has_cells() const noexcept { return cells_.has_value(); }
  /// Throws Error(missing_data) when no cell datum is attached.
  const CellDatum& cells() const;
  const Vector& cell_dual(std::size_t lambda, std::size_t u, std::size_t v) const;
  const Vector& cell_dual(const CellLabel& l) const { return cell_dual(l.lambda, l.s, l.t); }

  /// The D-family as a cellular family with the reversed order. Member
  /// degrees are read off the diagonal elements D^lambda_{S,S} (half their
  /// degree) and are absent if any diagonal element is inhomogeneous or of
  /// odd degree.
  CellularFamily dual_family() const;

 private:
  TraceForm trace_;
  std::optional<CellDatum> cells_;
  Matrix change_;
  std::vector<Vector> duals_;
};

/// Gram matrix G'(lambda) of the D-family, by the same extraction rule as
/// `gram` modulo D-terms of cells above lambda.
Matrix dual_gram(const DualBasis& db, std::size_t lambda);

struct KLambdaTable {
  std::vector<Scalar> k;

  /// The cell module is projective exactly when k is nonzero.
  bool projective(std::size_t lambda) const { return !k.at(lambda).is_zero(); }
};

/// k_lambda with G(lambda) G'(lambda) = k_lambda E, cross-checked against
/// (C_{S,S} D_{S,S})^2 = k_lambda C_{S,S} D_{S,S} for every S. Throws
/// Error(not_scalar_multiple) if either relation fails.
KLambdaTable k_lambda(const DualBasis& db);

/// C^lambda_{S,S} D^lambda_{S,S}.
Vector diagonal_product(const DualBasis& db, std::size_t lambda, std::size_t s);
/// e_lambda = sum_S C_{S,S} D_{S,S}, indexed by lambda.
std::vector<Vector> e_lambda(const DualBasis& db);
/// e_{lambda,c} = sum_{deg S = c} C_{S,S} D_{S,S}; only occurring (lambda, c).
std::map<std::pair<std::size_t, int>, Vector> e_lambda_graded(const DualBasis& db);

struct DualCellularCheck {
  /// d is even and tau(a*) = tau(a) for all a.
  bool criterion = false;
  /// The D-family passes (GC1)-(GC3) and (GC_d) directly.
  bool direct = false;
  Report report;
};

/// Evaluates the parity/*-invariance criterion and, independently, the
/// direct graded-cellularity test of the D-family. Throws
/// Error(non_homogeneous_trace) for an inhomogeneous trace.
DualCellularCheck check_dual_cellular(const DualBasis& db);

}  // namespace gcell
