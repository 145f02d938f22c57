#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gcell/cellular.hpp"
#include "gcell/path_algebra.hpp"
#include "gcell/trace.hpp"

namespace gcell {

/// An algebra together with the optional cell datum and trace that most
/// operations need.
struct Instance {
  std::string name;
  AlgebraPtr algebra;
  std::optional<CellDatum> cells;
  std::optional<TraceForm> trace;

  /// Throws Error(missing_data) when absent.
  const CellDatum& require_cells() const;
  const TraceForm& require_trace() const;
};

/// K[x]/(x^2) with deg x = 2, * = id, tau(1) = 0, tau(x) = 1. Two one-member
/// cells lambda1 < lambda2 with C^{lambda1} = x (member degree 1) and
/// C^{lambda2} = 1 (member degree 0).
Instance build_dual_numbers(const Field& field);

/// The quiver presentation behind `build_zigzag`: the linear quiver on n
/// vertices with a_i: i -> i+1 and a_i': i+1 -> i, all arrows of degree 1.
/// Relations: paths of length >= 3, a_i' a_i = a_{i+1} a_{i+1}', and
/// a_i a_{i+1} = a_{i+1}' a_i' = 0.
QuiverPresentation zigzag_quiver(std::size_t n);

/// Quotient of `zigzag_quiver(n)`, dimension 4n - 2, with * swapping a_i and
/// a_i', tau = 1 on the loops and 0 elsewhere, and the (n+1)-cell chain
///   e_1 ; [a_k a_k', a_k ; a_k', e_{k+1}] (k = 1..n-1) ; a_{n-1}' a_{n-1}
/// ordered so that later cells are lower. Requires n >= 2; throws
/// Error(bad_characteristic) when the characteristic divides n + 1.
Instance build_zigzag(const Field& field, std::size_t n);

/// Cell datum for M_n: C_{a,b} = e_{sigma1^-1(a), sigma2^-1(b)}, one cell,
/// members 1..n with degrees `deg`. Permutations are 0-based images.
struct MatrixCellSpec {
  std::size_t n = 1;
  std::vector<std::size_t> sigma1;
  std::vector<std::size_t> sigma2;
  std::vector<int> deg;

  /// sigma1 = id, sigma2 = reversal, deg from the odd/even formulas.
  static MatrixCellSpec canonical(std::size_t n);
  /// sigma = sigma1 sigma2^-1.
  std::vector<std::size_t> sigma() const;
  /// sigma^2 = id and deg(i) = -deg(sigma(i)) for all i.
  bool satisfies_criterion() const;
};

/// M_n over `field` with the spec's labels, * : C_{a,b} -> C_{b,a} and the
/// matrix trace. Grading and involution are not enforced at build time, so
/// invalid specs are representable and fail validation afterwards. For the
/// canonical spec the trace is checked to equal "1 on degree-0 cellular
/// basis elements, 0 elsewhere".
Instance build_matrix_algebra(const Field& field, const MatrixCellSpec& spec);

/// Block-diagonal direct sum with disjoint cell posets. Throws
/// Error(mixed_fields) or Error(mixed_trace_degrees).
Instance build_direct_sum(const std::vector<Instance>& parts);

}  // namespace gcell
