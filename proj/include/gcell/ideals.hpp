#pragma once

#include <map>
#include <optional>

#include "gcell/dual.hpp"

namespace gcell {

/// H(A) = { sum_i x_i a y_i : a in A }, spanned by the images of the basis.
Subspace higman(const DualBasis& db);

struct GradedHigman {
  /// H_c(A) for every basis degree c.
  std::map<int, Subspace> components;
  /// H_gr(A), the span of all H_c(A).
  Subspace span;
};

/// Per-degree Higman pieces; throws Error(non_homogeneous_trace) when the
/// trace is not homogeneous.
GradedHigman higman_graded(const DualBasis& db);

struct LIdeals {
  Subspace l;
  Subspace l_graded;
};

LIdeals l_ideals(const DualBasis& db);

struct IdealFamily {
  Subspace higman;
  std::map<int, Subspace> higman_components;
  Subspace higman_graded;
  Subspace l;
  Subspace l_graded;
  Subspace center;
  Subspace centralizer_a0;
};

/// Everything above for one dual basis (the trace must be homogeneous).
IdealFamily ideal_family(const DualBasis& db);

/// Containments H ⊆ L ⊆ A_{-d}, dim H <= dim A_0, H_gr ⊆ L_gr ⊆ Z_A(A_0) and
/// centrality, one entry each. Entries whose hypothesis d != 0 fails are
/// reported as skipped.
Report ideal_report(const Algebra& alg, const IdealFamily& family, int d);

struct SemisimpleVerdict {
  /// Semisimplicity itself: the regular-trace form is non-degenerate over
  /// characteristic 0; over F_p the k_lambda criterion stands in for it.
  bool semisimple = false;
  bool all_k_nonzero = false;
  bool cd_basis = false;
  bool l_graded_is_centralizer = false;
  /// Regular-representation trace-form oracle, characteristic 0 only.
  std::optional<bool> regular_trace_oracle;
  Report report;
};

/// Evaluates all semisimplicity criteria; throws Error(inconsistent_verdicts)
/// if they disagree.
SemisimpleVerdict semisimple_verdict(const DualBasis& db);

/// Dickson's criterion: the form (a, b) -> trace of left multiplication by
/// ab is non-degenerate. Valid as a semisimplicity test in characteristic 0.
bool regular_trace_nondegenerate(const Algebra& alg);

}  // namespace gcell
