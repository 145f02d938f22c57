#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gcell/algebra.hpp"

namespace gcell {

/// Paths compose left to right: the path a b runs along a first, then b.
struct QuiverArrow {
  std::size_t source = 0;
  std::size_t target = 0;
  std::string label;
  int degree = 1;
};

/// A coefficient times a path of length >= 1, given as arrow indices.
struct PathTerm {
  std::string coeff;
  std::vector<std::size_t> arrows;
};

struct QuiverPresentation {
  std::size_t vertices = 0;
  std::vector<QuiverArrow> arrows;
  /// Each relation is a formal sum of parallel paths set to zero.
  std::vector<std::vector<PathTerm>> relations;
  /// Paths of at least this length vanish (monomial truncation).
  std::optional<std::size_t> truncate_at;
  /// Image of each arrow under *; paths are reversed. Defaults to the
  /// identity on arrows, which is only an anti-automorphism for loops.
  std::vector<std::size_t> arrow_involution;
  /// Vertex labels; "e1", "e2", ... when empty.
  std::vector<std::string> vertex_labels;
};

/// Quotient of the path algebra by the relations. Each relation is oriented
/// as a rewrite rule from its largest path in (length, arrow-index lex)
/// order; basis = irreducible paths, vertices first. Confluence of the rules
/// is checked on all overlaps.
///
/// Errors: inhomogeneous_relation, non_confluent, infinite_dimensional
/// (more than `max_dim` irreducible paths), validation_error for malformed
/// input, plus anything Algebra::make raises.
AlgebraPtr build_path_algebra(const QuiverPresentation& q, const Field& field, std::size_t max_dim = 4096);

/// Basis label of a path: vertex label for length 0, concatenated arrow
/// labels otherwise.
std::string path_label(const QuiverPresentation& q, std::size_t vertex, const std::vector<std::size_t>& arrows);

}  // namespace gcell
