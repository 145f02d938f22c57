#pragma once

#include <string>
#include <string_view>

#include "gcell/builders.hpp"

namespace gcell {

// Presentation documents are JSON objects:
//
//   field      {"kind": "rational"} or {"kind": "prime", "p": 7}
//   basis      list of labels
//   mult       list of [i, j, k, "coeff"] (x_i x_j has coeff on x_k)
//   degree     list of integers
//   involution {"permutation": [...]} or {"matrix": [[row, col, "coeff"], ...]}
//   trace      optional list of scalar strings
//   cell       optional {lambdas, less: [[a, b]], tableaux: [[{name, deg}]],
//              map: [[lambda, S, T, basis]]}
//   name       optional instance name
//
// Scalars are strings so rationals stay exact. Keys are written in sorted
// order.

/// Throws Error(syntax_error) for malformed JSON and Error(validation_error)
/// naming the offending location for anything else. Grading and involution
/// axioms are not enforced here; `check` reports them.
Instance parse_document(std::string_view text);

std::string serialize_document(const Instance& instance);

}  // namespace gcell
