#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gcell/algebra.hpp"
#include "gcell/report.hpp"

namespace gcell {

/// A member S of some M(lambda) with its degree deg(S).
struct Tableau {
  std::string name;
  int degree = 0;
};

/// Position (lambda, S, T) of a cellular basis element C^lambda_{S,T}.
struct CellLabel {
  std::size_t lambda = 0;
  std::size_t s = 0;
  std::size_t t = 0;

  friend bool operator==(const CellLabel&, const CellLabel&) = default;
};

/// Cell datum (Lambda, M, C, *) attached to an algebra: the poset, the
/// members of each M(lambda) with degrees, and the bijection between
/// labels (lambda, S, T) and basis indices.
class CellDatum {
 public:
  struct MapEntry {
    std::size_t lambda = 0;
    std::size_t s = 0;
    std::size_t t = 0;
    std::size_t basis = 0;
  };

  /// `less` holds strict pairs (a, b) meaning lambda_a < lambda_b; the
  /// transitive closure is computed and cycles are rejected. Throws
  /// Error(validation_error) on out-of-range data, cycles, or a map that is
  /// not a bijection onto the basis.
  static CellDatum make(AlgebraPtr algebra, std::vector<std::string> lambdas,
                        std::vector<std::pair<std::size_t, std::size_t>> less, std::vector<std::vector<Tableau>> tableaux,
                        const std::vector<MapEntry>& map);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  std::size_t cell_count() const noexcept { return lambdas_.size(); }
  const std::string& name(std::size_t lambda) const { return lambdas_.at(lambda); }
  const std::vector<std::string>& names() const noexcept { return lambdas_; }
  const std::vector<Tableau>& members(std::size_t lambda) const { return tableaux_.at(lambda); }
  std::size_t size(std::size_t lambda) const { return tableaux_.at(lambda).size(); }
  int degree(std::size_t lambda, std::size_t s) const { return tableaux_.at(lambda).at(s).degree; }

  /// mu < lambda in the transitive closure.
  bool less(std::size_t mu, std::size_t lambda) const { return closure_[mu * cell_count() + lambda]; }
  const std::vector<std::pair<std::size_t, std::size_t>>& less_pairs() const noexcept { return less_pairs_; }

  std::size_t index(std::size_t lambda, std::size_t s, std::size_t t) const;
  std::size_t index(const CellLabel& l) const { return index(l.lambda, l.s, l.t); }
  const CellLabel& label(std::size_t basis_index) const { return labels_.at(basis_index); }
  /// Map entries in basis order.
  std::vector<MapEntry> map_entries() const;

  /// "C^name_{S,T}" with the given symbol.
  std::string format(const CellLabel& l, const std::string& symbol = "C") const;

 private:
  CellDatum() = default;

  AlgebraPtr algebra_;
  std::vector<std::string> lambdas_;
  std::vector<std::pair<std::size_t, std::size_t>> less_pairs_;
  std::vector<bool> closure_;
  std::vector<std::vector<Tableau>> tableaux_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> index_;
  std::vector<CellLabel> labels_;
};

/// A family of algebra elements indexed like a cell datum, together with
/// the order used for the congruence "modulo lower cells". The cellular
/// basis itself is the standard family; the dual family uses the reversed
/// order and its own member degrees.
class CellularFamily {
 public:
  static CellularFamily standard(const CellDatum& cd);
  /// `elements[cd.index(l)]` is the family element labelled l.
  CellularFamily(const CellDatum& cd, std::vector<Vector> elements, bool reversed_order,
                 std::optional<std::vector<std::vector<int>>> member_degrees, std::string symbol);

  const CellDatum& datum() const noexcept { return datum_; }
  const Vector& element(std::size_t lambda, std::size_t s, std::size_t t) const {
    return elements_[datum_.index(lambda, s, t)];
  }
  const Vector& element(const CellLabel& l) const { return elements_[datum_.index(l)]; }
  bool is_basis() const noexcept { return inverse_.has_value() || standard_; }
  /// Coordinates of v in the family (indexed by basis position).
  Vector coordinates(const Vector& v) const;
  /// Whether C^mu terms are discarded when reducing modulo cells below lambda.
  bool below(std::size_t mu, std::size_t lambda) const {
    return reversed_ ? datum_.less(lambda, mu) : datum_.less(mu, lambda);
  }
  /// Member degrees for the (GC_d) check; nullopt when none exist.
  const std::optional<std::vector<std::vector<int>>>& member_degrees() const noexcept { return degrees_; }
  const std::string& symbol() const noexcept { return symbol_; }

 private:
  CellDatum datum_;
  std::vector<Vector> elements_;
  std::optional<Matrix> inverse_;
  bool standard_ = false;
  bool reversed_ = false;
  std::optional<std::vector<std::vector<int>>> degrees_;
  std::string symbol_;
};

/// Exhaustive check of (GC1), (GC2), (GC3) and (GC_d) for a family; one
/// report entry per axiom with the first witness on failure.
Report validate_family(const CellularFamily& family);
Report validate_cell_datum(const CellDatum& cd);

/// C^lambda_{S,T} C^mu_{U,V} expanded in the cellular basis.
struct CellularExpansion {
  std::vector<std::pair<CellLabel, Scalar>> terms;
  /// Coefficient on a label (zero when absent).
  Scalar coefficient(const CellLabel& l, const Field& f) const;
};

CellularExpansion expand(const CellDatum& cd, const CellLabel& a, const CellLabel& b);

/// Gram matrix (Phi(S,T)) for one cell, read from products modulo lower
/// cells. Throws Error(inconsistent_phi) if the coefficient depends on the
/// outer indices or stray terms survive the reduction.
Matrix gram_of_family(const CellularFamily& family, std::size_t lambda);
Matrix gram(const CellDatum& cd, std::size_t lambda);

/// Cell module W(lambda): basis C_S and one action matrix (r_a(S', S)) per
/// algebra basis element a.
struct CellModule {
  std::size_t lambda = 0;
  std::vector<std::string> basis;
  std::vector<Matrix> action;

  /// Action matrix of an arbitrary algebra element (linear extension).
  Matrix act(const Vector& a) const;
};

CellModule cell_module(const CellDatum& cd, std::size_t lambda);

}  // namespace gcell
