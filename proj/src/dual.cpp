#include "gcell/dual.hpp"

#include "gcell/error.hpp"

namespace gcell {

DualBasis::DualBasis(TraceForm trace) : trace_(std::move(trace)) {
  auto inv = invert(trace_.gram());
  if (!inv) throw Error(ErrorCode::degenerate, "the trace Gram matrix is singular");
  change_ = std::move(*inv);
  for (std::size_t j = 0; j < change_.cols(); ++j) duals_.push_back(change_.column(j));
}

DualBasis::DualBasis(TraceForm trace, CellDatum cells) : DualBasis(std::move(trace)) {
  if (cells.algebra() != trace_.algebra()) throw Error(ErrorCode::algebra_mismatch, "cell datum of another algebra");
  cells_ = std::move(cells);
}

const CellDatum& DualBasis::cells() const {
  if (!cells_) throw Error(ErrorCode::missing_data, "no cell datum attached to the dual basis");
  return *cells_;
}

const Vector& DualBasis::cell_dual(std::size_t lambda, std::size_t u, std::size_t v) const {
  return duals_.at(cells().index(lambda, v, u));
}

CellularFamily DualBasis::dual_family() const {
  const CellDatum& cd = cells();
  const Algebra& alg = algebra();
  std::vector<Vector> elements(alg.dim());
  for (std::size_t i = 0; i < alg.dim(); ++i) elements[i] = cell_dual(cd.label(i));

  std::optional<std::vector<std::vector<int>>> degrees(std::in_place);
  for (std::size_t l = 0; l < cd.cell_count() && degrees; ++l) {
    std::vector<int> row;
    for (std::size_t s = 0; s < cd.size(l); ++s) {
      auto d = alg.homogeneous_degree(cell_dual(l, s, s));
      if (!d || *d % 2 != 0) {
        degrees.reset();
        break;
      }
      row.push_back(*d / 2);
    }
    if (degrees) degrees->push_back(std::move(row));
  }
  return CellularFamily(cd, std::move(elements), true, std::move(degrees), "D");
}

Matrix dual_gram(const DualBasis& db, std::size_t lambda) { return gram_of_family(db.dual_family(), lambda); }

Vector diagonal_product(const DualBasis& db, std::size_t lambda, std::size_t s) {
  const CellDatum& cd = db.cells();
  return db.algebra().left_multiply(cd.index(lambda, s, s), db.cell_dual(lambda, s, s));
}

KLambdaTable k_lambda(const DualBasis& db) {
  const CellDatum& cd = db.cells();
  const Algebra& alg = db.algebra();
  CellularFamily dual = db.dual_family();
  KLambdaTable table;
  for (std::size_t l = 0; l < cd.cell_count(); ++l) {
    Matrix product = gram(cd, l) * gram_of_family(dual, l);
    Scalar k = Scalar::zero(alg.field());
    if (!product.is_scalar_multiple_of_identity(&k)) {
      throw Error(ErrorCode::not_scalar_multiple, "G(" + cd.name(l) + ") G'(" + cd.name(l) + ") = " +
                                                      product.to_string() + " is not scalar");
    }
    for (std::size_t s = 0; s < cd.size(l); ++s) {
      Vector e = diagonal_product(db, l, s);
      Vector sq = alg.multiply(e, e);
      if (!(sq == k * e)) {
        throw Error(ErrorCode::not_scalar_multiple, "(C_{S,S} D_{S,S})^2 != k C_{S,S} D_{S,S} for k = " +
                                                        k.to_string() + " in cell " + cd.name(l) + " at S = " +
                                                        cd.members(l)[s].name);
      }
    }
    table.k.push_back(k);
  }
  return table;
}

std::vector<Vector> e_lambda(const DualBasis& db) {
  const CellDatum& cd = db.cells();
  std::vector<Vector> out;
  for (std::size_t l = 0; l < cd.cell_count(); ++l) {
    Vector e = db.algebra().zero();
    for (std::size_t s = 0; s < cd.size(l); ++s) e = e + diagonal_product(db, l, s);
    out.push_back(std::move(e));
  }
  return out;
}

std::map<std::pair<std::size_t, int>, Vector> e_lambda_graded(const DualBasis& db) {
  const CellDatum& cd = db.cells();
  std::map<std::pair<std::size_t, int>, Vector> out;
  for (std::size_t l = 0; l < cd.cell_count(); ++l) {
    for (std::size_t s = 0; s < cd.size(l); ++s) {
      auto key = std::make_pair(l, cd.degree(l, s));
      auto it = out.find(key);
      if (it == out.end()) it = out.emplace(key, db.algebra().zero()).first;
      it->second = it->second + diagonal_product(db, l, s);
    }
  }
  return out;
}

DualCellularCheck check_dual_cellular(const DualBasis& db) {
  const Algebra& alg = db.algebra();
  const CellDatum& cd = db.cells();
  auto d = db.trace().degree();
  if (!d) throw Error(ErrorCode::non_homogeneous_trace, "the dual-cellularity criterion needs a homogeneous trace");

  DualCellularCheck out;
  bool even = *d % 2 == 0;
  std::string star_witness;
  for (std::size_t i = 0; i < alg.dim() && star_witness.empty(); ++i) {
    Vector x = alg.basis_vector(i);
    if (!(db.trace()(alg.apply_involution(x)) == db.trace()(x))) star_witness = "tau(" + alg.label(i) + "*) != tau(" + alg.label(i) + ")";
  }
  out.criterion = even && star_witness.empty();
  out.report.add("dual-criterion", "d is even and tau(a*) = tau(a) for all a", out.criterion,
                 "d = " + std::to_string(*d) + (even ? " (even)" : " (odd)") +
                     (star_witness.empty() ? "; tau is *-invariant" : "; " + star_witness));

  CellularFamily family = db.dual_family();
  Report direct = validate_family(family);
  out.direct = direct.all_passed() && direct.count(Verdict::skipped) == 0;
  std::string detail;
  for (const auto& e : direct.entries) {
    detail += e.claim + ": " + verdict_name(e.verdict) + (e.witness.empty() ? "" : " (" + e.witness + ")") + "\n";
  }
  if (!detail.empty()) detail.pop_back();
  out.report.add("dual-direct", "the D-family satisfies (GC1)-(GC3) and (GC_d) directly", out.direct, detail);

  if (out.direct && even) {
    std::string mismatch;
    for (std::size_t l = 0; l < cd.cell_count() && mismatch.empty(); ++l) {
      for (std::size_t s = 0; s < cd.size(l); ++s) {
        int codeg = (*family.member_degrees())[l][s];
        if (codeg != -cd.degree(l, s) - *d / 2) {
          mismatch = "codeg(" + cd.members(l)[s].name + ") = " + std::to_string(codeg) + " in cell " + cd.name(l);
          break;
        }
      }
    }
    out.report.add("dual-codegree", "codeg(S) = -deg(S) - d/2", mismatch.empty(), mismatch);
  } else {
    out.report.skip("dual-codegree", "codeg(S) = -deg(S) - d/2", "D-family is not graded cellular");
  }
  out.report.add("dual-agreement", "criterion and direct test agree", out.criterion == out.direct,
                 std::string("criterion ") + (out.criterion ? "holds" : "fails") + ", direct test " +
                     (out.direct ? "holds" : "fails"));
  return out;
}

}  // namespace gcell
