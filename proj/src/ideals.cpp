#include "gcell/ideals.hpp"

#include "gcell/error.hpp"

namespace gcell {

namespace {

// sum over i in `indices` of x_i a y_i, with a = x_j.
Vector higman_image(const DualBasis& db, std::size_t j, const std::vector<std::size_t>& indices) {
  const Algebra& alg = db.algebra();
  Vector out = alg.zero();
  for (std::size_t i : indices) {
    Vector xa = alg.zero();
    for (const auto& t : alg.product_terms(i, j)) xa[t.k] += t.coeff;
    out = out + alg.multiply(xa, db.dual(i));
  }
  return out;
}

Subspace higman_over(const DualBasis& db, const std::vector<std::size_t>& indices) {
  const Algebra& alg = db.algebra();
  std::vector<Vector> gens;
  for (std::size_t j = 0; j < alg.dim(); ++j) gens.push_back(higman_image(db, j, indices));
  return Subspace::span(alg.field(), alg.dim(), gens);
}

std::string describe_basis(const Algebra& alg, const Subspace& s) {
  if (s.dim() == 0) return "{0}";
  std::string out = "{";
  bool first = true;
  for (const auto& v : s.basis_vectors()) {
    if (!first) out += ", ";
    first = false;
    out += format_element(alg, v);
  }
  return out + "}";
}

void add_containment(Report& r, const Algebra& alg, const std::string& id, const std::string& statement,
                     const Subspace& big, const Subspace& small) {
  auto outside = containment_witness(big, small);
  std::string witness;
  if (outside) {
    witness = format_element(alg, *outside) + " is not contained";
  } else {
    witness = "dims " + std::to_string(small.dim()) + " <= " + std::to_string(big.dim());
    for (const auto& v : small.basis_vectors()) {
      witness += "\n" + format_element(alg, v) + " -> " + to_string(*big.coordinates(v));
    }
  }
  r.add(id, statement, !outside, witness);
}

}  // namespace

Subspace higman(const DualBasis& db) {
  std::vector<std::size_t> all(db.algebra().dim());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return higman_over(db, all);
}

GradedHigman higman_graded(const DualBasis& db) {
  const Algebra& alg = db.algebra();
  if (!db.trace().degree()) throw Error(ErrorCode::non_homogeneous_trace, "graded Higman pieces need a homogeneous trace");
  GradedHigman out{{}, Subspace::zero(alg.field(), alg.dim())};
  for (int c : alg.degree_values()) {
    std::vector<std::size_t> indices;
    for (std::size_t i = 0; i < alg.dim(); ++i) {
      if (alg.degree(i) == c) indices.push_back(i);
    }
    Subspace piece = higman_over(db, indices);
    out.span = sum(out.span, piece);
    out.components.emplace(c, std::move(piece));
  }
  return out;
}

LIdeals l_ideals(const DualBasis& db) {
  const Algebra& alg = db.algebra();
  std::vector<Vector> graded;
  for (auto& [key, e] : e_lambda_graded(db)) graded.push_back(e);
  return {Subspace::span(alg.field(), alg.dim(), e_lambda(db)), Subspace::span(alg.field(), alg.dim(), graded)};
}

IdealFamily ideal_family(const DualBasis& db) {
  const Algebra& alg = db.algebra();
  GradedHigman hg = higman_graded(db);
  LIdeals l = l_ideals(db);
  return IdealFamily{higman(db),
                     std::move(hg.components),
                     std::move(hg.span),
                     std::move(l.l),
                     std::move(l.l_graded),
                     center(alg),
                     centralizer(alg, degree_component(alg, 0))};
}

Report ideal_report(const Algebra& alg, const IdealFamily& f, int d) {
  Report r;
  add_containment(r, alg, "higman-central", "H(A) is contained in Z(A)", f.center, f.higman);
  add_containment(r, alg, "L-central", "L(A) is contained in Z(A)", f.center, f.l);
  add_containment(r, alg, "higman-in-L", "H(A) is contained in L(A)", f.l, f.higman);
  add_containment(r, alg, "higman-in-graded", "H(A) is contained in H_gr(A)", f.higman_graded, f.higman);
  add_containment(r, alg, "higman-graded-in-L-graded", "H_gr(A) is contained in L_gr(A)", f.l_graded, f.higman_graded);
  add_containment(r, alg, "L-graded-in-centralizer", "L_gr(A) is contained in Z_A(A_0)", f.centralizer_a0,
                  f.l_graded);
  const std::string why = "hypothesis d != 0 not met (d = 0)";
  Subspace top = degree_component(alg, -d);
  std::size_t dim_a0 = degree_component(alg, 0).dim();
  if (d != 0) {
    add_containment(r, alg, "L-in-trace-component", "L(A) is contained in A_{-d}", top, f.l);
    add_containment(r, alg, "higman-in-trace-component", "H(A) is contained in A_{-d}", top, f.higman);
    r.add("higman-dim-bound", "dim H(A) <= dim A_0", f.higman.dim() <= dim_a0,
          "dim H(A) = " + std::to_string(f.higman.dim()) + ", dim A_0 = " + std::to_string(dim_a0));
    bool strict = contains(f.centralizer_a0, f.l_graded) && f.l_graded.dim() < f.centralizer_a0.dim();
    r.add("L-graded-strict", "L_gr(A) is a proper subspace of Z_A(A_0)", strict,
          "dim L_gr(A) = " + std::to_string(f.l_graded.dim()) + ", dim Z_A(A_0) = " +
              std::to_string(f.centralizer_a0.dim()));
  } else {
    r.skip("L-in-trace-component", "L(A) is contained in A_{-d}", why);
    r.skip("higman-in-trace-component", "H(A) is contained in A_{-d}", why);
    r.skip("higman-dim-bound", "dim H(A) <= dim A_0", why);
    r.skip("L-graded-strict", "L_gr(A) is a proper subspace of Z_A(A_0)", why);
  }
  std::string dims = "H = " + describe_basis(alg, f.higman) + "\nL = " + describe_basis(alg, f.l) +
                     "\nH_gr = " + describe_basis(alg, f.higman_graded) + "\nL_gr = " + describe_basis(alg, f.l_graded) +
                     "\ndim Z(A) = " + std::to_string(f.center.dim()) +
                     ", dim Z_A(A_0) = " + std::to_string(f.centralizer_a0.dim());
  r.add("ideal-summary", "computed ideals (informational)", true, dims);
  return r;
}

bool regular_trace_nondegenerate(const Algebra& alg) {
  const std::size_t n = alg.dim();
  Vector reg = alg.zero();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) reg[k] += alg.structure_constant(k, i, i);
  }
  Matrix form(alg.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& t : alg.product_terms(i, j)) form(i, j) += t.coeff * reg[t.k];
    }
  }
  return rank(form) == n;
}

SemisimpleVerdict semisimple_verdict(const DualBasis& db) {
  const Algebra& alg = db.algebra();
  const CellDatum& cd = db.cells();
  SemisimpleVerdict v;

  KLambdaTable k = k_lambda(db);
  v.all_k_nonzero = true;
  std::string k_text;
  for (std::size_t l = 0; l < k.k.size(); ++l) {
    if (k.k[l].is_zero()) v.all_k_nonzero = false;
    k_text += (l ? ", " : "") + std::string("k_") + cd.name(l) + " = " + k.k[l].to_string();
  }

  std::vector<Vector> products;
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    const CellLabel& lab = cd.label(i);
    products.push_back(alg.left_multiply(i, db.cell_dual(lab.lambda, lab.t, lab.t)));
  }
  std::size_t cd_rank = rank(Matrix::from_rows(alg.field(), alg.dim(), products));
  v.cd_basis = cd_rank == alg.dim();

  Subspace l_graded = l_ideals(db).l_graded;
  Subspace z_a0 = centralizer(alg, degree_component(alg, 0));
  v.l_graded_is_centralizer = l_graded == z_a0;
  bool homogeneous = db.trace().degree().has_value();

  if (alg.field().is_rational()) {
    v.regular_trace_oracle = regular_trace_nondegenerate(alg);
    v.semisimple = *v.regular_trace_oracle;
  } else {
    v.semisimple = v.all_k_nonzero;
  }

  Report& r = v.report;
  r.add("semisimple", "A is semisimple", true,
        v.semisimple ? "yes" : "no");
  r.entries.back().witness += alg.field().is_rational() ? " (regular-representation trace form oracle)"
                                                        : " (k_lambda criterion; characteristic p)";
  r.add("k-nonzero", "k_lambda != 0 for every lambda", true, std::string(v.all_k_nonzero ? "yes" : "no") + ": " + k_text);
  r.add("cd-basis", "{C_{S,T} D_{T,T}} is a basis of A", true,
        std::string(v.cd_basis ? "yes" : "no") + ": rank " + std::to_string(cd_rank) + " of " + std::to_string(alg.dim()));
  if (homogeneous) {
    r.add("L-graded-equals-centralizer", "L_gr(A) = Z_A(A_0)", true,
          std::string(v.l_graded_is_centralizer ? "yes" : "no") + ": dim L_gr = " + std::to_string(l_graded.dim()) +
              ", dim Z_A(A_0) = " + std::to_string(z_a0.dim()));
  } else {
    r.skip("L-graded-equals-centralizer", "L_gr(A) = Z_A(A_0)", "trace is not homogeneous");
  }

  bool agree = v.semisimple == v.all_k_nonzero && v.semisimple == v.cd_basis &&
               (!homogeneous || v.semisimple == v.l_graded_is_centralizer);
  std::size_t criteria = homogeneous ? 4 : 3;
  r.add("criteria-agree", "all semisimplicity criteria agree", agree,
        std::to_string(agree ? criteria : 0) + "/" + std::to_string(criteria) + " criteria agree");
  if (!agree) throw Error(ErrorCode::inconsistent_verdicts, r.to_text());
  return v;
}

}  // namespace gcell
