#include <gtest/gtest.h>

#include <algorithm>

#include "gcell/builders.hpp"
#include "gcell/error.hpp"
#include "gcell/ideals.hpp"
#include "oracle.hpp"

using namespace gcell;

namespace {

const Field Q = Field::rational();

Scalar q(long n) { return Scalar::from_int(Q, n); }

std::size_t index_of(const Algebra& alg, const std::string& label) {
  auto it = std::find(alg.labels().begin(), alg.labels().end(), label);
  EXPECT_NE(it, alg.labels().end()) << label;
  return static_cast<std::size_t>(it - alg.labels().begin());
}

// The loop at the last vertex: central, nilpotent, degree 2.
Vector last_loop(const Instance& z, std::size_t n) {
  Vector v = z.algebra->zero();
  v[index_of(*z.algebra, "a" + std::to_string(n - 1) + "'a" + std::to_string(n - 1))] = Scalar::one(z.algebra->field());
  return v;
}

}  // namespace

TEST(Higman, DualNumbers) {
  Instance e = build_dual_numbers(Q);
  DualBasis db(*e.trace, *e.cells);
  Subspace x = Subspace::span(Q, 2, {{q(0), q(1)}});
  EXPECT_EQ(higman(db), x);
  LIdeals li = l_ideals(db);
  EXPECT_EQ(li.l, x);
  EXPECT_EQ(li.l_graded, x);
  GradedHigman hg = higman_graded(db);
  EXPECT_EQ(hg.span, x);
}

TEST(Higman, ZigzagDimensionMatchesOracle) {
  for (const Field& f : {Q, Field::prime(101)}) {
    for (std::size_t n = 2; n <= 5; ++n) {
      Instance z = build_zigzag(f, n);
      DualBasis db(*z.trace, *z.cells);
      Subspace h = higman(db);
      std::size_t expected = 0;
      if (f.is_rational()) {
        oracle::Model<mpq_class> model(*z.algebra);
        expected = model.higman_dim(model.from(z.trace->values()));
      } else {
        oracle::Model<oracle::ModP> model(*z.algebra);
        expected = model.higman_dim(model.from(z.trace->values()));
      }
      EXPECT_EQ(h.dim(), expected) << f.name() << " n=" << n;
      EXPECT_EQ(h.dim(), n) << f.name() << " n=" << n;
      EXPECT_TRUE(contains(degree_component(*z.algebra, 2), h));
    }
  }
}

TEST(Higman, IndependentOfTrace) {
  for (std::size_t n = 2; n <= 4; ++n) {
    Instance z = build_zigzag(Q, n);
    Vector zc = z.algebra->identity() + last_loop(z, n);
    TraceForm twisted = twist_trace(*z.trace, AlgElement(z.algebra, zc));
    ASSERT_TRUE(is_symmetrizing(twisted));
    EXPECT_EQ(higman(DualBasis(*z.trace)), higman(DualBasis(twisted)));
    TraceForm scaled = twist_trace(*z.trace, q(3) * AlgElement::one(z.algebra));
    EXPECT_EQ(higman(DualBasis(*z.trace)), higman(DualBasis(scaled)));
  }
}

TEST(Higman, GradedRequiresHomogeneousTrace) {
  Instance z = build_zigzag(Q, 3);
  TraceForm mixed = twist_trace(*z.trace, AlgElement(z.algebra, z.algebra->identity() + last_loop(z, 3)));
  try {
    higman_graded(DualBasis(mixed, *z.cells));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::non_homogeneous_trace);
  }
}

TEST(Ideals, ZigzagChain) {
  for (std::size_t n = 2; n <= 4; ++n) {
    Instance z = build_zigzag(Q, n);
    DualBasis db(*z.trace, *z.cells);
    IdealFamily fam = ideal_family(db);
    EXPECT_TRUE(contains(fam.l, fam.higman));
    EXPECT_TRUE(contains(fam.l_graded, fam.higman_graded));
    EXPECT_TRUE(contains(fam.centralizer_a0, fam.l_graded));
    EXPECT_LT(fam.l_graded.dim(), fam.centralizer_a0.dim());
    Report r = ideal_report(*z.algebra, fam, -2);
    EXPECT_EQ(r.count(Verdict::fail), 0u) << r.to_text();
    EXPECT_EQ(r.count(Verdict::skipped), 0u) << r.to_text();
    oracle::Model<mpq_class> model(*z.algebra);
    std::vector<std::size_t> deg0;
    for (std::size_t i = 0; i < model.n; ++i) {
      if (model.deg[i] == 0) deg0.push_back(i);
    }
    EXPECT_EQ(fam.centralizer_a0.dim(), model.centralizer_dim(deg0));
  }
}

TEST(Ideals, MatrixEqualityBranch) {
  for (const Field& f : {Q, Field::prime(7)}) {
    for (std::size_t n = 2; n <= 4; ++n) {
      Instance m = build_matrix_algebra(f, MatrixCellSpec::canonical(n));
      DualBasis db(*m.trace, *m.cells);
      IdealFamily fam = ideal_family(db);
      EXPECT_EQ(fam.l, Subspace::span(f, n * n, {m.algebra->identity()}));
      std::vector<Vector> diag;
      for (std::size_t i = 0; i < n; ++i) diag.push_back(m.algebra->basis_vector(i * n + i));
      Subspace diagonal = Subspace::span(f, n * n, diag);
      EXPECT_EQ(fam.l_graded, diagonal);
      EXPECT_EQ(fam.centralizer_a0, diagonal);
      Report r = ideal_report(*m.algebra, fam, 0);
      EXPECT_EQ(r.count(Verdict::fail), 0u);
      const ReportEntry* strict = r.find("L-graded-strict");
      ASSERT_NE(strict, nullptr);
      EXPECT_EQ(strict->verdict, Verdict::skipped);
      EXPECT_NE(strict->witness.find("d != 0"), std::string::npos);
    }
  }
}

TEST(Semisimple, Verdicts) {
  Instance e = build_dual_numbers(Q);
  auto ve = semisimple_verdict(DualBasis(*e.trace, *e.cells));
  EXPECT_FALSE(ve.semisimple);
  EXPECT_FALSE(ve.all_k_nonzero);
  EXPECT_FALSE(ve.cd_basis);
  EXPECT_FALSE(ve.l_graded_is_centralizer);
  EXPECT_EQ(ve.regular_trace_oracle, false);

  Instance z = build_zigzag(Q, 3);
  EXPECT_FALSE(semisimple_verdict(DualBasis(*z.trace, *z.cells)).semisimple);

  for (const Field& f : {Q, Field::prime(7)}) {
    Instance m = build_matrix_algebra(f, MatrixCellSpec::canonical(3));
    auto vm = semisimple_verdict(DualBasis(*m.trace, *m.cells));
    EXPECT_TRUE(vm.semisimple);
    EXPECT_TRUE(vm.all_k_nonzero);
    EXPECT_TRUE(vm.cd_basis);
    EXPECT_TRUE(vm.l_graded_is_centralizer);
    EXPECT_EQ(vm.regular_trace_oracle.has_value(), f.is_rational());
  }
}

TEST(Semisimple, RegularTraceOracleOnSums) {
  std::vector<Instance> parts = {build_matrix_algebra(Q, MatrixCellSpec::canonical(2)),
                                 build_matrix_algebra(Q, MatrixCellSpec::canonical(1))};
  Instance sum = build_direct_sum(parts);
  EXPECT_TRUE(regular_trace_nondegenerate(*sum.algebra));
  EXPECT_FALSE(regular_trace_nondegenerate(*build_zigzag(Q, 2).algebra));
}
