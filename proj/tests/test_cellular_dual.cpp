#include <gtest/gtest.h>

#include <algorithm>

#include "gcell/builders.hpp"
#include "gcell/dual.hpp"
#include "gcell/error.hpp"
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

std::vector<Instance> sample_instances() {
  std::vector<Instance> out;
  out.push_back(build_dual_numbers(Q));
  out.push_back(build_zigzag(Q, 2));
  out.push_back(build_zigzag(Q, 3));
  out.push_back(build_matrix_algebra(Q, MatrixCellSpec::canonical(3)));
  out.push_back(build_matrix_algebra(Field::prime(7), MatrixCellSpec::canonical(2)));
  return out;
}

}  // namespace

TEST(CellDatum, BuiltInstancesValidate) {
  for (const auto& inst : sample_instances()) {
    Report r = validate_cell_datum(*inst.cells);
    EXPECT_TRUE(r.all_passed()) << inst.name << "\n" << r.to_text();
  }
}

TEST(CellDatum, ConstructionErrors) {
  Instance e = build_dual_numbers(Q);
  auto make = [&](std::vector<std::pair<std::size_t, std::size_t>> less, std::vector<CellDatum::MapEntry> map) {
    try {
      CellDatum::make(e.algebra, {"l1", "l2"}, less, {{{"1", 1}}, {{"1", 0}}}, map);
    } catch (const Error& err) {
      return err.code();
    }
    return ErrorCode::missing_data;
  };
  EXPECT_EQ(make({{0, 1}, {1, 0}}, {{0, 0, 0, 1}, {1, 0, 0, 0}}), ErrorCode::validation_error);
  EXPECT_EQ(make({{0, 1}}, {{0, 0, 0, 1}, {1, 0, 0, 1}}), ErrorCode::validation_error);
  EXPECT_EQ(make({{0, 1}}, {{0, 0, 0, 1}}), ErrorCode::validation_error);
}

TEST(CellDatum, InvalidMatrixSpecFailsValidation) {
  MatrixCellSpec spec{2, {0, 1}, {0, 1}, {1, -1}};
  EXPECT_FALSE(spec.satisfies_criterion());
  Instance inst = build_matrix_algebra(Q, spec);
  EXPECT_FALSE(validate_cell_datum(*inst.cells).all_passed());
}

TEST(Gram, DualNumbers) {
  Instance e = build_dual_numbers(Q);
  EXPECT_EQ(gram(*e.cells, 0), Matrix(Q, 1, 1));
  EXPECT_TRUE(gram(*e.cells, 1).is_identity());
}

TEST(Gram, MatrixCanonicalIsAntidiagonal) {
  for (std::size_t n = 2; n <= 4; ++n) {
    Instance inst = build_matrix_algebra(Q, MatrixCellSpec::canonical(n));
    Matrix g = gram(*inst.cells, 0);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) EXPECT_EQ(g(r, c), r + c + 1 == n ? q(1) : q(0));
    }
  }
}

TEST(Gram, DeterminantIndependentOfMemberOrder) {
  // Reverse M(lambda) for the zigzag middle cells and compare det G.
  Instance inst = build_zigzag(Q, 3);
  const CellDatum& cd = *inst.cells;
  std::vector<std::vector<Tableau>> tableaux;
  std::vector<CellDatum::MapEntry> map;
  for (std::size_t l = 0; l < cd.cell_count(); ++l) {
    auto members = cd.members(l);
    std::reverse(members.begin(), members.end());
    tableaux.push_back(members);
  }
  for (const auto& e : cd.map_entries()) {
    const std::size_t m = cd.size(e.lambda);
    map.push_back({e.lambda, m - 1 - e.s, m - 1 - e.t, e.basis});
  }
  CellDatum shuffled = CellDatum::make(inst.algebra, cd.names(), cd.less_pairs(), tableaux, map);
  for (std::size_t l = 0; l < cd.cell_count(); ++l) {
    EXPECT_EQ(determinant(gram(cd, l)), determinant(gram(shuffled, l))) << cd.name(l);
  }
}

TEST(CellModule, ActionIsMultiplicative) {
  for (const auto& inst : sample_instances()) {
    const Algebra& alg = *inst.algebra;
    for (std::size_t l = 0; l < inst.cells->cell_count(); ++l) {
      CellModule w = cell_module(*inst.cells, l);
      for (std::size_t a = 0; a < alg.dim(); ++a) {
        for (std::size_t b = 0; b < alg.dim(); ++b) {
          Vector ab = alg.multiply(alg.basis_vector(a), alg.basis_vector(b));
          EXPECT_EQ(w.act(ab), w.action[a] * w.action[b]) << inst.name << " " << l << " " << a << " " << b;
        }
      }
      EXPECT_TRUE(w.act(alg.identity()).is_identity());
    }
  }
}

TEST(DualBasis, DualNumbersIsXAndOne) {
  Instance e = build_dual_numbers(Q);
  DualBasis db(*e.trace);
  EXPECT_EQ(db.dual(0), (Vector{q(0), q(1)}));
  EXPECT_EQ(db.dual(1), (Vector{q(1), q(0)}));
}

TEST(DualBasis, PairingAndOracle) {
  for (const auto& inst : sample_instances()) {
    DualBasis db(*inst.trace, *inst.cells);
    const Algebra& alg = *inst.algebra;
    for (std::size_t i = 0; i < alg.dim(); ++i) {
      for (std::size_t j = 0; j < alg.dim(); ++j) {
        Scalar t = (*inst.trace)(alg.multiply(alg.basis_vector(i), db.dual(j)));
        EXPECT_EQ(t, i == j ? Scalar::one(alg.field()) : Scalar::zero(alg.field()));
      }
    }
    // tau(C_{S,T} D_{U,V}) = delta_{SV} delta_{TU} within a cell.
    const CellDatum& cd = *inst.cells;
    for (std::size_t l = 0; l < cd.cell_count(); ++l) {
      for (std::size_t s = 0; s < cd.size(l); ++s) {
        for (std::size_t t = 0; t < cd.size(l); ++t) {
          for (std::size_t u = 0; u < cd.size(l); ++u) {
            for (std::size_t v = 0; v < cd.size(l); ++v) {
              Scalar x = (*inst.trace)(alg.multiply(alg.basis_vector(cd.index(l, s, t)), db.cell_dual(l, u, v)));
              EXPECT_EQ(x.is_one(), s == v && t == u);
              EXPECT_EQ(x.is_zero(), !(s == v && t == u));
            }
          }
        }
      }
    }
  }
  Instance z = build_zigzag(Q, 3);
  oracle::Model<mpq_class> model(*z.algebra);
  auto y = model.duals(model.from(z.trace->values()));
  DualBasis db(*z.trace);
  for (std::size_t j = 0; j < model.n; ++j) EXPECT_EQ(model.from(db.dual(j)), y[j]);
}

TEST(DualBasis, DegenerateTraceIsRejected) {
  Instance e = build_dual_numbers(Q);
  try {
    DualBasis db(TraceForm(e.algebra, {q(1), q(0)}));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::degenerate);
  }
}

TEST(KLambda, KnownValues) {
  Instance e = build_dual_numbers(Q);
  auto ke = k_lambda(DualBasis(*e.trace, *e.cells));
  EXPECT_TRUE(ke.k[0].is_zero());
  EXPECT_TRUE(ke.k[1].is_zero());
  for (std::size_t n = 2; n <= 4; ++n) {
    Instance z = build_zigzag(Q, n);
    auto kz = k_lambda(DualBasis(*z.trace, *z.cells));
    ASSERT_EQ(kz.k.size(), n + 1);
    for (std::size_t l = 0; l <= n; ++l) EXPECT_FALSE(kz.projective(l));
    Instance m = build_matrix_algebra(Field::prime(7), MatrixCellSpec::canonical(n));
    auto km = k_lambda(DualBasis(*m.trace, *m.cells));
    EXPECT_TRUE(km.k[0].is_one());
  }
}

TEST(ELambda, MatrixAndDualNumbers) {
  Instance e = build_dual_numbers(Q);
  auto ee = e_lambda(DualBasis(*e.trace, *e.cells));
  EXPECT_EQ(ee[1], (Vector{q(0), q(1)}));
  for (std::size_t n = 2; n <= 4; ++n) {
    Instance m = build_matrix_algebra(Q, MatrixCellSpec::canonical(n));
    DualBasis db(*m.trace, *m.cells);
    EXPECT_EQ(e_lambda(db)[0], m.algebra->identity());
    auto graded = e_lambda_graded(db);
    EXPECT_EQ(graded.size(), n);
    for (const auto& [key, v] : graded) {
      // A single diagonal matrix unit.
      std::size_t nonzero = 0;
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
          const Scalar& s = v[r * n + c];
          if (!s.is_zero()) {
            ++nonzero;
            EXPECT_EQ(r, c);
            EXPECT_TRUE(s.is_one());
          }
        }
      }
      EXPECT_EQ(nonzero, 1u);
    }
  }
}

TEST(DualCellular, CriterionAndDirectTestAgree) {
  for (const auto& inst : sample_instances()) {
    DualBasis db(*inst.trace, *inst.cells);
    auto chk = check_dual_cellular(db);
    EXPECT_EQ(chk.criterion, chk.direct) << inst.name;
    EXPECT_TRUE(chk.criterion) << inst.name;
  }
}

TEST(DualCellular, InhomogeneousTraceIsRejected) {
  Instance z = build_zigzag(Q, 2);
  const Algebra& alg = *z.algebra;
  Vector zc = alg.identity();
  zc[index_of(alg, "a1a1'")] = q(1);
  TraceForm mixed = twist_trace(*z.trace, AlgElement(z.algebra, zc));
  // The loop is central; tau_z is 1 on e_1 and on the loops.
  EXPECT_FALSE(mixed.degree().has_value());
  try {
    check_dual_cellular(DualBasis(mixed, *z.cells));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::non_homogeneous_trace);
  }
}
