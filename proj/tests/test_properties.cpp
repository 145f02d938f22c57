#include <gtest/gtest.h>

#include <random>

#include "gcell/builders.hpp"
#include "gcell/ideals.hpp"
#include "gcell/verifier.hpp"
#include "oracle.hpp"
#include "sweep.hpp"

using namespace gcell;

namespace {

const Field Q = Field::rational();

}  // namespace

TEST(Property, MatrixCellularCriterion) {
  std::mt19937 rng(20240501);
  int valid = 0, invalid = 0;
  for (int iter = 0; iter < 200; ++iter) {
    MatrixCellSpec spec = sweep::random_spec(rng, 2 + iter % 3);
    bool expected = sweep::criterion(spec);
    EXPECT_EQ(spec.satisfies_criterion(), expected);
    Instance inst = build_matrix_algebra(Q, spec);
    bool validated = validate_cell_datum(*inst.cells).all_passed();
    EXPECT_EQ(validated, expected) << "n=" << spec.n;
    (validated ? valid : invalid)++;
    if (validated) {
      auto chk = check_dual_cellular(DualBasis(*inst.trace, *inst.cells));
      EXPECT_EQ(chk.criterion, chk.direct);
    }
  }
  EXPECT_GE(valid, 20);
  EXPECT_GE(invalid, 20);
}

TEST(Property, FixedPointsHaveDegreeZero) {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 100; ++iter) {
    MatrixCellSpec spec = sweep::random_spec(rng, 2 + iter % 4);
    if (!spec.satisfies_criterion()) continue;
    auto sigma = spec.sigma();
    for (std::size_t i = 0; i < spec.n; ++i) {
      if (sigma[i] == i) EXPECT_EQ(spec.deg[i], 0);
    }
  }
}

TEST(Property, HigmanInvariantUnderRandomCentralTwists) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> coeff(-3, 3);
  for (std::size_t n = 2; n <= 4; ++n) {
    Instance z = build_zigzag(Q, n);
    const Algebra& alg = *z.algebra;
    Subspace reference = higman(DualBasis(*z.trace));
    oracle::Model<mpq_class> model(alg);
    for (int iter = 0; iter < 5; ++iter) {
      // c * 1 + random combination of the degree-2 loops (all central).
      long c = coeff(rng);
      if (c == 0) c = 1;
      Vector zc = Scalar::from_int(Q, c) * alg.identity();
      for (std::size_t i = 0; i < alg.dim(); ++i) {
        if (alg.degree(i) == 2) zc[i] = Scalar::from_int(Q, coeff(rng));
      }
      ASSERT_TRUE(is_central(alg, zc));
      TraceForm twisted = twist_trace(*z.trace, AlgElement(z.algebra, zc));
      Subspace h = higman(DualBasis(twisted));
      EXPECT_EQ(h, reference);
      EXPECT_EQ(h.dim(), model.higman_dim(model.from(twisted.values())));
    }
  }
}

TEST(Property, RandomMatrixSumsAreSemisimple) {
  std::mt19937 rng(5);
  for (int iter = 0; iter < 6; ++iter) {
    std::vector<Instance> parts;
    std::size_t blocks = 1 + rng() % 3;
    for (std::size_t b = 0; b < blocks; ++b) {
      parts.push_back(build_matrix_algebra(Q, MatrixCellSpec::canonical(1 + rng() % 3)));
    }
    Instance sum = build_direct_sum(parts);
    Report r = verify_all(sum);
    EXPECT_EQ(r.count(Verdict::fail), 0u) << r.to_text();
    EXPECT_TRUE(semisimple_verdict(DualBasis(*sum.trace, *sum.cells)).semisimple);
    EXPECT_EQ(center(*sum.algebra).dim(), blocks);
  }
}

TEST(Property, ZigzagOverPrimeFieldsMatchesRationals) {
  for (std::uint64_t p : {3u, 7u, 11u}) {
    for (std::size_t n = 2; n <= 4; ++n) {
      if ((n + 1) % p == 0) continue;
      Instance zp = build_zigzag(Field::prime(p), n);
      Instance zq = build_zigzag(Q, n);
      EXPECT_EQ(zp.algebra->labels(), zq.algebra->labels());
      EXPECT_EQ(higman(DualBasis(*zp.trace)).dim(), higman(DualBasis(*zq.trace)).dim());
      EXPECT_EQ(verify_all(zp).count(Verdict::fail), 0u);
    }
  }
}
