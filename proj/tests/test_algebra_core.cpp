#include <gtest/gtest.h>

#include "gcell/builders.hpp"
#include "gcell/error.hpp"
#include "oracle.hpp"

using namespace gcell;

namespace {

const Field Q = Field::rational();

Scalar q(long n) { return Scalar::from_int(Q, n); }

template <class Fn>
ErrorCode code_of(Fn fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::missing_data;
}

// K[x]/(x^2) with the given degree of x and involution.
AlgebraPtr dual_numbers(int deg_x, Matrix star = Matrix::identity(Q, 2)) {
  return Algebra::make(Q, {"1", "x"}, {{0, 0, 0, q(1)}, {0, 1, 1, q(1)}, {1, 0, 1, q(1)}}, {0, deg_x}, std::move(star));
}

}  // namespace

TEST(Algebra, IdentityIsSolvedFor) {
  auto alg = dual_numbers(2);
  EXPECT_EQ(alg->identity(), (Vector{q(1), q(0)}));
  EXPECT_EQ(alg->multiply({q(2), q(3)}, {q(1), q(-1)}), (Vector{q(2), q(1)}));
  EXPECT_EQ(AlgElement::basis(alg, 1).to_string(), "x");
}

TEST(Algebra, ConstructionErrors) {
  // x * x = 1 with deg x = 2 breaks the grading.
  EXPECT_EQ(code_of([] {
              Algebra::make(Q, {"1", "x"}, {{0, 0, 0, q(1)}, {0, 1, 1, q(1)}, {1, 0, 1, q(1)}, {1, 1, 0, q(1)}}, {0, 2},
                            Matrix::identity(Q, 2));
            }),
            ErrorCode::not_graded);
  // a a = a and nothing else: x_b is annihilated from both sides.
  EXPECT_EQ(code_of([] { Algebra::make(Q, {"a", "b"}, {{0, 0, 0, q(1)}}, {0, 0}, Matrix::identity(Q, 2)); }),
            ErrorCode::no_identity);
  // u u = v, u v = u: (u u) u = 0 but u (u u) = u.
  EXPECT_EQ(code_of([] {
              Algebra::make(Q, {"1", "u", "v"},
                            {{0, 0, 0, q(1)}, {0, 1, 1, q(1)}, {1, 0, 1, q(1)}, {0, 2, 2, q(1)}, {2, 0, 2, q(1)},
                             {1, 1, 2, q(1)}, {1, 2, 1, q(1)}},
                            {0, 0, 0}, Matrix::identity(Q, 3));
            }),
            ErrorCode::non_associative);
  Matrix bad(Q, 2, 2);
  bad(0, 0) = q(1);
  bad(1, 1) = q(2);
  EXPECT_EQ(code_of([&] { dual_numbers(2, bad); }), ErrorCode::bad_involution);
}

TEST(Algebra, ChecksCanBeDeferred) {
  auto alg = Algebra::make(Q, {"1", "x"}, {{0, 0, 0, q(1)}, {0, 1, 1, q(1)}, {1, 0, 1, q(1)}, {1, 1, 0, q(1)}}, {0, 2},
                           Matrix::identity(Q, 2), {.grading = false, .involution = false});
  EXPECT_TRUE(alg->grading_violation().has_value());
  EXPECT_FALSE(alg->involution_violation().has_value());
}

TEST(Algebra, CenterAndCentralizerMatchOracle) {
  for (std::size_t n : {2u, 3u}) {
    Instance inst = build_zigzag(Q, n);
    oracle::Model<mpq_class> model(*inst.algebra);
    EXPECT_EQ(center(*inst.algebra).dim(), model.center_dim());
    std::vector<std::size_t> deg0;
    for (std::size_t i = 0; i < inst.algebra->dim(); ++i) {
      if (inst.algebra->degree(i) == 0) deg0.push_back(i);
    }
    EXPECT_EQ(centralizer(*inst.algebra, degree_component(*inst.algebra, 0)).dim(), model.centralizer_dim(deg0));
  }
  Instance m3 = build_matrix_algebra(Q, MatrixCellSpec::canonical(3));
  EXPECT_EQ(center(*m3.algebra).dim(), 1u);
  EXPECT_TRUE(is_central(*m3.algebra, m3.algebra->identity()));
}

TEST(AlgElement, MismatchedAlgebras) {
  auto a = dual_numbers(2), b = dual_numbers(2);
  EXPECT_EQ(code_of([&] { multiply(AlgElement::one(a), AlgElement::one(b)); }), ErrorCode::algebra_mismatch);
}

TEST(Trace, DegreeAndSymmetrizing) {
  auto alg = dual_numbers(2);
  TraceForm tau(alg, {q(0), q(1)});
  EXPECT_EQ(tau.degree(), -2);
  EXPECT_EQ(trace_degree(tau), -2);
  EXPECT_TRUE(is_symmetrizing(tau));

  TraceForm mixed(alg, {q(1), q(1)});
  EXPECT_FALSE(mixed.degree().has_value());
  EXPECT_EQ(code_of([&] { trace_degree(mixed); }), ErrorCode::not_homogeneous);
  EXPECT_EQ(code_of([&] { trace_degree(TraceForm(alg, {q(0), q(0)})); }), ErrorCode::zero_trace);

  TraceForm degenerate(alg, {q(1), q(0)});
  EXPECT_TRUE(degenerate.degree().has_value());
  EXPECT_FALSE(is_symmetrizing(degenerate).nondegenerate);
}

TEST(Trace, NonSymmetricFormIsReported) {
  Instance m2 = build_matrix_algebra(Q, MatrixCellSpec::canonical(2));
  // tau(e_12) = 1 gives tau(e_11 e_12) = 1 but tau(e_12 e_11) = 0.
  Vector values(4, q(0));
  values[0 * 2 + 1] = q(1);
  values[0] = q(1);
  values[3] = q(1);
  auto chk = is_symmetrizing(TraceForm(m2.algebra, values));
  EXPECT_FALSE(chk.symmetric);
  EXPECT_TRUE(chk.asymmetric_pair.has_value());
}

TEST(Trace, TwistErrors) {
  Instance m2 = build_matrix_algebra(Q, MatrixCellSpec::canonical(2));
  AlgElement e11 = AlgElement::basis(m2.algebra, 0);
  EXPECT_EQ(code_of([&] { twist_trace(*m2.trace, e11); }), ErrorCode::not_central);
  AlgElement zero(m2.algebra, m2.algebra->zero());
  EXPECT_EQ(code_of([&] { twist_trace(*m2.trace, zero); }), ErrorCode::degenerate);
  TraceForm twice = twist_trace(*m2.trace, q(2) * AlgElement::one(m2.algebra));
  EXPECT_EQ(twice.values()[0], q(2));
}

TEST(Trace, ZigzagGramMatchesOracle) {
  Instance inst = build_zigzag(Q, 3);
  oracle::Model<mpq_class> model(*inst.algebra);
  Matrix g = inst.trace->gram();
  auto tau = model.from(inst.trace->values());
  for (std::size_t i = 0; i < model.n; ++i) {
    for (std::size_t j = 0; j < model.n; ++j) {
      auto p = model.mul(model.basis(i), model.basis(j));
      mpq_class t = 0;
      for (std::size_t k = 0; k < model.n; ++k) t += p[k] * tau[k];
      EXPECT_EQ(g(i, j).rational(), t);
    }
  }
}
