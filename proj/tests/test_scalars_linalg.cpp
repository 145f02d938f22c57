#include <gtest/gtest.h>

#include <algorithm>
#include <iterator>
#include <random>
#include <set>

#include "gcell/error.hpp"
#include "gcell/matrix.hpp"
#include "gcell/subspace.hpp"
#include "oracle.hpp"

using namespace gcell;

namespace {

Scalar q(long n, long d = 1) { return Scalar::from_rational(Field::rational(), mpq_class(n, d)); }

Matrix rational_matrix(const std::vector<std::vector<long>>& rows) {
  Matrix m(Field::rational(), rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = q(rows[r][c]);
  }
  return m;
}

Matrix random_matrix(std::mt19937& rng, const Field& f, std::size_t rows, std::size_t cols, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Scalar::from_int(f, dist(rng));
  }
  return m;
}

oracle::Dense<mpq_class> to_dense(const Matrix& m) {
  oracle::Dense<mpq_class> out(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c).rational();
  }
  return out;
}

}  // namespace

TEST(Scalar, RationalArithmeticIsExact) {
  EXPECT_EQ(q(1, 3) + q(1, 6), q(1, 2));
  EXPECT_EQ(q(2, 3) * q(3, 4), q(1, 2));
  EXPECT_EQ(q(1, 2) / q(1, 4), q(2));
  EXPECT_EQ(q(3, 7).inverse(), q(7, 3));
  EXPECT_EQ(Scalar::parse(Field::rational(), "-6/4").to_string(), "-3/2");
}

TEST(Scalar, PrimeFieldMatchesModularOracle) {
  Field f = Field::prime(7);
  for (long a = -10; a <= 10; ++a) {
    for (long b = -10; b <= 10; ++b) {
      oracle::ModP x(a, 7), y(b, 7);
      EXPECT_EQ((Scalar::from_int(f, a) + Scalar::from_int(f, b)).residue(), static_cast<std::uint64_t>((x + y).v));
      EXPECT_EQ((Scalar::from_int(f, a) * Scalar::from_int(f, b)).residue(), static_cast<std::uint64_t>((x * y).v));
      if (!y.zero()) {
        EXPECT_EQ((Scalar::from_int(f, a) / Scalar::from_int(f, b)).residue(), static_cast<std::uint64_t>((x / y).v));
      }
    }
  }
  EXPECT_EQ(Scalar::parse(f, "1/2").residue(), 4u);
}

TEST(Scalar, Errors) {
  Field f7 = Field::prime(7);
  auto code = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::missing_data;
  };
  EXPECT_EQ(code([&] { Scalar::zero(f7).inverse(); }), ErrorCode::division_by_zero);
  EXPECT_EQ(code([&] { q(0).inverse(); }), ErrorCode::division_by_zero);
  EXPECT_EQ(code([&] { (void)(q(1) + Scalar::one(f7)); }), ErrorCode::field_mismatch);
  EXPECT_EQ(code([&] { Field::prime(8); }), ErrorCode::validation_error);
  EXPECT_EQ(code([&] { Scalar::parse(f7, "1/7"); }), ErrorCode::division_by_zero);
  EXPECT_EQ(code([&] { Scalar::parse(f7, "x"); }), ErrorCode::syntax_error);
  EXPECT_EQ(code([&] { Field::parse("r"); }), ErrorCode::syntax_error);
}

TEST(Scalar, FieldAxiomsOnRandomSamples) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> dist(-50, 50);
  for (const Field& f : {Field::rational(), Field::prime(101)}) {
    for (int iter = 0; iter < 300; ++iter) {
      auto pick = [&] {
        long d = dist(rng);
        if (d == 0) d = 1;
        return f.is_rational() ? Scalar::from_rational(f, mpq_class(dist(rng), d > 0 ? d : -d))
                               : Scalar::from_int(f, dist(rng));
      };
      Scalar a = pick(), b = pick(), c = pick();
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a + (-a), Scalar::zero(f));
      if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
    }
  }
}

TEST(Matrix, DeterminantMatchesLeibniz) {
  std::mt19937 rng(3);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int iter = 0; iter < 10; ++iter) {
      Matrix m = random_matrix(rng, Field::rational(), n, n, -3, 3);
      EXPECT_EQ(determinant(m).rational(), oracle::leibniz_det(to_dense(m))) << m.to_string();
    }
  }
}

TEST(Matrix, RankMatchesOracleAndTranspose) {
  std::mt19937 rng(5);
  for (int iter = 0; iter < 40; ++iter) {
    std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
    Matrix m = random_matrix(rng, Field::rational(), rows, cols, -1, 1);
    EXPECT_EQ(rank(m), oracle::rank(to_dense(m)));
    EXPECT_EQ(rank(m), rank(m.transpose()));
    RrefResult once = rref(m);
    EXPECT_EQ(rref(once.reduced).reduced, once.reduced);
  }
}

TEST(Matrix, InverseSolveNullspace) {
  Matrix a = rational_matrix({{2, 1}, {1, 1}});
  auto inv = invert(a);
  ASSERT_TRUE(inv);
  EXPECT_TRUE((a * *inv).is_identity());
  EXPECT_EQ(*inv, rational_matrix({{1, -1}, {-1, 2}}));
  EXPECT_FALSE(invert(rational_matrix({{1, 2}, {2, 4}})));

  std::mt19937 rng(9);
  for (int iter = 0; iter < 30; ++iter) {
    Matrix m = random_matrix(rng, Field::prime(5), 3, 4, 0, 4);
    auto kernel = nullspace(m);
    EXPECT_EQ(kernel.size(), 4 - rank(m));
    for (const auto& v : kernel) EXPECT_TRUE(is_zero(m * v));
    Matrix x = random_matrix(rng, Field::prime(5), 4, 1, 0, 4);
    auto sol = solve(m, m * x);
    ASSERT_TRUE(sol);
    EXPECT_EQ(m * *sol, m * x);
  }
  EXPECT_FALSE(solve(rational_matrix({{1, 1}, {1, 1}}), rational_matrix({{0}, {1}})));
}

TEST(Matrix, DimensionMismatch) {
  try {
    (void)(rational_matrix({{1, 2}}) * rational_matrix({{1, 2}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::dimension_mismatch);
  }
}

namespace {

// All vectors in the span over F_p, encoded as base-p integers.
std::set<std::uint64_t> enumerate(const Subspace& s, std::uint64_t p) {
  std::set<std::uint64_t> out;
  auto basis = s.basis_vectors();
  std::uint64_t combos = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) combos *= p;
  for (std::uint64_t c = 0; c < combos; ++c) {
    std::vector<std::uint64_t> v(s.ambient_dim(), 0);
    std::uint64_t rest = c;
    for (const auto& b : basis) {
      std::uint64_t coef = rest % p;
      rest /= p;
      for (std::size_t k = 0; k < v.size(); ++k) v[k] = (v[k] + coef * b[k].residue()) % p;
    }
    std::uint64_t code = 0;
    for (auto x : v) code = code * p + x;
    out.insert(code);
  }
  return out;
}

}  // namespace

TEST(Subspace, IntersectionAndSumMatchEnumeration) {
  Field f = Field::prime(3);
  std::mt19937 rng(17);
  for (int iter = 0; iter < 60; ++iter) {
    auto gens = [&](std::size_t k) {
      std::vector<Vector> out;
      for (std::size_t i = 0; i < k; ++i) {
        Vector v;
        for (std::size_t j = 0; j < 4; ++j) v.push_back(Scalar::from_int(f, static_cast<long>(rng() % 3)));
        out.push_back(v);
      }
      return out;
    };
    Subspace u = Subspace::span(f, 4, gens(1 + rng() % 3));
    Subspace w = Subspace::span(f, 4, gens(1 + rng() % 3));
    auto eu = enumerate(u, 3), ew = enumerate(w, 3);
    std::set<std::uint64_t> both;
    std::set_intersection(eu.begin(), eu.end(), ew.begin(), ew.end(), std::inserter(both, both.begin()));
    EXPECT_EQ(enumerate(intersect(u, w), 3), both);
    EXPECT_EQ(sum(u, w).dim() + intersect(u, w).dim(), u.dim() + w.dim());
    EXPECT_EQ(contains(u, w), std::includes(eu.begin(), eu.end(), ew.begin(), ew.end()));
    EXPECT_EQ(contains(u, w), !containment_witness(u, w).has_value());
  }
}

TEST(Subspace, CanonicalFormIsGeneratorIndependent) {
  Field f = Field::rational();
  Vector a = {q(1), q(2), q(0)}, b = {q(0), q(1), q(1)};
  Subspace s1 = Subspace::span(f, 3, {a, b});
  Subspace s2 = Subspace::span(f, 3, {a + b, q(3) * a - b, a});
  EXPECT_EQ(s1, s2);
  EXPECT_EQ(s1.dim(), 2u);
  EXPECT_TRUE(s1.contains(q(1, 2) * a + b));
  EXPECT_FALSE(s1.contains({q(0), q(0), q(1)}));
  auto coords = s1.coordinates(a);
  ASSERT_TRUE(coords);
  EXPECT_EQ(s1.basis().transpose() * *coords, a);
}
