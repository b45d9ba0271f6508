#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <random>

#include "braidslice/errors.hpp"
#include "braidslice/linalg.hpp"
#include "oracles.hpp"

namespace braidslice {
namespace {

Inertia float_inertia(const RatMat& s) {
  Eigen::MatrixXd d(s.rows(), s.cols());
  for (std::size_t r = 0; r < s.rows(); ++r) {
    for (std::size_t c = 0; c < s.cols(); ++c) d(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = s(r, c).to_double();
  }
  const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(d).eigenvalues();
  const double tol = 1e-9 * std::max(1.0, ev.cwiseAbs().maxCoeff());
  Inertia out;
  for (double x : ev) {
    if (x > tol) {
      ++out.positive;
    } else if (x < -tol) {
      ++out.negative;
    } else {
      ++out.zero;
    }
  }
  return out;
}

TEST(Rank, SmallCases) {
  EXPECT_EQ(rank(RatMat::identity(3)), 3U);
  EXPECT_EQ(rank(RatMat(2, 4)), 0U);
  EXPECT_EQ(rank(RatMat{{1, 0}, {2, 0}, {0, 1}}), 2U);
  EXPECT_EQ(rank(RatMat{{Rat(1, 2), Rat(1, 3)}, {Rat(3, 2), Rat(1)}}), 1U);
}

TEST(Rank, EqualsRankOfTranspose) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int trial = 0; trial < 300; ++trial) {
    RatMat a = oracle::random_matrix(dim(rng), dim(rng), rng, 3);
    // Force dependencies now and then.
    if (trial % 3 == 0 && a.rows() > 1) {
      for (std::size_t c = 0; c < a.cols(); ++c) a(0, c) = a(1, c) * Rat(2, 7);
    }
    ASSERT_EQ(rank(a), rank(a.transpose()));
    ASSERT_LE(rank(a), std::min(a.rows(), a.cols()));
  }
}

TEST(Signature, SmallCases) {
  const RatVec d{Rat(2), Rat(-3), Rat(0)};
  EXPECT_EQ(signature(RatMat::diagonal(d)), (Inertia{1, 1, 1}));
  EXPECT_EQ(signature(RatMat{{0, 1}, {1, 0}}), (Inertia{1, 1, 0}));
  EXPECT_EQ(signature(RatMat{{0, 0, 1}, {0, 0, 0}, {1, 0, 0}}), (Inertia{1, 1, 1}));
  EXPECT_THROW(signature(RatMat{{0, 1}, {2, 0}}), NotSymmetric);
}

TEST(Signature, InvariantUnderCongruence) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = dim(rng);
    const RatMat half = oracle::random_matrix(n, n, rng, 4);
    RatMat s(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) s(i, j) = half(i, j) + half(j, i);
    }
    if (trial % 4 == 0) {
      for (std::size_t i = 0; i < n; ++i) s(i, i) = 0;
    }
    RatMat b = oracle::random_matrix(n, n, rng, 5);
    if (rank(b) < n) continue;
    const Inertia is = signature(s);
    ASSERT_EQ(is.positive + is.negative + is.zero, n);
    ASSERT_EQ(signature(b.transpose() * s * b), is);
    ASSERT_EQ(is, float_inertia(s));
  }
}

// For v with p >= 2 positive and q >= 2 negative entries and W a basis of
// {1, v}^perp, W^T diag(v) W has p-1 positive and q-1 negative eigenvalues.
TEST(Signature, RestrictedDiagonalFormIsIndefinite) {
  std::mt19937_64 rng(13);
  for (int m = 4; m <= 7; ++m) {
    for (int trial = 0; trial < 40; ++trial) {
      const RatVec v = oracle::random_generic_direction(m, rng);
      std::size_t p = 0;
      for (const Rat& x : v) p += x.sign() > 0 ? 1 : 0;
      const std::size_t q = static_cast<std::size_t>(m) - p;
      if (p < 2 || q < 2) continue;
      RatMat c(2, static_cast<std::size_t>(m));
      for (std::size_t j = 0; j < v.size(); ++j) {
        c(0, j) = 1;
        c(1, j) = v[j];
      }
      const RatMat w = nullspace(c);
      ASSERT_EQ(w.cols(), static_cast<std::size_t>(m - 2));
      const RatMat s = w.transpose() * RatMat::diagonal(v) * w;
      const Inertia in = signature(s);
      ASSERT_EQ(in, (Inertia{p - 1, q - 1, 0}));
      ASSERT_EQ(in, float_inertia(s));
    }
  }
}

TEST(Solve, RecoversKnownSolution) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    const RatMat a = oracle::random_matrix(4, 4, rng);
    RatVec x;
    for (int i = 0; i < 4; ++i) x.push_back(oracle::random_rat(rng));
    const RatVec b = a * x;
    const auto got = solve(a, b);
    if (rank(a) < 4) {
      EXPECT_FALSE(got.has_value());
    } else {
      ASSERT_TRUE(got.has_value());
      EXPECT_EQ(*got, x);
    }
  }
}

TEST(Nullspace, ColumnsAreIndependentAndAnnihilated) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 100; ++trial) {
    RatMat a = oracle::random_matrix(3, 6, rng, 2);
    const RatMat n = nullspace(a);
    ASSERT_EQ(n.cols() + rank(a), 6U);
    const RatMat z = a * n;
    for (std::size_t r = 0; r < z.rows(); ++r) {
      for (std::size_t c = 0; c < z.cols(); ++c) ASSERT_TRUE(z(r, c).is_zero());
    }
    ASSERT_EQ(rank(n), n.cols());
  }
}

TEST(ProjectOut, ResidualIsOrthogonal) {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 100; ++trial) {
    const RatMat b = oracle::random_matrix(5, 2, rng);
    RatVec u;
    for (int i = 0; i < 5; ++i) u.push_back(oracle::random_rat(rng));
    const auto r = project_out(u, b);
    if (rank(b) < 2) {
      EXPECT_FALSE(r.has_value());
      continue;
    }
    ASSERT_TRUE(r.has_value());
    for (std::size_t c = 0; c < 2; ++c) ASSERT_TRUE(dot(*r, b.column(c)).is_zero());
  }
}

}  // namespace
}  // namespace braidslice
