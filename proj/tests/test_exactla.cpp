#include <gtest/gtest.h>

#include "l2a/builders.hpp"
#include "l2a/error.hpp"
#include "l2a/exactla.hpp"
#include "oracles.hpp"

using namespace l2a;

TEST(Rational, ParseCanonicalizes) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-6/4")), "-3/2");
  EXPECT_EQ(to_string(parse_rational("+7")), "7");
  EXPECT_EQ(to_string(parse_rational("-0")), "0");
  EXPECT_EQ(to_string(parse_rational("0/5")), "0");
}

TEST(Rational, ParseRejectsMalformed) {
  for (const char* bad : {"", "1/0", "a", "1.5", "1/", "/2", "--1", "1 /2"}) {
    try {
      parse_rational(bad);
      ADD_FAILURE() << "accepted " << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::Parse) << bad;
    }
  }
}

TEST(Rref, HandExample) {
  const Matrix m = Matrix::from_rows({{1, 2, 3}, {2, 4, 7}});
  const RrefResult r = rref(m);
  EXPECT_EQ(r.reduced, Matrix::from_rows({{1, 2, 0}, {0, 0, 1}}));
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(rank(m), 2u);
}

TEST(Rref, ZeroMatrix) {
  const RrefResult r = rref(Matrix(2, 3));
  EXPECT_TRUE(r.pivots.empty());
  EXPECT_TRUE(r.reduced.is_zero());
}

TEST(Kernel, FreeColumnVectors) {
  const Subspace k = kernel_basis(Matrix::from_rows({{1, 2, 3}, {2, 4, 7}}));
  ASSERT_EQ(k.dim(), 1u);
  EXPECT_EQ(k.basis[0], (Vec{-2, 1, 0}));
}

TEST(Image, OriginalPivotColumns) {
  const Subspace im = image_basis(Matrix::from_rows({{1, 2, 3}, {2, 4, 7}}));
  ASSERT_EQ(im.dim(), 2u);
  EXPECT_EQ(im.basis[0], (Vec{1, 2}));
  EXPECT_EQ(im.basis[1], (Vec{3, 7}));
}

TEST(Complement, GreedyStandardVectors) {
  const Subspace s{3, {Vec{1, 1, 0}}};
  const Subspace c = complement(s);
  ASSERT_EQ(c.dim(), 2u);
  EXPECT_EQ(c.basis[0], unit_vec(3, 0));
  EXPECT_EQ(c.basis[1], unit_vec(3, 2));
}

TEST(Complement, OfEverythingIsEmpty) {
  const Subspace s{2, {unit_vec(2, 0), unit_vec(2, 1)}};
  EXPECT_EQ(complement(s).dim(), 0u);
}

TEST(Solve, ConsistentAndInconsistent) {
  const Matrix a = Matrix::from_rows({{1, 1}, {2, 2}});
  const auto x = solve(a, Matrix::from_rows({{3}, {6}}));
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(a * *x, Matrix::from_rows({{3}, {6}}));
  EXPECT_EQ((*x)(1, 0), 0);  // free variable set to zero
  EXPECT_FALSE(solve(a, Matrix::from_rows({{3}, {7}})).has_value());
}

TEST(Invert, HandValues) {
  const auto inv = invert(Matrix::from_rows({{2, 1}, {1, 1}}));
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(*inv, Matrix::from_rows({{1, -1}, {-1, 2}}));
  EXPECT_FALSE(invert(Matrix::from_rows({{1, 2}, {2, 4}})).has_value());
  EXPECT_THROW(invert(Matrix(2, 3)), Error);
}

TEST(QuaternionDifferential, KernelAndImage) {
  const TwoTermAlgebra q = quaternion_example(Quaternion{0, 0, 0, 0});
  EXPECT_EQ(kernel_basis(q.d).dim(), 3u);
  EXPECT_EQ(image_basis(q.d).dim(), 1u);
  for (const auto& v : kernel_basis(q.d).basis) EXPECT_EQ(v[0], 0);
}

TEST(ExactLinearAlgebra, RandomMatrixProperties) {
  Rng rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(rng.uniform(1, 6));
    const std::size_t cols = static_cast<std::size_t>(rng.uniform(1, 6));
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) {
        m(r, c) = Rational(rng.uniform(-3, 3), rng.uniform(1, 3));
        m(r, c).canonicalize();
      }
    const Subspace k = kernel_basis(m);
    EXPECT_EQ(rank(m) + k.dim(), cols);
    for (const auto& v : k.basis) EXPECT_TRUE(is_zero(m.apply(v)));
    const Subspace im = image_basis(m);
    EXPECT_EQ(im.dim(), rank(m));
    EXPECT_EQ(rank(m), oracle::rank([&] {
                oracle::Dense d(rows, std::vector<Rational>(cols));
                for (std::size_t r = 0; r < rows; ++r)
                  for (std::size_t c = 0; c < cols; ++c) d[r][c] = m(r, c);
                return d;
              }()));
    if (im.dim() > 0) EXPECT_EQ(im.dim() + complement(im).dim(), rows);
    if (rows == cols) {
      const auto inv = invert(m);
      EXPECT_EQ(inv.has_value(), rank(m) == rows);
      if (inv) EXPECT_EQ(m * *inv, Matrix::identity(rows));
    }
  }
}

TEST(ExactLinearAlgebra, RrefIsIdempotent) {
  Rng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix m(3, 4);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 4; ++c) m(r, c) = rng.uniform(-2, 2);
    const RrefResult once = rref(m);
    const RrefResult twice = rref(once.reduced);
    EXPECT_EQ(once.reduced, twice.reduced);
    EXPECT_EQ(once.pivots, twice.pivots);
  }
}
