#include <gtest/gtest.h>

#include <random>

#include "invalg/linalg.hpp"

using namespace invalg;

namespace {

Matrix random_matrix(Field f, std::size_t r, std::size_t c, std::mt19937_64& rng, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> d(lo, hi);
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = FieldElem::from_int(f, d(rng));
  return m;
}

Vec v(Field f, std::initializer_list<long> xs) {
  Vec out;
  for (long x : xs) out.push_back(FieldElem::from_int(f, x));
  return out;
}

}  // namespace

TEST(Matrix, ProductAndIdentity) {
  const Field Q = Field::rationals();
  const Matrix a = Matrix::from_rows(Q, 2, {v(Q, {1, 2}), v(Q, {3, 4})});
  const Matrix b = Matrix::from_rows(Q, 2, {v(Q, {0, 1}), v(Q, {1, 0})});
  EXPECT_EQ(a * b, Matrix::from_rows(Q, 2, {v(Q, {2, 1}), v(Q, {4, 3})}));
  EXPECT_EQ(a * Matrix::identity(Q, 2), a);
  EXPECT_EQ(a.apply(v(Q, {1, 1})), v(Q, {3, 7}));
  EXPECT_EQ(a.transpose().row(0), v(Q, {1, 3}));
}

TEST(Matrix, InverseOfRandomMatrices) {
  std::mt19937_64 rng(3);
  for (Field f : {Field::rationals(), Field::prime(5)}) {
    int inverted = 0;
    for (int i = 0; i < 200; ++i) {
      const Matrix m = random_matrix(f, 4, 4, rng);
      const auto inv = m.inverse();
      EXPECT_EQ(inv.has_value(), m.rank() == 4);
      if (inv) {
        ++inverted;
        EXPECT_EQ(m * *inv, Matrix::identity(f, 4));
        EXPECT_EQ(*inv * m, Matrix::identity(f, 4));
      }
    }
    EXPECT_GT(inverted, 50);
  }
  EXPECT_TRUE(Matrix(Field::rationals(), 0, 0).inverse().has_value());
}

TEST(Matrix, NullspaceAndRankNullity) {
  std::mt19937_64 rng(5);
  for (Field f : {Field::rationals(), Field::prime(3)}) {
    for (int i = 0; i < 200; ++i) {
      const Matrix m = random_matrix(f, 3, 5, rng, -1, 1);
      const auto null = m.nullspace();
      EXPECT_EQ(null.size() + m.rank(), 5u);
      for (const auto& n : null) EXPECT_TRUE(is_zero_vec(m.apply(n)));
      EXPECT_EQ(Subspace::span(f, 5, null).dim(), null.size());
    }
  }
}

TEST(Subspace, EchelonFormIsCanonical) {
  const Field Q = Field::rationals();
  const auto a = Subspace::span(Q, 3, std::vector<Vec>{v(Q, {1, 1, 0}), v(Q, {0, 1, 1})});
  const auto b = Subspace::span(Q, 3, std::vector<Vec>{v(Q, {1, 2, 1}), v(Q, {2, 1, -1}), v(Q, {1, 0, -1})});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.basis()[0], v(Q, {1, 0, -1}));
  EXPECT_EQ(a.complement_indices(), std::vector<std::size_t>{2});
  EXPECT_TRUE(a.contains(v(Q, {3, 4, 1})));
  EXPECT_FALSE(a.contains(v(Q, {0, 0, 1})));
  EXPECT_EQ(a.combine(*a.coordinates(v(Q, {3, 4, 1}))), v(Q, {3, 4, 1}));
  EXPECT_FALSE(a.coordinates(v(Q, {0, 0, 1})).has_value());
}

TEST(Subspace, SumIntersectionDimensions) {
  std::mt19937_64 rng(9);
  const Field f = Field::prime(7);
  for (int i = 0; i < 200; ++i) {
    const auto u = Subspace::span(f, 5, random_matrix(f, 3, 5, rng).row_vectors());
    const auto w = Subspace::span(f, 5, random_matrix(f, 2, 5, rng).row_vectors());
    const auto s = u.sum(w);
    const auto n = u.intersect(w);
    EXPECT_EQ(s.dim() + n.dim(), u.dim() + w.dim());
    EXPECT_TRUE(s.contains(u));
    EXPECT_TRUE(u.contains(n));
    EXPECT_TRUE(w.contains(n));
  }
}

TEST(Subspace, ZeroWholeAndImage) {
  const Field Q = Field::rationals();
  EXPECT_EQ(Subspace::zero(Q, 3).dim(), 0u);
  EXPECT_EQ(Subspace::whole(Q, 3).dim(), 3u);
  const Matrix proj = Matrix::from_rows(Q, 3, {v(Q, {1, 0, 0}), v(Q, {0, 0, 0})});
  const auto im = Subspace::whole(Q, 3).image(proj);
  EXPECT_EQ(im.ambient_dim(), 2u);
  EXPECT_EQ(im.dim(), 1u);
  EXPECT_TRUE(Subspace::zero(Q, 3) < Subspace::whole(Q, 3));
}
