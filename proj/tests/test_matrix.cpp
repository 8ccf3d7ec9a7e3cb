#include <gtest/gtest.h>

#include <random>

#include "qhopf/matrix.hpp"
#include "qhopf/tensor.hpp"

using qhopf::Matrix;
using qhopf::Scalar;
using qhopf::TensorElement;
using qhopf::Vector;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int range = 4) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar(long(rng() % (2 * range + 1)) - range);
  return m;
}

}  // namespace

TEST(Matrix, SolveIdentity) {
  Vector b{Scalar(1), Scalar::rational(2, 3), Scalar(-4)};
  auto x = qhopf::solve_linear(Matrix::identity(3), b);
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, b);
}

TEST(Matrix, SolveInconsistent) {
  Matrix a(2, 2);
  a(0, 0) = Scalar(1);
  a(0, 1) = Scalar(1);
  a(1, 0) = Scalar(1);
  a(1, 1) = Scalar(1);
  Vector b{Scalar(1), Scalar(2)};
  EXPECT_FALSE(qhopf::solve_linear(a, b));
}

TEST(Matrix, RandomSolveMultipliesBack) {
  std::mt19937_64 rng(3);
  int solved = 0;
  for (int t = 0; t < 20; ++t) {
    Matrix a = random_matrix(rng, 5, 5);
    if (qhopf::rank(a) < 5) continue;
    Vector b(5);
    for (auto& x : b) x = Scalar(long(rng() % 9) - 4);
    auto x = qhopf::solve_linear(a, b);
    ASSERT_TRUE(x);
    EXPECT_EQ(a * *x, b);
    EXPECT_EQ(a * qhopf::inverse(a), Matrix::identity(5));
    ++solved;
  }
  EXPECT_GT(solved, 0);
}

TEST(Matrix, Kernel) {
  EXPECT_EQ(qhopf::kernel(Matrix(3, 3)).size(), 3u);
  EXPECT_TRUE(qhopf::kernel(Matrix::identity(4)).empty());
  std::mt19937_64 rng(11);
  for (int t = 0; t < 10; ++t) {
    // Rank-deficient by construction: product of 6x3 and 3x7.
    Matrix a = random_matrix(rng, 6, 3) * random_matrix(rng, 3, 7);
    const auto ker = qhopf::kernel(a);
    EXPECT_EQ(qhopf::rank(a) + ker.size(), 7u);
    for (const auto& v : ker)
      for (const auto& x : a * v) EXPECT_TRUE(x.is_zero());
    Matrix basis(7, ker.size());
    for (std::size_t j = 0; j < ker.size(); ++j)
      for (std::size_t i = 0; i < 7; ++i) basis(i, j) = ker[j][i];
    EXPECT_EQ(qhopf::rank(basis), ker.size());
  }
}

TEST(Matrix, Trace) {
  EXPECT_EQ(qhopf::trace(Matrix::identity(5)), Scalar(5));
  Matrix nil(3, 3);
  nil(0, 1) = Scalar(2);
  nil(1, 2) = Scalar(7);
  EXPECT_TRUE(qhopf::trace(nil).is_zero());
  std::mt19937_64 rng(5);
  for (int t = 0; t < 10; ++t) {
    Matrix a = random_matrix(rng, 4, 4), b = random_matrix(rng, 4, 4);
    EXPECT_EQ(qhopf::trace(a * b), qhopf::trace(b * a));
  }
  EXPECT_THROW(qhopf::trace(Matrix(2, 3)), qhopf::Error);
}

TEST(Tensor, ProductShapes) {
  const std::size_t n = 3;
  Vector one{Scalar(1), Scalar(0), Scalar(0)};
  auto u = TensorElement::from_dense(n, 1, one);
  auto uu = qhopf::tensor_product(u, u);
  EXPECT_EQ(uu.arity(), 2u);
  EXPECT_EQ(uu.nnz(), 1u);
  EXPECT_EQ(uu.coeff({0, 0}), Scalar(1));

  Vector v{Scalar(1), Scalar(1), Scalar(0)};
  auto t = qhopf::tensor_product(TensorElement::from_dense(n, 1, v), u);
  EXPECT_EQ(t.nnz(), 2u);
  EXPECT_EQ(t.coeff({0, 0}), Scalar(1));
  EXPECT_EQ(t.coeff({1, 0}), Scalar(1));
}

TEST(Tensor, ProductAssociativeAndBilinear) {
  std::mt19937_64 rng(9);
  const std::size_t n = 3;
  auto rnd = [&](std::size_t k) {
    Vector c(qhopf::checked_power(n, k));
    for (auto& x : c) x = Scalar(long(rng() % 5) - 2);
    return TensorElement::from_dense(n, k, c);
  };
  auto a = rnd(1), b = rnd(2), c = rnd(1), d = rnd(2);
  EXPECT_EQ(qhopf::tensor_product(qhopf::tensor_product(a, b), c),
            qhopf::tensor_product(a, qhopf::tensor_product(b, c)));
  EXPECT_EQ(qhopf::tensor_product(a, b + d), qhopf::tensor_product(a, b) + qhopf::tensor_product(a, d));
  // Flat index identity: (i, j, k) -> i n^2 + j n + k.
  auto abc = qhopf::tensor_product(qhopf::tensor_product(a, b), c);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          EXPECT_EQ(abc.coeff(((i * n + j) * n + k) * n + l), a.coeff(i) * b.coeff({j, k}) * c.coeff(l));
}

TEST(Tensor, Permute) {
  const std::size_t n = 2;
  std::vector<TensorElement::Term> terms{{1, Scalar(3)}};  // (0,0,1)
  auto t = TensorElement::from_terms(n, 3, terms);
  auto p = qhopf::permute_slots(t, {2, 0, 1});
  EXPECT_EQ(p.coeff({1, 0, 0}), Scalar(3));
}
