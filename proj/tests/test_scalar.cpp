#include <gtest/gtest.h>

#include <random>

#include "qhopf/scalar.hpp"

using qhopf::Error;
using qhopf::ErrorCode;
using qhopf::Scalar;

namespace {

Scalar random_cyclotomic(std::mt19937_64& rng, unsigned order) {
  std::vector<mpq_class> c(qhopf::euler_phi(order));
  for (auto& x : c) x = mpq_class(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 4) + 1);
  return Scalar::cyclotomic(order, c);
}

}  // namespace

TEST(Scalar, RationalArithmetic) {
  EXPECT_EQ(Scalar::rational(1, 2) + Scalar::rational(1, 3), Scalar::rational(5, 6));
  EXPECT_EQ(Scalar::rational(4, -6).to_string(), "-2/3");
  EXPECT_EQ(Scalar::rational(3, 4) / Scalar::rational(3, 2), Scalar::rational(1, 2));
}

TEST(Scalar, CyclotomicPolynomials) {
  using qhopf::poly::cyclotomic;
  EXPECT_EQ(cyclotomic(3), (qhopf::poly::Poly{1, 1, 1}));
  EXPECT_EQ(cyclotomic(4), (qhopf::poly::Poly{1, 0, 1}));
  EXPECT_EQ(cyclotomic(6), (qhopf::poly::Poly{1, -1, 1}));
  EXPECT_EQ(cyclotomic(12).size(), 5u);
}

TEST(Scalar, RootsOfUnity) {
  EXPECT_EQ(qhopf::root_of_unity(2, 1), Scalar(-1));
  EXPECT_EQ(qhopf::root_of_unity(4, 2), Scalar(-1));
  EXPECT_EQ(qhopf::root_of_unity(3, 1) * qhopf::root_of_unity(3, 2), Scalar(1));
  for (unsigned n : {3u, 4u, 5u, 6u, 8u, 12u}) {
    const Scalar z = qhopf::root_of_unity(n, 1);
    Scalar p(1);
    for (unsigned j = 1; j < n; ++j) {
      p *= z;
      EXPECT_FALSE(p.is_one()) << n << " " << j;
    }
    EXPECT_TRUE((p * z).is_one());
    for (long k = -7; k < 20; ++k) EXPECT_EQ(qhopf::root_of_unity(n, k), qhopf::root_of_unity(n, ((k % long(n)) + n) % n));
  }
}

TEST(Scalar, InverseMultipliesBack) {
  const Scalar a = Scalar(1) + qhopf::root_of_unity(3, 1);
  EXPECT_TRUE((a * a.inverse()).is_one());
  EXPECT_THROW(Scalar(0).inverse(), Error);
  try {
    (void)(Scalar(1) / Scalar(0));
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DivisionByZero);
  }
}

TEST(Scalar, FieldMismatch) {
  const Scalar a = qhopf::root_of_unity(3, 1);
  const Scalar b = qhopf::root_of_unity(5, 1);
  try {
    (void)(a + b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::FieldMismatch);
  }
  EXPECT_THROW((void)(a * b), Error);
  // Rationals mix freely with any order.
  EXPECT_NO_THROW((void)(a + Scalar::rational(1, 2)));
  EXPECT_NO_THROW((void)(b * Scalar(3)));
}

TEST(Scalar, FieldAxiomsOnRandomTriples) {
  std::mt19937_64 rng(7);
  for (unsigned order : {1u, 3u, 4u, 5u, 8u}) {
    for (int t = 0; t < 30; ++t) {
      const Scalar a = order == 1 ? Scalar::rational(long(rng() % 21) - 10, long(rng() % 5) + 1) : random_cyclotomic(rng, order);
      const Scalar b = order == 1 ? Scalar::rational(long(rng() % 21) - 10, long(rng() % 5) + 1) : random_cyclotomic(rng, order);
      const Scalar c = order == 1 ? Scalar::rational(long(rng() % 21) - 10, long(rng() % 5) + 1) : random_cyclotomic(rng, order);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      if (!a.is_zero()) {
        EXPECT_TRUE((a * a.inverse()).is_one());
      }
      EXPECT_TRUE((a - a).is_zero());
    }
  }
}

TEST(Scalar, EqualityAcrossTags) {
  const Scalar z = qhopf::root_of_unity(3, 1);
  // 1 + z + z^2 = 0 so -(z + z^2) = 1
  const Scalar one = -(z + z * z);
  EXPECT_EQ(one, Scalar(1));
  EXPECT_EQ(one.to_string(), "1");
  EXPECT_NE(z, Scalar(1));
}

TEST(Scalar, RenderParseRoundTrip) {
  std::mt19937_64 rng(11);
  for (unsigned order : {1u, 3u, 4u, 5u, 8u, 12u}) {
    for (int t = 0; t < 30; ++t) {
      const Scalar a = order == 1 ? Scalar::rational(long(rng() % 21) - 10, long(rng() % 5) + 1) : random_cyclotomic(rng, order);
      EXPECT_EQ(qhopf::parse_scalar(a.to_string()), a) << a.to_string();
    }
  }
  EXPECT_EQ(qhopf::parse_scalar("z3^3"), Scalar(1));
  EXPECT_EQ(qhopf::parse_scalar(" -3/6 "), Scalar::rational(-1, 2));
  for (const char* bad : {"", "1/0", "abc", "2*", "z", "z0", "1 + ", "3*y3"}) {
    try {
      qhopf::parse_scalar(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError) << bad;
    }
  }
}
