#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilskt/linalg.hpp"
#include "test_util.hpp"

using namespace nilskt;
using testutil::Rng;

TEST_CASE("exact arithmetic is closed and lossless") {
  Scalar a = Scalar::rational("1/3", "-2/7");
  Scalar b = Scalar::rational("5/11", "4");
  CHECK((a + b - b) == a);
  CHECK((a * b / b) == a);
  CHECK(((a / b) * b) == a);
  CHECK(a.conj().conj() == a);
  CHECK(a.abs2() == a * a.conj());
  CHECK(a.is_exact());
  CHECK((a * b).is_exact());
}

TEST_CASE("mixing modes promotes to float") {
  Scalar a = Scalar::rational("1/3");
  Scalar f = Scalar::floating(0.5, 1.0);
  CHECK(!(a * f).is_exact());
  CHECK(!(a + f).is_exact());
  CHECK((a + f).near(Scalar::floating(1.0 / 3 + 0.5, 1.0), 1e-15));
}

TEST_CASE("ipow cycle") {
  CHECK(Scalar::ipow(0) == Scalar(1));
  CHECK(Scalar::ipow(1) == Scalar::i());
  CHECK(Scalar::ipow(2) == Scalar(-1));
  CHECK(Scalar::ipow(-1) == Scalar::i().conj());
  CHECK(Scalar::ipow(7) == Scalar::ipow(3));
}

TEST_CASE("division by zero throws") {
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), Error);
}

TEST_CASE("matrix inverse and solve, exact mode") {
  Rng rng(101);
  for (int it = 0; it < 50; ++it) {
    Mat m = testutil::rand_mat(rng, 4, 4);
    auto inv = m.inverse();
    if (!inv) continue;
    CHECK((m * *inv).near(Mat::identity(4), 0));
    Mat b = testutil::rand_mat(rng, 4, 2);
    auto x = m.solve(b);
    REQUIRE(x);
    CHECK((m * *x).near(b, 0));
  }
}

TEST_CASE("kernel vectors are annihilated") {
  Rng rng(102);
  for (int it = 0; it < 50; ++it) {
    Mat m = testutil::rand_mat(rng, 3, 5);
    Mat k = m.kernel();
    CHECK(m.rank() + k.cols() == 5);
    Mat z = m * k;
    CHECK(z.near(Mat(3, k.cols()), 0));
  }
}

TEST_CASE("determinant multiplicative") {
  Rng rng(103);
  for (int it = 0; it < 30; ++it) {
    Mat a = testutil::rand_mat(rng, 3, 3);
    Mat b = testutil::rand_mat(rng, 3, 3);
    CHECK((a * b).det() == a.det() * b.det());
  }
}

TEST_CASE("signature of diagonal and indefinite matrices") {
  Mat id = Mat::identity(6);
  CHECK(signature(id) == std::pair<int, int>(6, 0));
  CHECK(signature(id.scaled(Scalar(-1))) == std::pair<int, int>(0, 6));
  // Hyperbolic plane pairs need the off-diagonal fallback.
  Mat h(4, 4);
  h.at(0, 1) = Scalar(1);
  h.at(1, 0) = Scalar(1);
  h.at(2, 3) = Scalar(-2);
  h.at(3, 2) = Scalar(-2);
  CHECK(signature(h) == std::pair<int, int>(2, 2));
}

TEST_CASE("adjugate identity M adj(M) = det(M) I") {
  Rng rng(104);
  for (int it = 0; it < 100; ++it) {
    Mat2 m = testutil::rand_mat2(rng);
    Mat2 prod = m * m.adj();
    CHECK(prod.a == m.det());
    CHECK(prod.d == m.det());
    CHECK(prod.b.is_zero());
    CHECK(prod.c.is_zero());
  }
}

TEST_CASE("2x2 inverse round trip") {
  Rng rng(105);
  for (int it = 0; it < 50; ++it) {
    Mat2 m = testutil::rand_invertible2(rng);
    CHECK((m * m.inverse()).near(Mat2::identity(), 0));
  }
  CHECK_THROWS_AS(Mat2::zero().inverse(), Error);
}
