#include "doctest.h"

#include "skein/dense.hpp"

using namespace skein;

TEST_CASE("rational determinant, inverse and kernel") {
  Matrix<Rational> m(3, 3, Rational(0));
  int vals[3][3] = {{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = vals[i][j];
  // cofactor expansion by hand: 2*(12-1) - 1*(4-0) = 18
  CHECK(determinant(m, Rational(1)) == 18);
  auto inv = inverse(m, Rational(1));
  REQUIRE(inv.has_value());
  CHECK(m * *inv == Matrix<Rational>::identity(3, Rational(0), Rational(1)));
  Matrix<Rational> s(2, 3, Rational(0));
  s(0, 0) = 1; s(0, 1) = 2; s(0, 2) = 3;
  s(1, 0) = 2; s(1, 1) = 4; s(1, 2) = 6;
  auto ker = nullspace(s, Rational(1));
  CHECK(ker.size() == 2);
  for (auto& v : ker) CHECK(v[0] + 2 * v[1] + 3 * v[2] == 0);
  CHECK_FALSE(inverse(s * Matrix<Rational>(3, 2, Rational(1)), Rational(1)).has_value());
}

TEST_CASE("Bareiss determinant agrees with the 2x2 formula") {
  Vars v{"x1", "x2", "v", "z"};
  auto x1 = MultiLaurent::variable(v, "x1"), x2 = MultiLaurent::variable(v, "x2");
  auto vv = MultiLaurent::variable(v, "v"), z = MultiLaurent::variable(v, "z");
  Matrix<MultiLaurent> m(2, 2, MultiLaurent(v));
  m(0, 0) = x1; m(0, 1) = vv * vv * x2;
  m(1, 0) = x2; m(1, 1) = x1 + vv * z * x2;
  CHECK(determinant(m) == x1 * x1 - vv * vv * x2 * x2 + vv * z * x1 * x2);
  Matrix<RationalFunction> f(2, 2, RationalFunction(v, 0));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) f(i, j) = m(i, j);
  CHECK(determinant(f, RationalFunction(v, 1)) == RationalFunction(determinant(m)));
}
