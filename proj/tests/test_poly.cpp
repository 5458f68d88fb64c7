#include "doctest.h"

#include <random>

#include "skein/poly.hpp"

using namespace skein;

namespace {

const Vars kA{"A"};
const Vars kVZ{"v", "z"};

MultiLaurent P(const char* s, const Vars& v = kVZ) { return MultiLaurent::parse(s, v); }

MultiLaurent randomPoly(std::mt19937_64& rng, const Vars& v, int terms, int lo, int hi) {
  std::uniform_int_distribution<int> ex(lo, hi), co(-3, 3);
  MultiLaurent p(v);
  for (int t = 0; t < terms; ++t) {
    Exponents e(v.size());
    for (auto& x : e) x = ex(rng);
    p.addTerm(e, co(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("canonical rendering and parsing round trip") {
  MultiLaurent a = MultiLaurent::parse("-A^5 - A^-3 + A^-7", kA);
  CHECK(a.str() == "-A^5 - A^-3 + A^-7");
  CHECK(P("2*v^-1*z + 1").str() == "1 + 2*v^-1*z");
  CHECK(P("0").str() == "0");
  CHECK(P("1").str() == "1");
  CHECK(P("-1").str() == "-1");
  CHECK(P("z*v").str() == "v*z");
  CHECK(P("3 v").str() == "3*v");
  CHECK_THROWS_AS(P("q"), ParseError);
  CHECK_THROWS_AS(P("v +"), ParseError);
}

TEST_CASE("ring axioms on random samples") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 30; ++i) {
    auto a = randomPoly(rng, kVZ, 4, -2, 2), b = randomPoly(rng, kVZ, 4, -2, 2), c = randomPoly(rng, kVZ, 3, -2, 2);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    CHECK((a - a).isZero());
    CHECK(MultiLaurent::parse(a.str(), kVZ) == a);
  }
}

TEST_CASE("variable mismatch is a contract violation") {
  CHECK_THROWS_AS(P("v") + MultiLaurent::parse("A", kA), ContractViolation);
  MultiLaurent bare(Vars{}, 3);
  CHECK((P("v") + bare).str() == "v + 3");
}

TEST_CASE("negative powers") {
  CHECK(P("-v").pow(-3) == P("-v^-3"));
  CHECK_THROWS_AS(P("v + 1").pow(-1), ArithmeticError);
}

TEST_CASE("gcd divides both and leaves coprime cofactors") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 25; ++i) {
    auto g = randomPoly(rng, kVZ, 3, 0, 2);
    auto a = randomPoly(rng, kVZ, 3, 0, 2) * g, b = randomPoly(rng, kVZ, 3, 0, 2) * g;
    if (a.isZero() || b.isZero() || g.isZero()) continue;
    auto d = gcd(a, b);
    REQUIRE(exactDivide(a, d).has_value());
    REQUIRE(exactDivide(b, d).has_value());
    CHECK(exactDivide(d, gcd(g, g)).has_value());
  }
  CHECK(gcd(P("v^2 - 1"), P("v^2 + 2*v + 1")) == P("v + 1"));
  CHECK(gcd(P("v^-1*z"), P("z^3")).isOne());
}

TEST_CASE("rational function normal form") {
  RationalFunction f(P("v^2 - 1"), P("v*z - z + v^2 - v"));
  CHECK(f.str() == "(v + 1)/(v + z)");
  // monomials are units, so dividing by z stays a Laurent polynomial
  RationalFunction delta(P("v^-1 - v"), P("z"));
  CHECK(delta.isLaurent());
  CHECK(((delta * RationalFunction(P("z"))) - RationalFunction(P("v^-1 - v"))).isZero());
  CHECK(RationalFunction::parse(f.str(), kVZ) == f);
  RationalFunction g(P("1"), P("-2*z - 2"));
  CHECK(g.str() == "(-1)/(2*z + 2)");
  CHECK((g + g.inverse().inverse() - g * RationalFunction(kVZ, 2)).isZero());
}

TEST_CASE("substitution and exponent maps") {
  Vars s{"s"};
  auto t = MultiLaurent::variable(s, "s");
  auto p = P("v^-2 + v^-1*z");
  auto r = substitute(p, {{"v", t.pow(2)}, {"z", t - t.pow(-1)}}, s);
  CHECK(r.toLaurent() == MultiLaurent::parse("s^-1 - s^-3 + s^-4", s));
  auto q = substitute(P("z^-1"), {{"v", t}, {"z", t - t.pow(-1)}}, s);
  CHECK(q.str() == "(s)/(s^2 - 1)");
  auto a = MultiLaurent::parse("-A^4 - A^-4 + A^8", kA);
  auto m = mapExponents(a, s, {{Rational(-1, 2)}});
  CHECK(m == MultiLaurent::parse("-s^-2 - s^2 + s^-4", s));
  CHECK_THROWS_AS(mapExponents(MultiLaurent::parse("A", kA), s, {{Rational(-1, 2)}}), ArithmeticError);
}

TEST_CASE("residue modulo ideal") {
  auto p = P("v^3 + v^-2 + 2*v*z - v^2");
  CHECK(residueModIdeal(p, {"z"}, {"v"}) == P("v"));
}

TEST_CASE("evaluation") {
  auto p = P("v^-2 + 3*z");
  CHECK(evaluate(p, {Rational(1, 2), Rational(2)}) == Rational(10));
  CHECK_THROWS_AS(evaluate(p, {Rational(0), Rational(1)}), ArithmeticError);
}

TEST_CASE("documented arithmetic examples") {
  auto x = MultiLaurent::parse("A + A^-1", kA), y = MultiLaurent::parse("A - A^-1", kA);
  CHECK((x * y).str() == "A^2 - A^-2");
  auto mu = MultiLaurent::parse("-A^2 - A^-2", kA);
  CHECK((mu * mu).str() == "A^4 + 2 + A^-4");
  CHECK((RationalFunction(mu) / RationalFunction(mu)).isOne());
  CHECK((x + MultiLaurent(kA)) == x);
  // Alexander of the 2-component unlink vanishes: (v^-1 - v)/z at v = 1
  Vars s{"s"};
  auto t = MultiLaurent::variable(s, "s");
  RationalFunction twoUnlink(P("v^-1 - v"), P("z"));
  CHECK(substitute(twoUnlink, {{"v", MultiLaurent(s, 1)}, {"z", t - t.pow(-1)}}, s).isZero());
  CHECK_THROWS_AS(RationalFunction(P("1"), P("0")), ArithmeticError);
  CHECK_THROWS_AS(RationalFunction(P("0")).inverse(), ArithmeticError);
  // Multiply back: inverse of x + mu*y with generic coefficients
  Vars gen{"A", "a2", "a4", "a5"};
  auto g = [&](const char* n) { return MultiLaurent::variable(gen, n); };
  auto m = MultiLaurent::parse("-A^2 - A^-2", gen);
  auto xx = g("a2") + m * g("a5"), yy = g("a4") - g("a5");
  RationalFunction f(xx + m * yy);
  CHECK((f * f.inverse()).isOne());
}

TEST_CASE("normal form is idempotent and substitution is multiplicative") {
  std::mt19937_64 rng(23);
  Vars s{"s"};
  auto t = MultiLaurent::variable(s, "s");
  std::map<std::string, MultiLaurent> bind{{"v", t.pow(2)}, {"z", t - t.pow(-1)}};
  for (int i = 0; i < 20; ++i) {
    auto a = randomPoly(rng, kVZ, 3, -2, 2), b = randomPoly(rng, kVZ, 3, -2, 2);
    if (b.isZero()) continue;
    RationalFunction f(a, b);
    CHECK(RationalFunction(f.numerator(), f.denominator()) == f);
    if (!a.isZero()) CHECK((f * f.inverse()).isOne());
    CHECK(substitute(a * b, bind, s) == substitute(a, bind, s) * substitute(b, bind, s));
  }
  CHECK(residueModIdeal(P("v^-2"), {"z"}, {"v"}).isOne());
  CHECK(residueModIdeal(P("-v^2 + v*z + 1"), {"z"}, {"v"}).isZero());
}
