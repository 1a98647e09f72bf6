#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "tutte/bivar_poly.hpp"
#include "tutte/error.hpp"
#include "tutte/fixtures.hpp"

using tutte::BigInt;
using tutte::BivarPoly;

namespace {

const BivarPoly x = BivarPoly::x();
const BivarPoly y = BivarPoly::y();

BivarPoly P(const char* text) { return BivarPoly::parse(text); }

}  // namespace

TEST_CASE("add") {
  CHECK((x + y) + (x - y) == 2 * x);
  const BivarPoly p = x * x + x + y;
  CHECK(p + 0 == p);
  CHECK(p + p == 2 * x * x + 2 * x + 2 * y);
  CHECK((x - x).is_zero());
  CHECK((x - x).term_count() == 0);
}

TEST_CASE("mul") {
  CHECK((x + 1) * (y + 1) == x * y + x + y + 1);
  const BivarPoly p = x * x + 3 * y;
  CHECK(p * 1 == p);
  CHECK((x + y) * (x - y) == x * x - y * y);
  CHECK((p * 0).is_zero());
}

TEST_CASE("div_exact") {
  const BivarPoly& d = tutte::split_denominator();
  CHECK(d == x * y - x - y);
  const BivarPoly q = x * x + 5 * y * y - 7;
  CHECK(tutte::div_exact(q * d, d) == q);
  CHECK(tutte::div_exact(BivarPoly(0), d).is_zero());
  CHECK_THROWS_AS(tutte::div_exact(x * x + 1, d), tutte::NotDivisible);
  CHECK_THROWS_AS(tutte::div_exact(x, BivarPoly(0)), tutte::NotDivisible);
  CHECK_THROWS_AS(tutte::div_exact(x * y + 1, 2 * x * y), tutte::NotDivisible);
}

TEST_CASE("eval") {
  CHECK((x * x + x + y).eval(1, 1) == 3);
  CHECK((x * x * x * y - 2 * y).eval(-2, 3) == -30);
  CHECK(BivarPoly(0).eval(5, 7) == 0);
  BigInt big("123456789012345678901234567890");
  CHECK((x * y).eval(big, 2) == big * 2);
}

TEST_CASE("canonical text") {
  CHECK((x * x + x + y).to_text() == "x^2 + x + y");
  CHECK(BivarPoly(0).to_text() == "0");
  CHECK((3 * x * y - y + 1).to_text() == "3*x*y - y + 1");
  CHECK((-x * x * y * y).to_text() == "-x^2*y^2");
  CHECK(BivarPoly(-4).to_text() == "-4");
}

TEST_CASE("parse") {
  CHECK(P("x^2 + x + y") == x * x + x + y);
  CHECK(P("0") == BivarPoly(0));
  CHECK(P("4x^{12}y") == 4 * x.pow(12) * y);
  CHECK(P("2*x*y - 3") == 2 * x * y - 3);
  CHECK(P("  -y + x + x ") == 2 * x - y);
  CHECK(P("y^2x") == x * y * y);
  SUBCASE("errors carry a position") {
    try {
      (void)P("x + * y");
      FAIL("expected ParseError");
    } catch (const tutte::ParseError& e) {
      CHECK(e.position() == 4);
    }
    CHECK_THROWS_AS(P(""), tutte::ParseError);
    CHECK_THROWS_AS(P("x^"), tutte::ParseError);
    CHECK_THROWS_AS(P("x^{3"), tutte::ParseError);
    CHECK_THROWS_AS(P("z"), tutte::ParseError);
    CHECK_THROWS_AS(P("x +"), tutte::ParseError);
  }
}

TEST_CASE("stored polynomial survives a text round trip") {
  const BivarPoly& r1 = tutte::appendix_fixtures().polynomial(tutte::Chain::pyrene, 1).poly;
  CHECK(r1.coeff(15, 0) == 1);
  CHECK(r1.coeff(14, 0) == 4);
  CHECK(r1.coeff(6, 2) == 5);
  CHECK(BivarPoly::parse(r1.to_text()) == r1);
}

TEST_CASE("json") {
  const BivarPoly p = x * x * y - 12 + y;
  const auto j = p.to_json();
  CHECK(j.dump() == R"([[2,1,"1"],[0,1,"1"],[0,0,"-12"]])");
  CHECK(BivarPoly::from_json(j) == p);
  CHECK_THROWS_AS(BivarPoly::from_json(nlohmann::json::parse("{}")), tutte::ParseError);
  CHECK_THROWS_AS(BivarPoly::from_json(nlohmann::json::parse(R"([[1,"a","2"]])")),
                  tutte::ParseError);
}

TEST_CASE("degrees, coefficients, swap") {
  const BivarPoly p = 3 * x.pow(4) * y + y.pow(6);
  CHECK(p.max_x_degree() == 4);
  CHECK(p.max_y_degree() == 6);
  CHECK(p.coeff(4, 1) == 3);
  CHECK(p.coeff(1, 1) == 0);
  CHECK(p.swap_xy() == 3 * y.pow(4) * x + x.pow(6));
  CHECK(p.pow(0) == BivarPoly(1));
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    const BivarPoly a = oracle::random_poly(rng);
    const BivarPoly b = oracle::random_poly(rng);
    const BivarPoly c = oracle::random_poly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == BivarPoly(0));
  }
}

TEST_CASE("parse inverts to_text") {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    const BivarPoly a = oracle::random_poly(rng, 8, 10);
    CHECK(BivarPoly::parse(a.to_text()) == a);
    CHECK(BivarPoly::from_json(a.to_json()) == a);
  }
}

TEST_CASE("eval is a ring homomorphism") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> point(-5, 5);
  for (int i = 0; i < 200; ++i) {
    const BivarPoly a = oracle::random_poly(rng);
    const BivarPoly b = oracle::random_poly(rng);
    const BigInt x0 = point(rng);
    const BigInt y0 = point(rng);
    CHECK((a * b).eval(x0, y0) == a.eval(x0, y0) * b.eval(x0, y0));
    CHECK((a + b).eval(x0, y0) == a.eval(x0, y0) + b.eval(x0, y0));
  }
}

TEST_CASE("div_exact round trip with monic-leading divisors") {
  std::mt19937 rng(17);
  const std::vector<BivarPoly> divisors = {tutte::split_denominator(), x + 1, y - 2,
                                           x * x * y + 3 * x - y, -x * y + 4};
  for (int i = 0; i < 100; ++i) {
    const BivarPoly p = oracle::random_poly(rng);
    for (const auto& d : divisors) CHECK(tutte::div_exact(p * d, d) == p);
  }
}

TEST_CASE("large products stay exact") {
  const BivarPoly p = (x + y + 1).pow(40);
  BigInt expected;
  mpz_ui_pow_ui(expected.get_mpz_t(), 3, 40);
  CHECK(p.eval(1, 1) == expected);
  CHECK(tutte::div_exact(p, (x + y + 1).pow(39)) == x + y + 1);
}
