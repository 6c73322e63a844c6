#include <doctest.h>

#include "orbitgcd/errors.hpp"
#include "support.hpp"

using namespace orbitgcd;

TEST_CASE("parse examples") {
  const BigPoly m = parse_poly({"x0^2*x1", 3});
  REQUIRE(m.term_count() == 1);
  CHECK(m.leading_term().first == Monomial({2, 1, 0}));
  CHECK(m.leading_term().second == 1);

  const BigPoly a2 = parse_poly({"x1^3 + x0^2*x1 + x0*x2^2", 3});
  CHECK(a2 == BigPoly::monomial(Monomial({0, 3, 0}), 1) + BigPoly::monomial(Monomial({2, 1, 0}), 1) +
                  BigPoly::monomial(Monomial({1, 0, 2}), 1));

  const BigPoly x0 = BigPoly::variable(3, 0);
  const BigPoly x2 = BigPoly::variable(3, 2);
  CHECK(parse_poly({"(x0 - x2)*(x0 + x2)", 3}) == x0 * x0 - x2 * x2);
}

TEST_CASE("precedence and unary minus") {
  const BigPoly x0 = BigPoly::variable(2, 0);
  const BigPoly x1 = BigPoly::variable(2, 1);
  CHECK(parse_poly({"-x0^2", 2}) == -(x0 * x0));
  CHECK(parse_poly({"2*x0^3*x1", 2}) == BigInt(2) * x0 * x0 * x0 * x1);
  CHECK(parse_poly({"x0 - x1 - x1", 2}) == x0 - BigInt(2) * x1);
  CHECK(parse_poly({"(x0+x1)^2", 2}) == x0 * x0 + BigInt(2) * x0 * x1 + x1 * x1);
  CHECK(parse_poly({"  x0 *  - x1 ", 2}) == -(x0 * x1));
  CHECK(parse_poly({"123456789012345678901234567890*x0", 2}) ==
        BigInt("123456789012345678901234567890") * x0);
  CHECK(parse_poly({"x0^0", 2}) == BigPoly::constant(2, 1));
}

TEST_CASE("parse errors") {
  auto position_of = [](const char* text, std::size_t arity) -> long {
    try {
      parse_poly({text, arity});
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(position_of("x0 x1", 3) == 3);     // implicit multiplication
  CHECK(position_of("2x0", 3) == 1);
  CHECK(position_of("x3", 3) >= 0);        // unknown variable
  CHECK(position_of("y", 3) == 0);
  CHECK(position_of("x0^70000", 3) >= 0);  // exponent overflow
  CHECK(position_of("x0^2^3", 3) >= 0);
  CHECK(position_of("(x0+x1", 3) >= 0);
  CHECK(position_of("", 3) >= 0);
  CHECK(position_of("x0+", 3) >= 0);
  CHECK(position_of("x0^-1", 3) >= 0);
  CHECK_THROWS_AS(parse_poly({"x0", 0}), ParseError);
  CHECK_THROWS_AS(parse_poly({"x0", 65}), ParseError);
  CHECK_NOTHROW(parse_poly({"x0^65536", 1}));
}

TEST_CASE("list parsing keeps the component index") {
  const auto comps = parse_poly_list("x0^2*x1;x1^3;x2^3", 3);
  REQUIRE(comps.size() == 3);
  CHECK(comps[2] == BigPoly::monomial(Monomial({0, 0, 3}), 1));
  try {
    parse_poly_list("x0;x1 x2;x2", 3);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("1") != std::string::npos);
    CHECK(e.position() == 6);
  }
}

TEST_CASE("property: print then reparse" * doctest::description("2000 cases")) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t n = 1 + rng() % 4;
    const BigPoly p = testing_support::random_poly(rng, n, 5, rng() % 7, 1000);
    REQUIRE(parse_poly({p.to_string(), n}) == p);
  }
}

TEST_CASE("property: parse distributes over +" * doctest::description("1000 cases")) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 1000; ++i) {
    const BigPoly a = testing_support::random_poly(rng, 3, 4, 1 + rng() % 4);
    const BigPoly b = testing_support::random_poly(rng, 3, 4, 1 + rng() % 4);
    const std::string sa = "(" + a.to_string() + ")";
    const std::string sb = "(" + b.to_string() + ")";
    REQUIRE(parse_poly({sa + " + " + sb, 3}) == parse_poly({sa, 3}) + parse_poly({sb, 3}));
    REQUIRE(parse_poly({sa + "*" + sb, 3}) == a * b);
  }
}
