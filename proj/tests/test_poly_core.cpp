#include <doctest.h>

#include "phinewton/errors.hpp"
#include "phinewton/int_poly.hpp"
#include "phinewton/poly_parse.hpp"
#include "support.hpp"

using namespace phinewton;
using phinewton::testing::random_monic;
using phinewton::testing::random_nonzero_poly;
using phinewton::testing::random_poly;

namespace {
IntPoly P(std::initializer_list<long> c) { return IntPoly::from_longs(c); }
const IntPoly kPhi37 = P({7, -1, 0, 1});  // x^3 - x + 7
}  // namespace

TEST_SUITE("poly-core") {
  TEST_CASE("canonical form and degree marker") {
    CHECK(IntPoly().is_zero());
    CHECK(IntPoly().degree() == IntPoly::kMinusInfinity);
    CHECK(P({0, 0, 0}).is_zero());
    CHECK(P({5}).degree() == 0);
    CHECK(P({1, 2, 0}).degree() == 1);
    CHECK_THROWS_AS(IntPoly().leading(), DomainError);
  }

  TEST_CASE("add") {
    CHECK(add(P({1, 1}), P({-1, 1})) == P({0, 2}));
    const IntPoly f = P({3, 0, -2, 9});
    CHECK(add(f, IntPoly()) == f);
    CHECK(add(P({0, 0, 1}), P({0, 0, -1})).is_zero());
  }

  TEST_CASE("mul") {
    CHECK(mul(P({1, 1}), P({-1, 1})) == P({-1, 0, 1}));
    const IntPoly f = P({4, -3, 0, 2});
    CHECK(mul(f, P({1})) == f);
    // (phi^2 + 120)^2 = 120 * (phi^4/5! ... scaled): phi^4 + 240 phi^2 + 14400.
    const IntPoly phi2 = mul(kPhi37, kPhi37);
    const IntPoly lhs = pow(phi2 + P({120}), 2);
    const IntPoly rhs = pow(kPhi37, 4) + phi2 * Integer(240) + P({14400});
    CHECK(lhs == rhs);
  }

  TEST_CASE("divrem_monic") {
    auto [q, r] = divrem_monic(P({0, 0, 0, 1}), P({1, 0, 1}));
    CHECK(q == P({0, 1}));
    CHECK(r == P({0, -1}));
    auto [q2, r2] = divrem_monic(P({1, 0, 1}), P({1, 0, 1}));
    CHECK(q2 == P({1}));
    CHECK(r2.is_zero());
    auto [q3, r3] = divrem_monic(P({5}), P({-2, 1}));
    CHECK(q3.is_zero());
    CHECK(r3 == P({5}));
    CHECK_THROWS_AS(divrem_monic(P({1, 1}), P({1, 2})), DomainError);
    CHECK_THROWS_AS(divrem_monic(P({1, 1}), P({1})), DomainError);
  }

  TEST_CASE("content and primitive part") {
    CHECK(content(P({10, 4, 6})) == 2);
    CHECK(content(P({1, 1})) == 1);
    CHECK(content(P({-9, -3})) == 3);
    CHECK(primitive_part(P({-9, -3})) == P({-3, -1}));
    CHECK_THROWS_AS(content(IntPoly()), DomainError);
  }

  TEST_CASE("evaluate") {
    CHECK(evaluate(kPhi37, -2) == 1);
    CHECK(evaluate(IntPoly(), 17) == 0);
    CHECK(evaluate(P({1, 2, 3}), 10) == 321);
  }

  TEST_CASE("phi_expand and phi_assemble") {
    const IntPoly phi = P({1, 0, 1});
    const PhiExpansion e = phi_expand(phi * phi + P({3}), phi);
    REQUIRE(e.terms.size() == 3);
    CHECK(e.terms[0] == P({3}));
    CHECK(e.terms[1].is_zero());
    CHECK(e.terms[2] == P({1}));

    const PhiExpansion cube = phi_expand(P({0, 0, 0, 1}), phi);
    REQUIRE(cube.terms.size() == 2);
    CHECK(cube.terms[0] == P({0, -1}));
    CHECK(cube.terms[1] == P({0, 1}));
    CHECK(phi_assemble({phi, {P({0, -1}), P({0, 1})}}) == P({0, 0, 0, 1}));

    CHECK(phi_expand(IntPoly(), phi).is_zero());
    CHECK(phi_assemble({kPhi37, {P({5})}}) == P({5}));
    CHECK_THROWS_AS(phi_expand(P({1, 1}), P({1, 2})), DomainError);
  }

  TEST_CASE("properties on random inputs") {
    std::mt19937_64 rng(20261016);
    for (int iter = 0; iter < 400; ++iter) {
      const IntPoly f = random_poly(rng, 14, 50);
      const IntPoly g = random_nonzero_poly(rng, 8, 50);
      const IntPoly phi = random_monic(rng, 1 + iter % 4, 9);

      // Round trip and degree bound on every term.
      const PhiExpansion e = phi_expand(f, phi);
      CHECK(phi_assemble(e) == f);
      for (const auto& t : e.terms) CHECK(t.degree() < phi.degree());
      if (!e.is_zero()) CHECK_FALSE(e.terms.back().is_zero());

      // Uniqueness: terms already reduced come back unchanged.
      std::vector<IntPoly> terms;
      for (int i = 0; i < 4; ++i) {
        IntPoly t = random_poly(rng, phi.degree() - 1, 20);
        terms.push_back(t);
      }
      terms.push_back(P({1 + iter % 5}));
      const PhiExpansion again = phi_expand(phi_assemble({phi, terms}), phi);
      CHECK(again.terms == terms);

      // divrem identity.
      auto [q, r] = divrem_monic(f, phi);
      CHECK(q * phi + r == f);
      CHECK(r.degree() < phi.degree());

      if (!f.is_zero()) {
        CHECK(content(f * g) == content(f) * content(g));
        CHECK((f * g).degree() == f.degree() + g.degree());
      }
    }
  }

  TEST_CASE("parser: term forms") {
    CHECK(parse_poly("x^3-x+7") == kPhi37);
    CHECK(parse_poly("  x ^ 3 - x + 7 ") == kPhi37);
    CHECK(parse_poly("[7,-1,0,1]") == kPhi37);
    CHECK(parse_poly("[ 7 , -1 , 0 , 1 ]") == kPhi37);
    CHECK(parse_poly("2*x^2+3x-4") == P({-4, 3, 2}));
    CHECK(parse_poly("2x^2") == P({0, 0, 2}));
    CHECK(parse_poly("-x") == P({0, -1}));
    CHECK(parse_poly("+5") == P({5}));
    CHECK(parse_poly("0").is_zero());
    CHECK(parse_poly("[]").is_zero());
    CHECK(parse_poly("x + x") == P({0, 2}));
    CHECK(parse_poly("x^2 - x^2").is_zero());
    CHECK(parse_poly("123456789012345678901234567890") ==
          IntPoly::constant(Integer("123456789012345678901234567890")));
  }

  TEST_CASE("parser: errors name token and position") {
    try {
      parse_poly("x^3 - y");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.token() == "y");
      CHECK(e.position() == 6);
    }
    CHECK_THROWS_AS(parse_poly(""), ParseError);
    CHECK_THROWS_AS(parse_poly("x^"), ParseError);
    CHECK_THROWS_AS(parse_poly("3*"), ParseError);
    CHECK_THROWS_AS(parse_poly("x x"), ParseError);
    CHECK_THROWS_AS(parse_poly("x^-1"), ParseError);
    CHECK_THROWS_AS(parse_poly("[1,2"), ParseError);
    CHECK_THROWS_AS(parse_poly("[1,,2]"), ParseError);
    CHECK_THROWS_AS(parse_poly("x^99999999"), ParseError);
    CHECK_THROWS_AS(parse_poly("1 -"), ParseError);
  }

  TEST_CASE("parser: parse(print(f)) == f") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
      const IntPoly f = random_poly(rng, 10, 1000);
      CHECK(parse_poly(f.to_string()) == f);
    }
  }
}
