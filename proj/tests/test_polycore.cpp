#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "error.hpp"
#include "support.hpp"

using namespace llab;
using namespace llab::test;

TEST_CASE("variable sets reject duplicates and bad splits") {
  CHECK_THROWS_AS(VariableSet({"x", "x"}), Error);
  CHECK_THROWS_AS(VariableSet({}), Error);
  CHECK_THROWS_AS(VariableSet({"x", "y"}, 3), Error);
  VariableSet v({"x", "y", "u"}, 2);
  CHECK(v.x_count() == 2);
  CHECK(v.u_count() == 1);
  CHECK(v.in_u_block(2));
  CHECK_FALSE(v.in_u_block(1));
  CHECK(v.dual_name(0) == "X");
  CHECK(v.dual_index_of("U") == 2);
}

TEST_CASE("parse the Ikeda form") {
  const Poly f = ikeda();
  CHECK(f.degree() == 5);
  CHECK(f.term_count() == 3);
  CHECK(f.is_homogeneous());
}

TEST_CASE("parse zero and coefficients") {
  CHECK(poly("0", "x,y").is_zero());
  const Poly f = poly("2*x^2 - x*y", "x,y");
  REQUIRE(f.term_count() == 2);
  CHECK(f.coefficient(Monomial({2, 0})) == 2);
  CHECK(f.coefficient(Monomial({1, 1})) == -1);
  CHECK(poly("6/4*x", "x").coefficient(Monomial(std::vector<unsigned>{1})) == Rational(3, 2));
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(poly("x^", "x"), ParseError);
  CHECK_THROWS_AS(poly("x + w", "x,y"), ParseError);
  CHECK_THROWS_AS(poly("x^2 + y", "x,y"), Error);
  try {
    poly("x + * y", "x,y");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() > 0);
  }
}

TEST_CASE("printing round-trips through the parser") {
  for (const auto& text : {"x0*u1^3*u2 + x1*u1*u2^3 + x0^3*x1^2", "-1/2*x0^2 + 3*x1*u2", "0"}) {
    const Poly f = poly(text, "x0,x1,u1,u2");
    CHECK(poly(f.to_string(), "x0,x1,u1,u2") == f);
  }
}

TEST_CASE("diff_apply matches hand differentiation") {
  const Poly f = ikeda();
  CHECK(diff_apply(parse_diffop("X0*U2", f.vars_ptr()), f) == poly("u1^3", "x0,x1,u1,u2", 2));
  // d/du1 (x1 u1 u2^3) = x1 u2^3, then d/dx1 gives u2^3.
  CHECK(diff_apply(parse_diffop("X1*U1", f.vars_ptr()), f) == poly("u2^3", "x0,x1,u1,u2", 2));
  const Poly g = poly("x^2", "x");
  CHECK(diff_apply(parse_diffop("X^2", g.vars_ptr()), g) == Poly::constant(g.vars_ptr(), 2));
  CHECK(diff_apply(parse_diffop("X^3", g.vars_ptr()), g).is_zero());
}

TEST_CASE("diff ops compose") {
  const Poly f = ikeda();
  const DiffOp a = parse_diffop("X0", f.vars_ptr());
  const DiffOp b = parse_diffop("U2", f.vars_ptr());
  CHECK(diff_apply(a * b, f) == diff_apply(a, diff_apply(b, f)));
}

TEST_CASE("mono_basis sizes and order") {
  const auto b = mono_basis(2, 2);
  REQUIRE(b.size() == 3);
  CHECK(b[0] == Monomial({2, 0}));
  CHECK(b[1] == Monomial({1, 1}));
  CHECK(b[2] == Monomial({0, 2}));
  CHECK(mono_basis(4, 2).size() == 10);
  CHECK(mono_basis(5, 0).size() == 1);
  CHECK(mono_basis(6, 3).size() == binomial(8, 3).get_ui());
}

TEST_CASE("eval_poly") {
  const std::vector<Rational> p12{1, 2};
  CHECK(eval_poly(poly("x^2 + y^2", "x,y"), p12) == 5);
  CHECK(eval_poly(poly("0", "x,y"), p12) == 0);
  const std::vector<Rational> ones{1, 1, 1, 1};
  CHECK(eval_poly(ikeda(), ones) == 3);
}

TEST_CASE("linear_change") {
  const Poly f = poly("x^2 + x*y", "x,y");
  CHECK(linear_change(f, RationalMatrix::identity(2)) == f);
  RationalMatrix swap(2, 2);
  swap(0, 1) = 1;
  swap(1, 0) = 1;
  CHECK(linear_change(poly("x^2", "x,y"), swap) == poly("y^2", "x,y"));
  RationalMatrix singular(2, 2);
  CHECK_THROWS_AS(linear_change(f, singular), Error);
}

TEST_CASE("ring operations") {
  const Poly x = poly("x", "x,y");
  const Poly y = poly("y", "x,y");
  CHECK((x + y).pow(2) == poly("x^2 + 2*x*y + y^2", "x,y"));
  CHECK((x - x).is_zero());
  CHECK((x * y) * Rational(1, 3) == poly("1/3*x*y", "x,y"));
}
