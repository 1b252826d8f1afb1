#include <doctest.h>

#include <sstream>

#include "ppart/errors.hpp"
#include "ppart/poly.hpp"
#include "ppart/rational.hpp"

using namespace ppart;

TEST_CASE("rational parsing and formatting") {
  CHECK(*parse_rational("3/4") == Rat(3, 4));
  CHECK(*parse_rational("-2") == Rat(-2));
  CHECK(*parse_rational("0.25") == Rat(1, 4));
  CHECK(*parse_rational("-3.25") == Rat(-13, 4));
  CHECK(!parse_rational("3/"));
  CHECK(!parse_rational("x"));
  CHECK(!parse_rational(""));
  CHECK(format_rational(Rat(6, 4)) == "3/2");
  CHECK(format_rational(Rat(-8, 2)) == "-4");
  CHECK(*parse_rational(format_rational(Rat(-22, 7))) == Rat(-22, 7));
}

TEST_CASE("rational from double is exact") {
  CHECK(rational_from_double(0.5) == Rat(1, 2));
  CHECK(rational_from_double(-0.75) == Rat(-3, 4));
  CHECK(rational_from_double(3.0) == Rat(3));
  const double x = 0.1;
  CHECK(to_double(rational_from_double(x)) == x);
}

TEST_CASE("rational_approx bounds the denominator") {
  const Rat a = rational_approx(3.14159265358979, Int(1000));
  CHECK(denominator(a) <= 1000);
  CHECK(abs(to_double(a) - 3.14159265358979) < 1e-3);
  CHECK(rational_approx(0.5, Int(10)) == Rat(1, 2));
}

TEST_CASE("polynomial arithmetic and degree") {
  const auto x = Polynomial::variable(2, 0);
  const auto y = Polynomial::variable(2, 1);
  const auto f = x * x + y * Polynomial::constant(2, Rat(-3));
  CHECK(f.degree() == 2);
  CHECK(evaluate(f, Point{{Rat(2), Rat(1)}}) == Rat(1));
  CHECK(sign_at(f, Point{{Rat(1), Rat(2)}}) == -1);
  CHECK(sign_at(f, Point{{Rat(3), Rat(3)}}) == 0);

  const Polynomial zero = f - f;
  CHECK(zero.is_zero());
  CHECK(!zero.degree().has_value());

  // Cancellation inside a sum never leaves a stored zero term.
  const Polynomial g = x * x - x * x + y;
  CHECK(g.terms().size() == 1);
}

TEST_CASE("product of polynomials") {
  const auto x = Polynomial::variable(1, 0);
  std::vector<Polynomial> fs{x, x + Polynomial::constant(1, Rat(1))};
  const auto p = product(fs, 1);
  CHECK(p.degree() == 2);
  CHECK(evaluate(p, Point{{Rat(2)}}) == Rat(6));
  CHECK(product({}, 3) == Polynomial::constant(3, Rat(1)));
}

TEST_CASE("polynomial text round trip") {
  const auto x = Polynomial::variable(2, 0);
  const auto y = Polynomial::variable(2, 1);
  const auto f =
      x * y * Polynomial::constant(2, Rat(-7, 3)) + y + Polynomial::constant(2, Rat(1, 2));
  const auto back = parse_polynomial_string(serialize_polynomial(f));
  CHECK(back == f);
}

TEST_CASE("polynomial parse accepts decimals and comments") {
  const auto f = parse_polynomial_string("# conic\n1 2 0\n-1 0 1\n");
  CHECK(f.dimension() == 2);
  CHECK(sign_at(f, Point{{Rat(3), Rat(9)}}) == 0);
  const auto g = parse_polynomial_string("0.5 1\n");
  CHECK(evaluate(g, Point{{Rat(4)}}) == Rat(2));
}

TEST_CASE("polynomial parse errors") {
  CHECK_THROWS_AS(parse_polynomial_string("abc 1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_polynomial_string("1 2\n3 1 1\n"), ParseError);
}

TEST_CASE("polynomial list round trip") {
  std::istringstream in("1 1 0\n\n1 0 1\n-1 0 0\n");
  const auto fs = parse_polynomial_list(in);
  CHECK(fs.size() == 2);
  CHECK(fs[0].degree() == 1);
  const auto text = serialize_polynomial_list(fs);
  std::istringstream again(text);
  CHECK(parse_polynomial_list(again).size() == 2);
}

TEST_CASE("point files") {
  std::istringstream in("0 0\n1/2 -3\n0.25 7\n");
  const auto ps = parse_points(in);
  CHECK(ps.dimension == 2);
  CHECK(ps.points.size() == 3);
  CHECK(ps.points[1].coordinates[0] == Rat(1, 2));
  CHECK(ps.points[2].coordinates[0] == Rat(1, 4));
  CHECK(!ps.has_duplicates());

  std::istringstream round(serialize_points(ps));
  CHECK(parse_points(round).points == ps.points);

  PointSet dup = ps;
  dup.points.push_back(ps.points[0]);
  CHECK(dup.has_duplicates());
}

TEST_CASE("dimension mismatch is rejected") {
  const auto f = Polynomial::variable(2, 0);
  CHECK_THROWS_AS(evaluate(f, Point{{Rat(1)}}), PrecondError);
}
