#include <doctest.h>

#include <random>

#include "equideg/error.hpp"
#include "equideg/poly.hpp"
#include "support.hpp"

using namespace equideg;
using namespace equideg::poly;

namespace {

const std::vector<std::string> xyz = {"x", "y", "z"};

MultiPoly random_poly(std::mt19937_64& rng, std::size_t nvars, int max_deg, int order) {
  std::uniform_int_distribution<int> e(0, max_deg), count(0, 5);
  std::vector<Term> terms;
  int n = count(rng);
  for (int t = 0; t < n; ++t) {
    Exponent x(nvars);
    for (auto& v : x) v = e(rng);
    terms.push_back({x, testing::random_cyclotomic(rng, order, 4, 3)});
  }
  return MultiPoly::from_terms(nvars, std::move(terms));
}

}  // namespace

TEST_CASE("degrevlex order") {
  CHECK(degrevlex_compare({2, 0, 0}, {1, 1, 0}) > 0);
  CHECK(degrevlex_compare({1, 1, 0}, {0, 2, 0}) > 0);
  CHECK(degrevlex_compare({0, 2, 0}, {1, 0, 1}) > 0);
  CHECK(degrevlex_compare({0, 0, 3}, {1, 1, 0}) > 0);
  CHECK(degrevlex_compare({1, 1, 0}, {1, 1, 0}) == 0);
}

TEST_CASE("parse and print") {
  MultiPoly f = parse("x^2 - y^2/2 + z^2 - x*y - y z", xyz);
  CHECK(f.total_degree() == 2);
  CHECK(f.is_homogeneous());
  CHECK(f.coefficient({0, 2, 0}) == Cyc(cyclo::Rational(-1, 2)));
  CHECK(f.coefficient({0, 1, 1}) == Cyc(-1));
  CHECK(f.leading().exp == Exponent{2, 0, 0});

  MultiPoly g = parse("(x + zeta(3) y)^2 - 3", xyz);
  CHECK(g.coefficient({1, 1, 0}) == 2 * Cyc::zeta(3));
  CHECK(g.coefficient({0, 2, 0}) == Cyc::zeta(3, 2));
  CHECK(!g.is_homogeneous());
  CHECK(parse(g.to_string(xyz), xyz) == g);

  CHECK(parse("2x", xyz) == parse("2*x", xyz));
  CHECK(parse("-x", xyz) == -MultiPoly::variable(3, 0));
  CHECK(parse("0", xyz).is_zero());
  CHECK(parse("x0*x1", default_names(2)) == MultiPoly::monomial({1, 1}, Cyc(1)));

  CHECK_THROWS_AS(parse("x/y", xyz), InputError);
  CHECK_THROWS_AS(parse("x +", xyz), InputError);
  CHECK_THROWS_AS(parse("w", xyz), InputError);
  CHECK_THROWS_AS(parse("(x", xyz), InputError);
  CHECK_THROWS_AS(parse("x/0", xyz), InputError);
}

TEST_CASE("round trip on random polynomials") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    MultiPoly f = random_poly(rng, 3, 3, t % 2 ? 12 : 5);
    CHECK(parse(f.to_string(xyz), xyz) == f);
  }
}

TEST_CASE("ring axioms and evaluation") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    MultiPoly a = random_poly(rng, 3, 2, 3), b = random_poly(rng, 3, 2, 4), c = random_poly(rng, 3, 2, 3);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    std::vector<Cyc> x = {testing::random_cyclotomic(rng, 3), testing::random_cyclotomic(rng, 4),
                          Cyc(static_cast<long>(t))};
    CHECK((a * b + c).evaluate(x) == a.evaluate(x) * b.evaluate(x) + c.evaluate(x));
    CHECK(a.pow(3).evaluate(x) == a.evaluate(x).pow(3));
  }
}

TEST_CASE("substitution and calculus") {
  MultiPoly f = parse("x^2 + y^2 - z^2", xyz);
  linalg::Matrix<Cyc> m(3, 3);
  m(0, 1) = Cyc(-1);
  m(1, 0) = Cyc(1);
  m(2, 2) = Cyc(1);
  CHECK(f.linear_substitute(m) == f);
  CHECK(parse("x*y", xyz).linear_substitute(m) == parse("-x*y", xyz));

  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    MultiPoly g = random_poly(rng, 3, 3, 3);
    linalg::Matrix<Cyc> a(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) a(i, j) = testing::random_cyclotomic(rng, 3, 3, 2);
    std::vector<Cyc> x = {Cyc(1), Cyc::zeta(3), Cyc(-2)};
    CHECK(g.linear_substitute(a).evaluate(x) == g.evaluate(a * x));
    std::vector<MultiPoly> subs;
    for (std::size_t i = 0; i < 3; ++i) {
      MultiPoly row(3);
      for (std::size_t j = 0; j < 3; ++j) row += MultiPoly::monomial(j == 0 ? Exponent{1, 0, 0} : j == 1 ? Exponent{0, 1, 0} : Exponent{0, 0, 1}, a(i, j));
      subs.push_back(row);
    }
    CHECK(g.compose(subs) == g.linear_substitute(a));
  }

  CHECK(f.dehomogenize(2) == parse("x^2 + y^2 - 1", {"x", "y"}));
  CHECK(f.dehomogenize(0) == parse("1 + y^2 - z^2", {"y", "z"}));
  CHECK(parse("x^3 y + 2 y z", xyz).derivative(1) == parse("x^3 + 2 z", xyz));
  CHECK(parse("zeta(3) x + zeta(4)", xyz).coefficient_order() == 12);
  CHECK(parse("x - 1/2", xyz).coefficient_order() == 1);
}
