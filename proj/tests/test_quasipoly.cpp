#include <doctest.h>

#include "hurwitz/quasipoly.hpp"

using namespace hurwitz;

TEST_CASE("c factor parts") {
  auto p = c_factor_parts(1, 5);
  CHECK(p.binomial == binomial(10, 5));
  CHECK(p.exponent == 0);
  p = c_factor_parts(2, 3);
  CHECK(p.binomial == 4);
  CHECK(p.exponent == Rational(1, 2));
  p = c_factor_parts(2, 4);
  CHECK(p.binomial == 15);
  CHECK(p.exponent == 0);
}

TEST_CASE("difference checker on synthetic polynomials") {
  // f(x, y) = x^2 y - 3 y + 7 on a 5 x 5 grid: total degree 3.
  SampleGrid grid{2, 5, {}};
  for (int x = 0; x < 5; ++x) {
    for (int y = 0; y < 5; ++y) grid.values.push_back(Rational(x * x * y - 3 * y + 7));
  }
  CHECK(!nonzero_difference(grid, 4));
  auto w = nonzero_difference(grid, 3);
  REQUIRE(w);
  CHECK(w->orders == std::vector<int>{2, 1});
  CHECK(difference_degree(grid) == 3);

  SampleGrid zero{3, 3, std::vector<Rational>(27, Rational(0))};
  CHECK(difference_degree(zero) == -1);

  // A non-polynomial 1D sample: degree cannot be certified on 4 points.
  SampleGrid wild{1, 4, {Rational(1), Rational(2), Rational(4), Rational(8)}};
  CHECK(!difference_degree(wild));
}

TEST_CASE("quasi-polynomiality for a = 1") {
  CutJoinEngine engine;
  auto r03 = quasipoly_check(engine, 1, 0, 3, 6);
  CHECK(r03.passed());
  REQUIRE(r03.classes.size() == 1);
  CHECK(r03.classes[0].degree == 0);

  auto r11 = quasipoly_check(engine, 1, 1, 1, 8);
  CHECK(r11.passed());
  CHECK(r11.classes[0].degree == 1);
}

TEST_CASE("quasi-polynomiality evidence for a = 2") {
  CutJoinEngine engine;
  auto rep = quasipoly_check(engine, 2, 0, 3, 8);
  CHECK(rep.passed());
  for (const auto& c : rep.classes) CHECK(c.degree <= 0);
  auto j = rep.to_json();
  CHECK(j["expected_degree"] == 0);
  CHECK(j["passed"] == true);
}

TEST_CASE("grid too small") {
  CutJoinEngine engine;
  CHECK_THROWS_AS(quasipoly_check(engine, 1, 1, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(quasipoly_check(engine, 1, 0, 2, 8), std::invalid_argument);
}
