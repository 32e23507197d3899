#include <doctest.h>

#include "hurwitz/series_io.hpp"
#include "hurwitz/wavefunction.hpp"

using namespace hurwitz;

namespace {

LaurentSeries<Rational> h_series(int floor, std::vector<Rational> c) { return {"hbar", floor, std::move(c)}; }

}  // namespace

TEST_CASE("diagonal free energies") {
  CutJoinEngine e;
  for (int a = 1; a <= 3; ++a) {
    auto f = free_energy_diagonal(e, a, 0, 1, a);
    CHECK(f[a] == Rational(1, a));
    for (int d = 0; d < a; ++d) CHECK(f[d] == 0);
  }
  auto f2 = free_energy_diagonal(e, 1, 0, 2, 2);
  CHECK(f2[2] == 1);
  CHECK(f2[1] == 0);
  auto f3 = free_energy_diagonal(e, 2, 0, 1, 4);
  CHECK(f3[2] == make_rational(1, 2));
  CHECK(f3[4] == make_rational(1, 2));
  CHECK(f3[3] == 0);
}

TEST_CASE("closed form wave function") {
  auto Z1 = wavefunction_closed(1, 3, 3);
  CHECK(Z1[0].coeff(0) == 1);
  CHECK(Z1[1].floor() == -1);
  CHECK(Z1[1].coeff(-1) == 1);
  CHECK(Z1[1].coeff(0) == 0);
  // (1/(2 hbar^2)) (1 - hbar)^{-1}
  for (int e = -2; e <= 3; ++e) CHECK(Z1[2].coeff(e) == make_rational(1, 2));
  auto Z2 = wavefunction_closed(2, 2, 3);
  CHECK(Z2[1].coeff(0) == 0);
  for (int e = -1; e <= 3; ++e) CHECK(Z2[2].coeff(e) == make_rational(1, 2));
  for (int a = 1; a <= 3; ++a) {
    auto Z = wavefunction_closed(a, 3, 2);
    for (int k = 1; k <= 3; ++k) {
      CHECK(Z[a * k].floor() == -k);
      CHECK(Z[a * k].coeff(-k) != 0);
    }
  }
}

TEST_CASE("both pipelines agree") {
  CutJoinEngine e;
  for (auto [a, K, R] : std::vector<std::tuple<int, int, int>>{{1, 3, 4}, {2, 2, 4}, {3, 2, 3}, {1, 2, 2}}) {
    const auto closed = wavefunction_closed(a, K, R);
    const auto numbers = wavefunction_from_numbers(e, a, K, R);
    CAPTURE(a);
    CHECK(numbers[0].coeff(0) == 1);
    CHECK(compare_bi_series(closed, numbers).empty());
  }
}

TEST_CASE("quantum curve annihilates the wave function") {
  for (int a = 1; a <= 3; ++a) {
    for (int K = 0; K <= 4; ++K) {
      auto rep = check_quantum_curve(a, K, 5);
      CAPTURE(rep.to_json().dump());
      CHECK(rep.passed());
    }
  }
  auto rep = check_quantum_curve(1, 4, 4);
  CHECK(rep.boundary == 4);
  CHECK(check_quantum_curve(2, 3, 4).boundary == 7);
  CHECK(check_quantum_curve(1, 0, 3).checked_x_order == -1);
}

TEST_CASE("Z = 1 is not annihilated") {
  auto one = BiSeriesXH::zero(1, 0, 3);
  one[0].at(0) = 1;
  auto r = apply_quantum_curve(1, one);
  CHECK(r[0].coeff(0) == 1);
  CHECK_FALSE(r.is_zero());
}

TEST_CASE("factor order does not matter") {
  const auto Z = wavefunction_closed(3, 2, 3);
  CHECK(compare_bi_series(apply_quantum_curve(3, Z, {0, 1, 2}), apply_quantum_curve(3, Z, {2, 0, 1})).empty());
  // a deliberately perturbed wave function is caught
  auto bad = Z;
  bad[3].at(0) += 1;
  CHECK_FALSE(apply_quantum_curve(3, bad).truncated(7).is_zero());
}

TEST_CASE("commutator") {
  CHECK(commutator_check(6, 3));
}

TEST_CASE("Stirling identity") {
  CHECK(stirling_identity_check(6, 8).passed());
  auto inv = laurent_invert(h_series(0, {1, -1, 0, 0}), 3);
  for (int e = 0; e <= 3; ++e) CHECK(inv.coeff(e) == 1);
  auto inv2 = laurent_invert(h_series(0, {1, -3, 2, 0, 0}), 3);
  CHECK(inv2.coeff(0) == 1);
  CHECK(inv2.coeff(1) == 3);
  CHECK(inv2.coeff(2) == 7);
  CHECK(inv2.coeff(3) == 15);
  CHECK(stirling_enumeration_check(4, 4).passed());
}

TEST_CASE("disconnected spot check") {
  for (int a = 1; a <= 2; ++a) CHECK(disconnected_spot_check(a, 4, 3, 4).empty());
}

TEST_CASE("json shape") {
  auto j = to_json(wavefunction_closed(1, 1, 1));
  CHECK(j.contains("coefficients"));
}
