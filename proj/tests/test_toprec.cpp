#include <doctest.h>

#include "hurwitz/toprec.hpp"

using namespace hurwitz;

namespace {

constexpr mpfr_prec_t kPrec = 256;

BigFloat tol() { return BigFloat::exp2(-100, kPrec); }

bool near(const BigComplex& z, const Rational& q) { return (z - BigComplex(q, kPrec)).abs() <= tol(); }

BigComplex power(const BigComplex& z, int e) {
  BigComplex r(1L, z.precision());
  for (int i = 0; i < e; ++i) r *= z;
  return r;
}

ComplexSeries x_local(int a, const BigComplex& alpha, const ComplexSeries& w) {
  // x(alpha + w) - x(alpha) = w - sum_{j>=1} binom(a+1, j) alpha^{a+1-j} w^j
  auto one = ComplexSeries::constant("s", w.truncation(), BigComplex(1L, kPrec));
  auto acc = w;
  auto p = one;
  for (int j = 1; j <= a + 1; ++j) {
    p = p * w;
    acc = acc - p * (power(alpha, a + 1 - j) * BigComplex(Rational(binomial(a + 1, j)), kPrec));
  }
  return acc;
}

}  // namespace

TEST_CASE("branch points are roots of the ramification polynomial") {
  for (int a = 1; a <= 4; ++a) {
    auto pts = branch_points(a, kPrec);
    CHECK(pts.size() == static_cast<std::size_t>(a));
    for (const auto& z : pts) {
      BigComplex r = BigComplex(1L, kPrec) - power(z, a) * BigComplex(long(a + 1), kPrec);
      CHECK(r.abs() <= BigFloat::exp2(-static_cast<long>(kPrec) + 8, kPrec));
    }
  }
  CHECK(near(branch_points(1, kPrec)[0], Rational(1, 2)));
  auto two = branch_points(2, kPrec);
  CHECK(near(two[0] * two[0], Rational(1, 3)));
  CHECK(near(two[0] + two[1], Rational(0)));
  auto three = branch_points(3, kPrec);
  for (const auto& z : three) CHECK(near(power(z, 3), Rational(1, 4)));
}

TEST_CASE("local conjugate") {
  const int D = 20;
  auto sb1 = local_conjugate(1, branch_points(1, kPrec)[0], D);
  CHECK(near(sb1[1], Rational(-1)));
  for (int i = 2; i <= D; ++i) CHECK(sb1[i].abs() <= tol());

  for (int a = 2; a <= 4; ++a) {
    for (const auto& alpha : branch_points(a, kPrec)) {
      auto sb = local_conjugate(a, alpha, D);
      CHECK(sb[0].is_zero());
      CHECK(near(sb[1], Rational(-1)));
      auto twice = sb.compose(sb);
      CHECK(near(twice[1], Rational(1)));
      for (int i = 2; i <= D; ++i) CHECK(twice[i].abs() <= tol());
      auto s = ComplexSeries::monomial("s", D, 1, BigComplex(1L, kPrec));
      auto residual = x_local(a, alpha, sb) - x_local(a, alpha, s);
      for (int i = 0; i <= D; ++i) CHECK(residual[i].abs() <= tol());
    }
  }
}

TEST_CASE("(0,1) expansion is exact") {
  CutJoinEngine engine;
  for (int a = 1; a <= 4; ++a) {
    TopologicalRecursion tr(a, kPrec, 1);
    const int M = 4 * a;
    auto c = tr.x_expansion(0, 1, M);
    for (int mu = 1; mu <= M; ++mu) CHECK(near(c[mu - 1], engine.hurwitz(a, 0, {mu}) * mu));
  }
}

TEST_CASE("(1,1) coefficients match cut-and-join") {
  struct Row {
    int a, mu;
    long value;
  };
  const Row rows[] = {{1, 1, 0},  {1, 2, 1},  {1, 3, 10}, {1, 4, 70}, {1, 5, 420}, {1, 6, 2310},
                      {2, 4, 25}, {2, 6, 336}, {3, 3, 5},  {3, 6, 154}};
  for (int a = 1; a <= 3; ++a) {
    TopologicalRecursion tr(a, kPrec, 1);
    auto c = tr.x_expansion(1, 1, 6);
    for (const auto& row : rows) {
      if (row.a == a) CHECK(near(c[row.mu - 1], Rational(row.value)));
    }
    CutJoinEngine engine;
    for (int mu = 1; mu <= 6; ++mu) CHECK(near(c[mu - 1], engine.hurwitz(a, 1, {mu}) * mu));
  }
}

TEST_CASE("(0,3) coefficients match cut-and-join, symmetric, vanish off divisibility") {
  CutJoinEngine engine;
  for (int a = 1; a <= 2; ++a) {
    TopologicalRecursion tr(a, kPrec, 1);
    const int M = 4;
    auto c = tr.x_expansion(0, 3, M);
    for (int i = 1; i <= M; ++i) {
      for (int j = 1; j <= M; ++j) {
        for (int k = 1; k <= M; ++k) {
          const auto& v = c[((i - 1) * M + (j - 1)) * M + (k - 1)];
          CHECK(near(v, engine.hurwitz(a, 0, {i, j, k}) * (i * j * k)));
          if ((i + j + k) % a != 0) CHECK(v.abs() <= tol());
        }
      }
    }
  }
}

TEST_CASE("correlator error estimate bounds a precision-doubling change") {
  auto ex = correlator(1, 1, 2, 6, kPrec);
  TopologicalRecursion doubled(2, 2 * kPrec, 1);
  auto ref = doubled.x_expansion(1, 1, 6);
  for (int mu = 1; mu <= 6; ++mu) {
    BigFloat change = (ref[mu - 1] - ex.at({mu})).abs();
    CHECK(change <= ex.error[mu - 1]);
  }
  CHECK_THROWS_AS(correlator(0, 2, 1, 4, kPrec), std::invalid_argument);
}

TEST_CASE("check_conjecture report") {
  CutJoinEngine engine;
  auto rep = check_conjecture(engine, 0, 1, 2, 8, kPrec);
  CHECK(rep.passed());
  for (const auto& e : rep.entries) CHECK(e.exact);
  auto j = rep.to_json();
  CHECK(j["entries"].size() == 8);
  CHECK(j["entries"][3]["cutjoin"] == "2");
  CHECK(j.contains("convention"));
  auto rep11 = check_conjecture(engine, 1, 1, 3, 6, kPrec);
  CHECK(rep11.passed());
}

TEST_CASE("spectral curve from the (0,1) free energy") {
  for (int a = 1; a <= 4; ++a) {
    auto rep = check_spectral_from_F01(a, 8);
    CHECK(rep.passed());
    CHECK(rep.leading == -1);
  }
}
