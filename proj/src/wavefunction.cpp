#include "hurwitz/wavefunction.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hurwitz/factorisation.hpp"
#include "hurwitz/permutation.hpp"

namespace hurwitz {

namespace {

constexpr const char* kHbar = "hbar";

using Laurent = LaurentSeries<Rational>;

// Number of distinct orderings of the parts.
BigInt compositions_of(const Partition& p) {
  std::map<int, int> mult;
  for (int x : p) ++mult[x];
  BigInt r = factorial(static_cast<unsigned>(p.size()));
  for (const auto& [part, c] : mult) r /= factorial(static_cast<unsigned>(c));
  return r;
}

// prod_{j=1}^{n} (1 - j hbar), retained through hbar^order.
Laurent falling_product(int n, int order) {
  std::vector<Rational> c(order + 1, Rational(0));
  c[0] = 1;
  for (int j = 1; j <= n; ++j) {
    for (int e = order; e >= 1; --e) c[e] -= j * c[e - 1];
  }
  return Laurent(kHbar, 0, std::move(c));
}

// x y = -hbar x d/dx: the x^d coefficient is multiplied by -d hbar; the
// x-truncation is unchanged.
BiSeriesXH euler(const BiSeriesXH& f) {
  auto r = f;
  for (int d = 0; d <= f.x_truncation(); ++d) r[d] = f[d].shifted(1) * Rational(-d);
  return r;
}

}  // namespace

PowerSeries<Rational> free_energy_diagonal(CutJoinEngine& engine, int a, int g, int n, int X) {
  auto f = PowerSeries<Rational>::zero("x", X, Rational(0));
  for (int d = std::max(n, 1); d <= X; ++d) {
    if (d % a != 0) continue;
    Rational c = 0;
    for (const auto& p : partitions_of(d)) {
      if (static_cast<int>(p.size()) != n) continue;
      c += engine.hurwitz(a, g, p) * compositions_of(p);
    }
    f[d] = c;
  }
  return f;
}

BiSeriesXH wavefunction_closed(int a, int K, int R) {
  const int X = wavefunction_x_order(a, K);
  std::vector<Laurent> terms;
  for (int d = 0; d <= X; ++d) {
    if (d == 0) {
      std::vector<Rational> c(R + 1, Rational(0));
      c[0] = 1;
      terms.emplace_back(kHbar, 0, std::move(c));
    } else if (d % a != 0) {
      terms.push_back(Laurent::zero(kHbar, 0, R, Rational(0)));
    } else {
      const int k = d / a;
      BigInt denom = factorial(k);
      for (int i = 0; i < k; ++i) denom *= a;
      const Laurent inv = laurent_invert(falling_product(a * k - 1, R + k), R + k);
      Rational scale(1, denom);
      scale.canonicalize();
      terms.push_back(inv.shifted(-k) * scale);
    }
  }
  return BiSeriesXH(std::move(terms));
}

BiSeriesXH wavefunction_from_numbers(CutJoinEngine& engine, int a, int K, int R) {
  const int X = wavefunction_x_order(a, K);
  // exp(S) up to hbar^R needs S through hbar^{R+K-1}: at most K factors of
  // S contribute to x-degree <= X and each has hbar-floor -1.
  const int S_top = R + K - 1;
  auto S = BiSeriesXH::zero(X, -1, S_top);
  for (int e = -1; e <= S_top; ++e) {
    for (int n = 1; n <= X; ++n) {
      if ((e + 2 - n) < 0 || (e + 2 - n) % 2 != 0) continue;
      const int g = (e + 2 - n) / 2;
      const auto F = free_energy_diagonal(engine, a, g, n, X);
      const Rational scale(1, factorial(n));
      for (int d = 1; d <= X; ++d) {
        if (F[d] != 0) S[d].at(e) += F[d] * scale;
      }
    }
  }
  auto one = BiSeriesXH::zero(X, 0, R);
  one[0].at(0) = 1;
  BiSeriesXH Z = one;
  BiSeriesXH power = S;
  const int max_terms = X / a;
  for (int j = 1; j <= max_terms; ++j) {
    if (j > 1) power = power * S;
    Z = Z + (power * Rational(1, factorial(j))).truncated_h(R);
  }
  return Z.truncated_h(R);
}

BiSeriesXH apply_quantum_curve(int a, const BiSeriesXH& Z, std::vector<int> factor_order) {
  if (factor_order.empty()) {
    for (int j = a - 1; j >= 0; --j) factor_order.push_back(j);
  }
  BiSeriesXH W = Z.y_hat();
  for (int j : factor_order) {
    W = W + euler(W) + W.times_hbar(1) * Rational(j);
  }
  return Z.times_x(a - 1) + W;
}

std::vector<std::string> compare_bi_series(const BiSeriesXH& lhs, const BiSeriesXH& rhs) {
  std::vector<std::string> diffs;
  const int X = std::min(lhs.x_truncation(), rhs.x_truncation());
  for (int d = 0; d <= X; ++d) {
    const auto& p = lhs[d];
    const auto& q = rhs[d];
    const int lo = std::min(p.floor(), q.floor());
    const int hi = std::min(p.top(), q.top());
    for (int e = lo; e <= hi; ++e) {
      if (p.coeff(e) != q.coeff(e)) {
        diffs.push_back("x^" + std::to_string(d) + " hbar^" + std::to_string(e) + ": " + to_string(p.coeff(e)) +
                        " vs " + to_string(q.coeff(e)));
      }
    }
  }
  return diffs;
}

nlohmann::json QCurveReport::to_json() const {
  return {{"input", {{"a", a}, {"xorder", K}, {"horder", R}}},
          {"boundary_degree", boundary},
          {"checked_x_order", checked_x_order},
          {"passed", passed()},
          {"nonzero", nonzero}};
}

QCurveReport check_quantum_curve(int a, int K, int R) {
  QCurveReport rep;
  rep.a = a;
  rep.K = K;
  rep.R = R;
  rep.boundary = qcurve_boundary_degree(a, K);
  if (rep.boundary <= 0) {
    // Nothing lies below the boundary (a = 1, K = 0).
    rep.checked_x_order = -1;
    return rep;
  }
  const auto residual = apply_quantum_curve(a, wavefunction_closed(a, K, R));
  rep.checked_x_order = std::min(residual.x_truncation(), rep.boundary - 1);
  for (int d = 0; d <= rep.checked_x_order; ++d) {
    const auto& t = residual[d];
    for (int e = t.floor(); e <= std::min(t.top(), R); ++e) {
      if (t.coeff(e) != 0) {
        rep.nonzero.push_back("x^" + std::to_string(d) + " hbar^" + std::to_string(e) + ": " + to_string(t.coeff(e)));
      }
    }
  }
  if (rep.checked_x_order < rep.boundary - 1) rep.nonzero.push_back("residual truncated before the boundary degree");
  return rep;
}

bool commutator_check(int max_degree, int R) {
  for (int d = 0; d <= max_degree; ++d) {
    auto mono = BiSeriesXH::zero(max_degree + 2, 0, R);
    mono[d].at(0) = 1;
    const auto lhs = mono.times_x().y_hat() - mono.y_hat().times_x();
    const auto rhs = mono.times_hbar(1) * Rational(-1);
    if (!compare_bi_series(lhs, rhs).empty()) return false;
  }
  return true;
}

nlohmann::json StirlingReport::to_json() const {
  return {{"input", {{"K", K}, {"R", R}}}, {"passed", passed()}, {"failures", failures}};
}

StirlingReport stirling_identity_check(int K, int R) {
  StirlingReport rep;
  rep.K = K;
  rep.R = R;
  for (int k = 1; k <= K; ++k) {
    const Laurent product = laurent_invert(falling_product(k, R), R);
    for (int e = 0; e <= R; ++e) {
      const Rational s(stirling2(static_cast<unsigned>(k + e), static_cast<unsigned>(k)));
      if (product.coeff(e) != s) {
        rep.failures.push_back("K=" + std::to_string(k) + " hbar^" + std::to_string(e) + ": " +
                               to_string(product.coeff(e)) + " vs S=" + to_string(s));
      }
    }
  }
  return rep;
}

StirlingReport stirling_enumeration_check(int max_d, int max_m) {
  StirlingReport rep;
  rep.K = max_d;
  rep.R = max_m;
  for (int d = 1; d <= max_d; ++d) {
    for (int m = 0; m <= max_m; ++m) {
      const BigInt counted(static_cast<unsigned long>(monotone_sequence_count(d, m)));
      const BigInt expected = stirling2(static_cast<unsigned>(d + m - 1), static_cast<unsigned>(d - 1));
      if (counted != expected) {
        rep.failures.push_back("d=" + std::to_string(d) + " m=" + std::to_string(m) + ": " + counted.get_str() +
                               " vs " + expected.get_str());
      }
    }
  }
  return rep;
}

std::vector<std::string> disconnected_spot_check(int a, int K, int R, int max_degree) {
  std::vector<std::string> diffs;
  const auto Z = wavefunction_closed(a, K, R);
  for (int d = a; d <= std::min(max_degree, Z.x_truncation()); d += a) {
    const int k = d / a;
    // hbar^e with e = m - k, m the number of transpositions
    const int max_m = R + k;
    const auto census = run_census(Flavor::MonotoneOrbifold, a, d, max_m, CountMode::Free, {std::max(d, 8), max_m});
    for (int m = 0; m <= max_m; ++m) {
      BigInt all = 0;
      for (const auto& p : partitions_of(d)) all += census.tuples(m, p, false);
      Rational expected(all, factorial(d));
      expected.canonicalize();
      const Rational got = Z[d].coeff(m - k);
      if (got != expected) {
        diffs.push_back("x^" + std::to_string(d) + " hbar^" + std::to_string(m - k) + ": " + to_string(got) + " vs " +
                        to_string(expected));
      }
    }
  }
  return diffs;
}

}  // namespace hurwitz
