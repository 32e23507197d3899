#ifndef HURWITZ_WAVEFUNCTION_HPP
#define HURWITZ_WAVEFUNCTION_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "hurwitz/cutjoin.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz {

/// Sum over compositions (mu_1..mu_n) with |mu| <= X of H_{g,n}(mu) x^{|mu|}.
PowerSeries<Rational> free_energy_diagonal(CutJoinEngine& engine, int a, int g, int n, int X);

/// Highest x-degree fixed by the terms k <= K: a(K+1) - 1.
inline int wavefunction_x_order(int a, int K) { return a * (K + 1) - 1; }

/// 1 + sum_{k<=K} x^{ak} / (k! a^k hbar^k) prod_{j=1}^{ak-1} 1/(1 - j hbar),
/// retained through hbar^R. The x^{ak} coefficient has floor -k.
BiSeriesXH wavefunction_closed(int a, int K, int R);

/// exp of sum_{g,n} hbar^{2g-2+n}/n! F_{g,n}(x,...,x), with the same x and
/// hbar truncation as wavefunction_closed.
BiSeriesXH wavefunction_from_numbers(CutJoinEngine& engine, int a, int K, int R);

/// [x^{a-1} + prod_{j=0}^{a-1} (1 + x y + j hbar) y] Z with y = -hbar d/dx.
/// The factors are applied in the order given by `factor_order` (default
/// j = a-1 first, i.e. rightmost).
BiSeriesXH apply_quantum_curve(int a, const BiSeriesXH& Z, std::vector<int> factor_order = {});

/// Degrees below which a residual must vanish for Z truncated at K terms.
inline int qcurve_boundary_degree(int a, int K) { return a * (K + 1) - 1; }

/// Coefficient-by-coefficient comparison over the union of floors up to
/// min(top); returns human-readable differences.
std::vector<std::string> compare_bi_series(const BiSeriesXH& lhs, const BiSeriesXH& rhs);

struct QCurveReport {
  int a = 1, K = 0, R = 0;
  int boundary = 0;
  int checked_x_order = 0;
  std::vector<std::string> nonzero;  // "x^d hbar^e: c" below the boundary
  bool passed() const { return nonzero.empty(); }
  nlohmann::json to_json() const;
};

QCurveReport check_quantum_curve(int a, int K, int R);

/// (y x - x y) applied to x^d, for each d <= max_degree, equals -hbar x^d.
bool commutator_check(int max_degree, int R);

struct StirlingReport {
  int K = 0, R = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
  nlohmann::json to_json() const;
};

/// sum_N S(N,k) hbar^{N-k} = prod_{j<=k} 1/(1 - j hbar) through hbar^R for
/// every k <= K.
StirlingReport stirling_identity_check(int K, int R);
/// monotone m-sequence counts in S_d equal S(d+m-1, d-1) for d <= max_d, m <= max_m.
StirlingReport stirling_enumeration_check(int max_d, int max_m);

/// [x^d hbar^e] Z versus the oracle's count of all (not necessarily
/// transitive) monotone tuples, for x-degree <= max_degree.
std::vector<std::string> disconnected_spot_check(int a, int K, int R, int max_degree);

}  // namespace hurwitz

#endif  // HURWITZ_WAVEFUNCTION_HPP
