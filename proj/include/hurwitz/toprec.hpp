#ifndef HURWITZ_TOPREC_HPP
#define HURWITZ_TOPREC_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hurwitz/big_float.hpp"
#include "hurwitz/cutjoin.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz {

using ComplexSeries = PowerSeries<BigComplex>;
using ComplexLaurent = LaurentSeries<BigComplex>;

/// Conventions used throughout: omega_{0,1} = -y dx, omega_{0,2} =
/// dz1 dz2/(z1-z2)^2, and the kernel primitive of omega_{0,2} is taken as
/// dz1/(z1 - z) (the integration constant cancels in every residue), so
/// K(z1, z) = -dz1 / ((z1 - z)(y(z) - y(zbar)) x'(z) dz).
extern const char* const kTopRecConvention;

/// Roots of 1 - (a+1) z^a: rho * exp(2 pi i j/a) with rho = (a+1)^{-1/a}.
std::vector<BigComplex> branch_points(int a, mpfr_prec_t prec);

/// x(z) = z - z^{a+1} and y(z) = z^{a-1}/(z^a - 1) as series at z = 0.
PowerSeries<Rational> curve_x_series(int a, int order);
PowerSeries<Rational> curve_y_series(int a, int order);

/// Local data at a branch point alpha, in the coordinate z = alpha + s.
struct BranchFrame {
  BigComplex alpha;
  ComplexSeries u;            // sbar = s * u(s), u(0) = -1
  ComplexSeries sbar;         // through s^order
  ComplexSeries sbar_prime;   // d sbar / ds
  ComplexLaurent W;           // 1/((y(alpha+s) - y(alpha+sbar)) x'(alpha+s)), floor -2
  int order = 0;
};

/// sbar(s) with x(alpha + sbar) = x(alpha + s), sbar = -s + O(s^2), through
/// s^order. Newton iteration on u = sbar/s applied to
/// sum_{j>=2} c_j s^{j-2} (1 + u + ... + u^{j-1}) = 0, where c_j are the
/// Taylor coefficients of x at alpha.
ComplexSeries local_conjugate(int a, const BigComplex& alpha, int order);
BranchFrame make_branch_frame(int a, const BigComplex& alpha, int order);

/// omega_{g,n} as a tensor of coefficients on prod_i dz_i/(z_i - beta)^j,
/// beta a branch point, 1 <= j <= max_order. Slot index b = beta * max_order + j - 1.
struct PoleTensor {
  int g = 0, n = 0, a = 1;
  int max_order = 0;
  std::vector<BigComplex> data;
  int slot_size() const { return a * max_order; }
  const BigComplex& at(const std::vector<int>& slots) const;
};

/// Pole-order bound 6g - 4 + 2n for stable (g,n).
inline int pole_order_bound(int g, int n) { return 6 * g - 4 + 2 * n; }

class TopologicalRecursion {
 public:
  /// max_euler bounds 2g - 2 + n for the correlators this instance computes.
  TopologicalRecursion(int a, mpfr_prec_t prec, int max_euler = 3);

  int a() const { return a_; }
  mpfr_prec_t precision() const { return prec_; }
  const std::vector<BranchFrame>& frames() const { return frames_; }

  /// Stable (g,n) only.
  const PoleTensor& omega(int g, int n);
  /// Coefficients c[mu] of prod x_i^{mu_i-1} dx_i for mu_i <= M, flattened
  /// with mu_1 slowest. (0,1) is expanded from -y dx directly.
  std::vector<BigComplex> x_expansion(int g, int n, int M);

 private:
  PoleTensor compute(int g, int n);
  const std::vector<ComplexSeries>& x_basis(int M);

  int a_;
  mpfr_prec_t prec_;
  int max_euler_;
  int frame_order_;
  std::vector<BranchFrame> frames_;
  std::map<std::pair<int, int>, PoleTensor> memo_;
  std::map<int, std::vector<ComplexSeries>> x_basis_;  // keyed by M
};

struct CorrelatorExpansion {
  int g = 0, n = 0, a = 1, M = 0;
  mpfr_prec_t prec = kDefaultPrecision;
  std::vector<BigComplex> coeffs;
  std::vector<BigFloat> error;  // estimated absolute error per entry
  std::size_t flat(const std::vector<int>& mu) const;
  const BigComplex& at(const std::vector<int>& mu) const { return coeffs[flat(mu)]; }
};

/// Runs the recursion at prec and prec + 64; the error estimate per entry is
/// 2|difference| + 2^{8-prec} max(1, |c|). Rejects (0,2).
CorrelatorExpansion correlator(int g, int n, int a, int M, mpfr_prec_t prec);

struct ConjectureEntry {
  std::vector<int> mu;
  BigComplex tr;
  Rational cutjoin;
  BigFloat abs_err;
  BigFloat error_estimate;
  bool reconstructed = false;
  bool exact = false;
  bool within_tolerance = false;
};

struct ConjectureReport {
  int g = 0, n = 0, a = 1, M = 0;
  mpfr_prec_t prec = kDefaultPrecision;
  std::vector<ConjectureEntry> entries;
  std::vector<std::string> problems;  // symmetry, imaginary parts, truncation
  bool passed() const;
  nlohmann::json to_json() const;
};

/// Compares prod mu_i H_{g,n}(mu) from the engine with the recursion for all
/// mu_1 <= ... <= mu_n <= M, with tolerance 2^{-prec/2} and rational
/// reconstruction up to denominator 10^12.
ConjectureReport check_conjecture(CutJoinEngine& engine, int g, int n, int a, int M, mpfr_prec_t prec);

struct SpectralReport {
  int a = 1, D = 0;
  std::vector<std::string> nonzero;
  Rational leading;  // x^{a-1} coefficient of y(1+xy)^a
  bool passed() const { return nonzero.empty() && leading == -1; }
  nlohmann::json to_json() const;
};

/// y = -d/dx F_{0,1} from the closed form; checks x^{a-1} + y(1+xy)^a = O(x^D).
SpectralReport check_spectral_from_F01(int a, int D);

}  // namespace hurwitz

#endif  // HURWITZ_TOPREC_HPP
