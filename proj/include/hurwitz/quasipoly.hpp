#ifndef HURWITZ_QUASIPOLY_HPP
#define HURWITZ_QUASIPOLY_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hurwitz/cutjoin.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

/// C(mu) = (a+1)^{frac(mu/a)} * binom(mu + floor(mu/a), floor(mu/a)), split into
/// the integer binomial and the fractional exponent frac(mu/a).
struct CFactorParts {
  BigInt binomial;
  Rational exponent;
};
CFactorParts c_factor_parts(int a, int mu);

/// Values of an n-variate function on a cube of `points` samples per coordinate,
/// row-major with the first coordinate slowest.
struct SampleGrid {
  int n = 0;
  int points = 0;
  std::vector<Rational> values;
};

struct DifferenceWitness {
  std::vector<int> orders;  // per-coordinate difference order
  std::vector<int> base;    // grid position of the base point
  Rational value;
};

/// First nonzero mixed difference of total order `order`, if any.
std::optional<DifferenceWitness> nonzero_difference(const SampleGrid& grid, int order);

/// Smallest d with every difference of order d+1 zero (-1 for the zero function);
/// nullopt when the grid is too small to decide.
std::optional<int> difference_degree(const SampleGrid& grid);

struct ClassResult {
  std::vector<int> residue;   // mu_i mod a
  std::vector<int> first;     // smallest mu in the class
  int degree = -1;            // fitted total degree; -1 when Q vanishes on the class
  bool vanishes = false;      // all differences of the tested order are zero
  std::optional<DifferenceWitness> failure;
};

struct QuasiPolyReport {
  int a = 1, g = 0, n = 1, bound = 0;
  int expected_degree = 0;  // 3g - 3 + n
  std::vector<ClassResult> classes;
  std::vector<std::vector<int>> zero_classes;
  std::vector<std::string> asymmetric;
  bool attained = false;
  bool passed() const;
  nlohmann::json to_json() const;
};

/// Per residue class mod a, Q(mu) = H(mu) / prod binom(mu_i + floor(mu_i/a), floor(mu_i/a))
/// over mu_i <= bound; differences with step a of order 3g-2+n must vanish and
/// some class must attain degree 3g-3+n. Throws std::invalid_argument when the grid is
/// too small for that order.
QuasiPolyReport quasipoly_check(CutJoinEngine& engine, int a, int g, int n, int bound);

}  // namespace hurwitz

#endif  // HURWITZ_QUASIPOLY_HPP
