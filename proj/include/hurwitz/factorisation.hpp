#ifndef HURWITZ_FACTORISATION_HPP
#define HURWITZ_FACTORISATION_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hurwitz/permutation.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

enum class Flavor { Simple, Orbifold, Monotone, MonotoneOrbifold };
enum class CountMode { FixedSigma0, Free };

std::string to_string(Flavor f);
std::string to_string(CountMode m);
Flavor parse_flavor(const std::string& text);

inline bool is_monotone(Flavor f) { return f == Flavor::Monotone || f == Flavor::MonotoneOrbifold; }
inline bool is_orbifold(Flavor f) { return f == Flavor::Orbifold || f == Flavor::MonotoneOrbifold; }

struct EnumerationBudget {
  int max_degree = 8;
  int max_length = 10;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A transposition (r s) with r < s, 0-based.
using Transposition = std::pair<int, int>;

struct FactorisationRecord {
  Permutation sigma0;
  std::vector<Transposition> transpositions;

  /// sigma0 * t1 * ... * tm under the library's left-to-right convention.
  Permutation product() const;
  bool is_monotone() const;
  bool is_transitive() const;
};

/// Number of transpositions for the given flavor, or -1 when m would be
/// negative or fractional.
int factorisation_length(Flavor flavor, int a, int g, const std::vector<int>& mu);

/// Tallies of every factorisation sigma0 * t1 * ... * tj (j <= max_length)
/// for a given starting class, produced by a forward dynamic programme over
/// (partial product, orbit partition) states.
///
/// `plain` counts tuples by final cycle type, split into all and transitive.
/// `refined` (monotone flavors with the fixed base point only) counts
/// transitive tuples ending in a transposition (r, s) whose larger element
/// s = d - a + ell - 1 (0-based) lies, together with s+1, ..., d-1, in one
/// cycle; it is keyed by that cycle's length and the remaining cycle type.
class Census {
 public:
  struct PlainTally {
    std::uint64_t all = 0;
    std::uint64_t transitive = 0;
  };
  using PlainKey = std::pair<int, Partition>;
  using RefinedKey = std::tuple<int, int, int, Partition>;  // length, ell, mu1, rest

  Flavor flavor = Flavor::MonotoneOrbifold;
  CountMode mode = CountMode::FixedSigma0;
  int a = 1;
  int degree = 0;
  int max_length = 0;
  /// Size of the base-point class represented by each stored tally (1 in
  /// free mode, the class size when sigma0 was fixed).
  BigInt sigma0_multiplier = 1;

  std::map<PlainKey, PlainTally> plain;
  std::map<RefinedKey, std::uint64_t> refined;

  /// Connected count divided by d!, with labelled cycles.
  Rational hurwitz(int g, const std::vector<int>& mu) const;
  /// Refined count divided by a^k k!. Requires fixed mode and a monotone flavor.
  Rational refined_hurwitz(int g, int mu1, int ell, const std::vector<int>& rest) const;
  /// Raw number of tuples (sigma0 over the whole class) of the given length
  /// whose product has the given cycle type.
  BigInt tuples(int length, const Partition& type, bool transitive) const;
};

Census run_census(Flavor flavor, int a, int degree, int max_length, CountMode mode,
                  const EnumerationBudget& budget = {});

/// Census started from one explicit sigma0 (no class multiplier applied).
Census run_census_from(const Permutation& sigma0, bool monotone, int max_length,
                       const EnumerationBudget& budget = {});

Rational count_factorisations(Flavor flavor, int a, int g, const std::vector<int>& mu, CountMode mode,
                              const EnumerationBudget& budget = {});
Rational count_refined(int a, int g, int mu1, int ell, const std::vector<int>& rest,
                       const EnumerationBudget& budget = {});

/// Depth-first enumeration of all factorisations of length m starting at
/// sigma0 whose product has cycle type `target` (any type if empty), with
/// optional transitivity and monotonicity. Returns the number visited.
std::uint64_t enumerate_factorisations(const Permutation& sigma0, int m, const Partition& target, bool monotone,
                                       bool transitive_only,
                                       const std::function<void(const FactorisationRecord&)>& visit,
                                       const EnumerationBudget& budget = {});

/// Count by explicit depth-first enumeration, summing over every sigma0 of
/// the class; independent of the census.
Rational count_factorisations_dfs(Flavor flavor, int a, int g, const std::vector<int>& mu,
                                  const EnumerationBudget& budget = {});

/// Number of monotone sequences of m transpositions in S_d.
std::uint64_t monotone_sequence_count(int d, int m);

struct IndependenceReport {
  int degree = 0;
  int max_length = 0;
  std::size_t permutations_checked = 0;
  std::size_t comparisons = 0;
  std::vector<std::string> violations;
  nlohmann::json to_json() const;
};

/// For every sigma in S_d and every length up to max_length, the monotone
/// counts (all and transitive) by product cycle type are compared across each
/// conjugacy class. When `only` is non-empty, only that product type is kept.
IndependenceReport check_cycle_type_independence(int d, int max_length, const Partition& only = {});

nlohmann::json count_report(Flavor flavor, int a, int g, const std::vector<int>& mu, CountMode mode,
                            const Rational& count, const std::vector<std::string>& violations = {});

}  // namespace hurwitz

#endif  // HURWITZ_FACTORISATION_HPP
