#ifndef HURWITZ_PERMUTATION_HPP
#define HURWITZ_PERMUTATION_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace hurwitz {

/// A partition stored as parts in non-increasing order.
using Partition = std::vector<int>;

Partition canonical_partition(std::vector<int> parts);
/// All partitions of n, each in non-increasing order.
std::vector<Partition> partitions_of(int n);
/// Number of ways to label the parts 1..len so that equal parts are told
/// apart: the product of (multiplicity)! over distinct part sizes.
std::uint64_t labelling_multiplicity(const std::vector<int>& parts);
std::string partition_to_string(const std::vector<int>& parts);
/// Parses "3,2,1" (whitespace tolerated). Throws std::invalid_argument.
std::vector<int> parse_parts(const std::string& text);

/// Bijection of {0, ..., d-1} in one-line notation.
///
/// Composition convention, fixed for the whole library: a product
/// p * q is read left to right, p acting first: (p * q)(i) = q(p(i)).
/// Consequently the product of a factorisation (s0, s1, ..., sm) is
/// s0 * s1 * ... * sm and the partial products satisfy
/// tau_i = tau_{i-1} * s_i.
///
/// Text I/O is 1-based (images of 1..d); the in-memory API is 0-based.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);
  /// (r s) on {0..degree-1}, 0-based.
  static Permutation transposition(int degree, int r, int s);
  /// Cycles given 0-based; unlisted points are fixed.
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);
  /// (0 .. a-1)(a .. 2a-1) ... (ak-a .. ak-1): the fixed orbifold base point.
  static Permutation special_sigma0(int a, int k);
  /// Parses 1-based one-line notation "2 3 1" or "2,3,1".
  static Permutation parse(const std::string& text);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  friend Permutation operator*(const Permutation& first, const Permutation& then);
  Permutation inverse() const;

  /// Cycles as 0-based orbits, each starting at its smallest element,
  /// ordered by that smallest element.
  std::vector<std::vector<int>> cycles() const;
  Partition cycle_type() const;
  int cycle_count() const;

  std::string to_string() const;

  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) = default;

 private:
  std::vector<int> images_;
};

/// Every permutation of {0..d-1} with the given cycle type, each exactly once.
std::vector<Permutation> permutations_of_cycle_type(int degree, const Partition& type);
/// All d! permutations in lexicographic order of one-line notation.
std::vector<Permutation> all_permutations(int degree);

}  // namespace hurwitz

#endif  // HURWITZ_PERMUTATION_HPP
