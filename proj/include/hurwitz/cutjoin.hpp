#ifndef HURWITZ_CUTJOIN_HPP
#define HURWITZ_CUTJOIN_HPP

#include <atomic>
#include <compare>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

/// Arguments of a refined number H^{[a],ell}_g(mu1 | rest); rest is kept
/// sorted in non-increasing order.
struct RefinedKey {
  int a = 1;
  int g = 0;
  int mu1 = 1;
  int ell = 1;
  std::vector<int> rest;

  static RefinedKey make(int a, int g, int mu1, int ell, std::vector<int> rest);
  int degree() const;
  /// 2g - 2 + n + |mu|/a, or -1 when negative or fractional.
  int length() const;
  std::string to_string() const;
  friend auto operator<=>(const RefinedKey&, const RefinedKey&) = default;
  friend bool operator==(const RefinedKey&, const RefinedKey&) = default;
};

struct PlainKey {
  int a = 1;
  int g = 0;
  std::vector<int> mu;

  static PlainKey make(int a, int g, std::vector<int> mu);
  int degree() const;
  int length() const;
  std::string to_string() const;
  friend auto operator<=>(const PlainKey&, const PlainKey&) = default;
  friend bool operator==(const PlainKey&, const PlainKey&) = default;
};

class CacheFormatError : public std::runtime_error {
 public:
  CacheFormatError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Persistent table of computed values. Lines look like
///   a=2 g=0 mu1=4 ell=1 rest= H=1/4
///   a=2 g=0 mu=4 H=1/2
class ValueCache {
 public:
  ValueCache() = default;
  explicit ValueCache(std::filesystem::path path) : path_(std::move(path)) {}

  /// Reads the file; a missing file gives an empty cache bound to the path.
  static ValueCache load(const std::filesystem::path& path);
  /// $HURWITZ_CACHE if set, otherwise "hurwitz_cache.txt" in the working directory.
  static std::filesystem::path default_path();

  /// Writes to a temporary file next to the target and renames it over.
  void flush();
  void flush_to(const std::filesystem::path& path);

  std::optional<Rational> find(const RefinedKey& k) const;
  std::optional<Rational> find(const PlainKey& k) const;
  /// Throws std::logic_error if the key is present with a different value.
  void store(const RefinedKey& k, const Rational& v);
  void store(const PlainKey& k, const Rational& v);

  std::size_t size() const { return refined_.size() + plain_.size(); }
  bool dirty() const { return dirty_; }
  const std::filesystem::path& path() const { return path_; }

  std::string serialize() const;
  void parse(const std::string& text);

  friend bool operator==(const ValueCache& x, const ValueCache& y) {
    return x.refined_ == y.refined_ && x.plain_ == y.plain_;
  }

 private:
  std::filesystem::path path_;
  std::map<RefinedKey, Rational> refined_;
  std::map<PlainKey, Rational> plain_;
  bool dirty_ = false;
};

/// (1/(a k^2)) binom(ak + k - 2, k - 1)
Rational closed_form_01(int a, int k);

/// Memoized cut-and-join recursion. The memo is the attached ValueCache; all
/// access goes through one mutex, values are computed outside it, so racing
/// callers may duplicate work but always store the same value.
class CutJoinEngine {
 public:
  CutJoinEngine() = default;
  explicit CutJoinEngine(ValueCache cache) : cache_(std::move(cache)) {}

  Rational refined(int a, int g, int mu1, int ell, const std::vector<int>& rest);
  Rational refined(const RefinedKey& k);
  Rational hurwitz(int a, int g, const std::vector<int>& mu);
  Rational hurwitz(const PlainKey& k);

  /// Number of memo misses that went through the recursion.
  std::uint64_t recursion_calls() const { return calls_.load(); }
  ValueCache& cache() { return cache_; }
  const ValueCache& cache() const { return cache_; }

 private:
  Rational compute(const RefinedKey& k);
  Rational compute(const PlainKey& k);
  Rational refined_prefix(int a, int g, int mu1, int ell, const std::vector<int>& rest, int parent_length);
  Rational hurwitz_child(int a, int g, const std::vector<int>& mu, int parent_length);

  mutable std::mutex mutex_;
  ValueCache cache_;
  std::atomic<std::uint64_t> calls_{0};
};

}  // namespace hurwitz

#endif  // HURWITZ_CUTJOIN_HPP
