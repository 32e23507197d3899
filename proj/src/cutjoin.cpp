#include "hurwitz/cutjoin.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "hurwitz/permutation.hpp"

namespace hurwitz {

namespace {

void check_parts(int a, int g, const std::vector<int>& parts) {
  if (a < 1) throw std::invalid_argument("a must be positive");
  if (g < 0) throw std::invalid_argument("genus must be non-negative");
  for (int p : parts) {
    if (p < 1) throw std::invalid_argument("parts must be positive");
  }
}

int length_of(int a, int g, int n, int d) {
  if (d % a != 0) return -1;
  const int m = 2 * g - 2 + n + d / a;
  return m < 0 ? -1 : m;
}

std::string list_string(const std::vector<int>& v) { return partition_to_string(v); }

}  // namespace

RefinedKey RefinedKey::make(int a, int g, int mu1, int ell, std::vector<int> rest) {
  check_parts(a, g, rest);
  if (mu1 < 1) throw std::invalid_argument("distinguished part must be positive");
  return {a, g, mu1, ell, canonical_partition(std::move(rest))};
}

int RefinedKey::degree() const { return mu1 + std::accumulate(rest.begin(), rest.end(), 0); }
int RefinedKey::length() const { return length_of(a, g, static_cast<int>(rest.size()) + 1, degree()); }

std::string RefinedKey::to_string() const {
  return "a=" + std::to_string(a) + " g=" + std::to_string(g) + " mu1=" + std::to_string(mu1) +
         " ell=" + std::to_string(ell) + " rest=" + list_string(rest);
}

PlainKey PlainKey::make(int a, int g, std::vector<int> mu) {
  check_parts(a, g, mu);
  if (mu.empty()) throw std::invalid_argument("mu must have at least one part");
  return {a, g, canonical_partition(std::move(mu))};
}

int PlainKey::degree() const { return std::accumulate(mu.begin(), mu.end(), 0); }
int PlainKey::length() const { return length_of(a, g, static_cast<int>(mu.size()), degree()); }

std::string PlainKey::to_string() const {
  return "a=" + std::to_string(a) + " g=" + std::to_string(g) + " mu=" + list_string(mu);
}

CacheFormatError::CacheFormatError(std::size_t line, const std::string& what)
    : std::runtime_error("cache line " + std::to_string(line) + ": " + what), line_(line) {}

ValueCache ValueCache::load(const std::filesystem::path& path) {
  ValueCache c(path);
  if (!std::filesystem::exists(path)) return c;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read cache file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  c.parse(buf.str());
  c.dirty_ = false;
  return c;
}

std::filesystem::path ValueCache::default_path() {
  if (const char* env = std::getenv("HURWITZ_CACHE"); env && *env) return env;
  return "hurwitz_cache.txt";
}

std::string ValueCache::serialize() const {
  std::string out;
  for (const auto& [k, v] : refined_) out += k.to_string() + " H=" + hurwitz::to_string(v) + "\n";
  for (const auto& [k, v] : plain_) out += k.to_string() + " H=" + hurwitz::to_string(v) + "\n";
  return out;
}

void ValueCache::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::map<std::string, std::string> fields;
    std::istringstream tokens(line);
    std::string tok;
    while (tokens >> tok) {
      const auto eq = tok.find('=');
      if (eq == std::string::npos || eq == 0) throw CacheFormatError(lineno, "malformed field '" + tok + "'");
      const std::string name = tok.substr(0, eq);
      static const std::set<std::string> known = {"a", "g", "mu1", "ell", "rest", "mu", "H"};
      if (!known.count(name)) throw CacheFormatError(lineno, "unknown field '" + name + "'");
      if (!fields.emplace(name, tok.substr(eq + 1)).second) throw CacheFormatError(lineno, "duplicate field '" + name + "'");
    }
    auto integer = [&](const std::string& name) {
      const auto& s = fields.at(name);
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(s, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (s.empty() || used != s.size()) throw CacheFormatError(lineno, "field '" + name + "' is not an integer");
      return v;
    };
    auto list = [&](const std::string& name) {
      const auto& s = fields.at(name);
      if (s.empty()) return std::vector<int>{};
      try {
        return parse_parts(s);
      } catch (const std::exception& e) {
        throw CacheFormatError(lineno, e.what());
      }
    };
    auto need = [&](std::initializer_list<const char*> names) {
      if (fields.size() != names.size()) return false;
      for (const char* n : names) {
        if (!fields.count(n)) return false;
      }
      return true;
    };
    Rational value;
    try {
      if (!fields.count("H")) throw CacheFormatError(lineno, "missing H");
      value = parse_rational(fields.at("H"));
    } catch (const std::invalid_argument& e) {
      throw CacheFormatError(lineno, e.what());
    }
    try {
      if (need({"a", "g", "mu1", "ell", "rest", "H"})) {
        store(RefinedKey::make(integer("a"), integer("g"), integer("mu1"), integer("ell"), list("rest")), value);
      } else if (need({"a", "g", "mu", "H"})) {
        store(PlainKey::make(integer("a"), integer("g"), list("mu")), value);
      } else {
        throw CacheFormatError(lineno, "fields match neither record layout");
      }
    } catch (const CacheFormatError&) {
      throw;
    } catch (const std::exception& e) {
      throw CacheFormatError(lineno, e.what());
    }
  }
}

void ValueCache::flush() {
  if (path_.empty()) throw std::logic_error("cache has no backing file");
  flush_to(path_);
}

void ValueCache::flush_to(const std::filesystem::path& path) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << serialize();
    out.flush();
    if (!out) throw std::runtime_error("write to " + tmp.string() + " failed");
  }
  std::filesystem::rename(tmp, path);
  if (path == path_) dirty_ = false;
}

std::optional<Rational> ValueCache::find(const RefinedKey& k) const {
  auto it = refined_.find(k);
  if (it == refined_.end()) return std::nullopt;
  return it->second;
}

std::optional<Rational> ValueCache::find(const PlainKey& k) const {
  auto it = plain_.find(k);
  if (it == plain_.end()) return std::nullopt;
  return it->second;
}

void ValueCache::store(const RefinedKey& k, const Rational& v) {
  auto [it, fresh] = refined_.emplace(k, v);
  if (!fresh && it->second != v) throw std::logic_error("conflicting values for " + k.to_string());
  dirty_ = dirty_ || fresh;
}

void ValueCache::store(const PlainKey& k, const Rational& v) {
  auto [it, fresh] = plain_.emplace(k, v);
  if (!fresh && it->second != v) throw std::logic_error("conflicting values for " + k.to_string());
  dirty_ = dirty_ || fresh;
}

Rational closed_form_01(int a, int k) {
  if (a < 1 || k < 1) throw std::invalid_argument("closed form needs a, k >= 1");
  Rational r(binomial(static_cast<long>(a) * k + k - 2, k - 1), BigInt(a) * k * k);
  r.canonicalize();
  return r;
}

Rational CutJoinEngine::refined(int a, int g, int mu1, int ell, const std::vector<int>& rest) {
  return refined(RefinedKey::make(a, g, mu1, ell, rest));
}

Rational CutJoinEngine::hurwitz(int a, int g, const std::vector<int>& mu) { return hurwitz(PlainKey::make(a, g, mu)); }

Rational CutJoinEngine::refined(const RefinedKey& k) {
  if (k.ell < 1 || k.ell > k.a || k.length() < 0) return 0;
  {
    std::lock_guard lock(mutex_);
    if (auto v = cache_.find(k)) return *v;
  }
  Rational v = compute(k);
  std::lock_guard lock(mutex_);
  cache_.store(k, v);
  return v;
}

Rational CutJoinEngine::hurwitz(const PlainKey& k) {
  if (k.length() < 0) return 0;
  {
    std::lock_guard lock(mutex_);
    if (auto v = cache_.find(k)) return *v;
  }
  Rational v = compute(k);
  std::lock_guard lock(mutex_);
  cache_.store(k, v);
  return v;
}

Rational CutJoinEngine::refined_prefix(int a, int g, int mu1, int ell, const std::vector<int>& rest, int parent_length) {
  auto key = RefinedKey::make(a, g, mu1, 1, rest);
  const int m = key.length();
  if (m < 0) return 0;
  if (m >= parent_length) throw std::logic_error("cut-and-join step does not decrease m at " + key.to_string());
  Rational sum = 0;
  for (int p = 1; p <= ell; ++p) {
    key.ell = p;
    sum += refined(key);
  }
  return sum;
}

Rational CutJoinEngine::hurwitz_child(int a, int g, const std::vector<int>& mu, int parent_length) {
  auto key = PlainKey::make(a, g, mu);
  const int m = key.length();
  if (m < 0) return 0;
  if (m >= parent_length) throw std::logic_error("cut-and-join step does not decrease m at " + key.to_string());
  return hurwitz(key);
}

Rational CutJoinEngine::compute(const RefinedKey& k) {
  ++calls_;
  const int a = k.a, g = k.g, mu1 = k.mu1, ell = k.ell;
  const int m = k.length();
  const auto& rest = k.rest;
  const int n = static_cast<int>(rest.size()) + 1;
  if (m == 0) {
    // only (a, 0, a, ell, ()) has m = 0
    return ell == 1 ? Rational(1, a) : Rational(0);
  }
  Rational total = 0;

  // cut
  if (mu1 + ell - a - 1 >= 0) {
    for (int i = 0; i < n - 1; ++i) {
      std::vector<int> smaller = rest;
      smaller.erase(smaller.begin() + i);
      total += refined_prefix(a, g, mu1 + rest[i], ell, smaller, m);
    }
  }

  // redundant join
  if (g >= 1) {
    for (int beta = 1; beta < mu1; ++beta) {
      const int alpha = mu1 - beta;
      std::vector<int> bigger = rest;
      bigger.push_back(beta);
      total += beta * refined_prefix(a, g - 1, alpha, ell, bigger, m);
    }
  }

  // essential join
  const int d = k.degree();
  const unsigned subsets = 1u << (n - 1);
  for (int beta = 1; beta < mu1; ++beta) {
    const int alpha = mu1 - beta;
    for (unsigned mask = 0; mask < subsets; ++mask) {
      std::vector<int> I{beta}, J;
      int sum_j = 0;
      for (int i = 0; i < n - 1; ++i) {
        if (mask >> i & 1) {
          I.push_back(rest[i]);
        } else {
          J.push_back(rest[i]);
          sum_j += rest[i];
        }
      }
      const int dI = std::accumulate(I.begin(), I.end(), 0);
      if (dI % a != 0) continue;
      for (int g1 = 0; g1 <= g; ++g1) {
        const Rational left = hurwitz_child(a, g1, I, m);
        if (left == 0) continue;
        const Rational right = refined_prefix(a, g - g1, alpha, ell, J, m);
        if (right == 0) continue;
        total += Rational(sum_j + alpha, d) * beta * left * right;
      }
    }
  }
  total.canonicalize();
  return total;
}

Rational CutJoinEngine::compute(const PlainKey& k) {
  ++calls_;
  Rational total = 0;
  const auto& mu = k.mu;
  // Positions with equal parts contribute identically.
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (i > 0 && mu[i] == mu[i - 1]) continue;
    const auto copies = std::count(mu.begin(), mu.end(), mu[i]);
    std::vector<int> rest = mu;
    rest.erase(rest.begin() + static_cast<long>(i));
    Rational s = 0;
    for (int ell = 1; ell <= k.a; ++ell) s += refined(RefinedKey::make(k.a, k.g, mu[i], ell, rest));
    total += s * static_cast<long>(copies);
  }
  total.canonicalize();
  return total;
}

}  // namespace hurwitz
