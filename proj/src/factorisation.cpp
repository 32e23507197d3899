#include "hurwitz/factorisation.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <unordered_map>

namespace hurwitz {

std::string to_string(Flavor f) {
  switch (f) {
    case Flavor::Simple: return "simple";
    case Flavor::Orbifold: return "orbifold";
    case Flavor::Monotone: return "monotone";
    case Flavor::MonotoneOrbifold: return "monotone-orbifold";
  }
  return "?";
}

std::string to_string(CountMode m) { return m == CountMode::FixedSigma0 ? "fixed-sigma0" : "free"; }

Flavor parse_flavor(const std::string& text) {
  for (Flavor f : {Flavor::Simple, Flavor::Orbifold, Flavor::Monotone, Flavor::MonotoneOrbifold}) {
    if (to_string(f) == text) return f;
  }
  throw std::invalid_argument("unknown flavor '" + text + "'");
}

Permutation FactorisationRecord::product() const {
  Permutation p = sigma0;
  for (auto [r, s] : transpositions) p = p * Permutation::transposition(p.degree(), r, s);
  return p;
}

bool FactorisationRecord::is_monotone() const {
  for (std::size_t i = 0; i < transpositions.size(); ++i) {
    if (transpositions[i].first >= transpositions[i].second) return false;
    if (i && transpositions[i].second < transpositions[i - 1].second) return false;
  }
  return true;
}

bool FactorisationRecord::is_transitive() const {
  const int d = sigma0.degree();
  std::vector<int> parent(d);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int i = 0; i < d; ++i) parent[find(i)] = find(sigma0(i));
  for (auto [r, s] : transpositions) parent[find(r)] = find(s);
  for (int i = 0; i < d; ++i) {
    if (find(i) != find(0)) return false;
  }
  return true;
}

namespace {

int sum_of(const std::vector<int>& mu) { return std::accumulate(mu.begin(), mu.end(), 0); }

int effective_a(Flavor flavor, int a) { return is_orbifold(flavor) ? a : 1; }

constexpr int kMaxPackedDegree = 15;

struct Packed {
  std::uint64_t tau;
  std::uint64_t comp;
  friend bool operator==(const Packed&, const Packed&) = default;
  friend auto operator<=>(const Packed&, const Packed&) = default;
};

using Layer = std::vector<std::pair<Packed, std::uint64_t>>;

inline int nib(std::uint64_t w, int i) { return static_cast<int>((w >> (4 * i)) & 0xF); }
inline void set_nib(std::uint64_t& w, int i, int v) {
  w &= ~(std::uint64_t{0xF} << (4 * i));
  w |= std::uint64_t(v) << (4 * i);
}

Packed pack(const Permutation& sigma0) {
  Packed p{0, 0};
  for (int i = 0; i < sigma0.degree(); ++i) set_nib(p.tau, i, sigma0(i));
  for (const auto& c : sigma0.cycles()) {
    for (int x : c) set_nib(p.comp, x, c.front());
  }
  return p;
}

// tau * (r s): swap the values r and s in one-line notation, merge orbits.
inline Packed apply(Packed p, int d, int r, int s) {
  int pr = -1, ps = -1;
  for (int i = 0; i < d; ++i) {
    const int v = nib(p.tau, i);
    if (v == r) pr = i;
    if (v == s) ps = i;
  }
  set_nib(p.tau, pr, s);
  set_nib(p.tau, ps, r);
  const int lr = nib(p.comp, r), ls = nib(p.comp, s);
  if (lr != ls) {
    const int keep = std::min(lr, ls), drop = std::max(lr, ls);
    for (int i = 0; i < d; ++i) {
      if (nib(p.comp, i) == drop) set_nib(p.comp, i, keep);
    }
  }
  return p;
}

void normalise(Layer& layer) {
  std::sort(layer.begin(), layer.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < layer.size(); ++i) {
    if (out && layer[out - 1].first == layer[i].first) {
      layer[out - 1].second += layer[i].second;
    } else {
      layer[out++] = layer[i];
    }
  }
  layer.resize(out);
}

Layer merge(const Layer& x, const Layer& y) {
  Layer out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.push_back(y[j++]);
    } else {
      out.emplace_back(x[i].first, x[i].second + y[j].second);
      ++i, ++j;
    }
  }
  return out;
}

bool transitive(const Packed& p, int d) {
  for (int i = 0; i < d; ++i) {
    if (nib(p.comp, i) != 0) return false;
  }
  return true;
}

// Cycle lengths encoded as a sorted nibble word; also reports the cycle of
// element `mark` when mark >= 0.
struct CycleInfo {
  std::uint64_t type_code = 0;
  std::uint64_t rest_code = 0;
  int mark_length = 0;
  int mark_run_start = 0;  // smallest t such that t..d-1 all lie in mark's cycle
};

std::uint64_t encode_parts(std::vector<int>& parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) code |= std::uint64_t(parts[i]) << (4 * i);
  return code;
}

Partition decode_parts(std::uint64_t code) {
  Partition p;
  while (code) {
    p.push_back(static_cast<int>(code & 0xF));
    code >>= 4;
  }
  return p;
}

CycleInfo classify(const Packed& p, int d, bool with_mark) {
  int cycle_of[16];
  std::vector<int> lengths;
  std::uint32_t seen = 0;
  for (int i = 0; i < d; ++i) {
    if (seen >> i & 1) continue;
    int len = 0;
    for (int j = i; !(seen >> j & 1); j = nib(p.tau, j)) {
      seen |= 1u << j;
      cycle_of[j] = static_cast<int>(lengths.size());
      ++len;
    }
    lengths.push_back(len);
  }
  CycleInfo info;
  if (with_mark) {
    const int c = cycle_of[d - 1];
    info.mark_length = lengths[c];
    int t = d - 1;
    while (t > 0 && cycle_of[t - 1] == c) --t;
    info.mark_run_start = t;
    std::vector<int> rest;
    for (std::size_t i = 0; i < lengths.size(); ++i) {
      if (static_cast<int>(i) != c) rest.push_back(lengths[i]);
    }
    info.rest_code = encode_parts(rest);
  }
  info.type_code = encode_parts(lengths);
  return info;
}

struct PairHash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const {
    return std::hash<std::uint64_t>()(k.first * 0x9E3779B97F4A7C15ULL ^ k.second);
  }
};

void check_budget(int degree, int max_length, const EnumerationBudget& budget) {
  if (degree > budget.max_degree || degree > kMaxPackedDegree) {
    throw BudgetExceeded("degree " + std::to_string(degree) + " exceeds the enumeration budget");
  }
  if (max_length > budget.max_length) {
    throw BudgetExceeded("length " + std::to_string(max_length) + " exceeds the enumeration budget");
  }
}

void check_overflow(int degree, int max_length, bool monotone, std::size_t starts) {
  if (degree < 2) return;
  BigInt worst = monotone ? stirling2(degree + max_length - 1, degree - 1) : BigInt(1);
  if (!monotone) {
    const BigInt pairs = degree * (degree - 1) / 2;
    for (int i = 0; i < max_length; ++i) worst *= pairs;
  }
  worst *= static_cast<unsigned long>(starts);
  if (worst >= BigInt(std::numeric_limits<std::int64_t>::max())) {
    throw BudgetExceeded("tallies would overflow 64-bit counters");
  }
}

// Core forward DP from a list of starting base points.
void census_core(Census& out, const std::vector<Permutation>& starts, bool monotone, bool track_refined, int a) {
  const int d = out.degree;
  const int L = out.max_length;
  check_overflow(d, L, monotone, starts.size());

  std::vector<Layer> cur(L + 1);
  for (const auto& s : starts) cur[0].emplace_back(pack(s), 1);
  normalise(cur[0]);

  std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t, PairHash> refined;

  auto record_refined = [&](const Layer& fresh, int length, int s) {
    if (!track_refined || s < d - a) return;
    const int ell = s - (d - a) + 1;
    for (const auto& [state, count] : fresh) {
      if (!transitive(state, d)) continue;
      const CycleInfo info = classify(state, d, true);
      if (info.mark_run_start > s) continue;
      const std::uint64_t meta = std::uint64_t(length) | std::uint64_t(ell) << 8 | std::uint64_t(info.mark_length) << 16;
      refined[{meta, info.rest_code}] += count;
    }
  };

  if (monotone) {
    for (int s = 1; s < d; ++s) {
      for (int j = 1; j <= L; ++j) {
        Layer fresh;
        fresh.reserve(cur[j - 1].size() * s);
        for (const auto& [state, count] : cur[j - 1]) {
          for (int r = 0; r < s; ++r) fresh.emplace_back(apply(state, d, r, s), count);
        }
        normalise(fresh);
        record_refined(fresh, j, s);
        cur[j] = merge(cur[j], fresh);
      }
    }
  } else {
    for (int j = 1; j <= L; ++j) {
      Layer next;
      for (const auto& [state, count] : cur[j - 1]) {
        for (int s = 1; s < d; ++s) {
          for (int r = 0; r < s; ++r) next.emplace_back(apply(state, d, r, s), count);
        }
      }
      normalise(next);
      cur[j] = std::move(next);
    }
  }

  for (int j = 0; j <= L; ++j) {
    std::unordered_map<std::uint64_t, Census::PlainTally> by_type;
    for (const auto& [state, count] : cur[j]) {
      auto& t = by_type[classify(state, d, false).type_code];
      t.all += count;
      if (transitive(state, d)) t.transitive += count;
    }
    for (const auto& [code, tally] : by_type) out.plain[{j, decode_parts(code)}] = tally;
  }
  for (const auto& [key, count] : refined) {
    const int length = static_cast<int>(key.first & 0xFF);
    const int ell = static_cast<int>(key.first >> 8 & 0xFF);
    const int mu1 = static_cast<int>(key.first >> 16 & 0xFF);
    out.refined[{length, ell, mu1, decode_parts(key.second)}] += count;
  }
}

std::vector<Permutation> base_points(Flavor flavor, int a, int degree) {
  const int ea = effective_a(flavor, a);
  return permutations_of_cycle_type(degree, Partition(degree / ea, ea));
}

BigInt class_size(int a, int k) {
  BigInt denom = factorial(k);
  for (int i = 0; i < k; ++i) denom *= a;
  return factorial(a * k) / denom;
}

}  // namespace

int factorisation_length(Flavor flavor, int a, int g, const std::vector<int>& mu) {
  const int d = sum_of(mu);
  const int ea = effective_a(flavor, a);
  if (ea <= 0 || d % ea != 0) return -1;
  const int m = 2 * g - 2 + static_cast<int>(mu.size()) + d / ea;
  return m < 0 ? -1 : m;
}

BigInt Census::tuples(int length, const Partition& type, bool transitive_only) const {
  auto it = plain.find({length, canonical_partition(type)});
  if (it == plain.end()) return 0;
  const std::uint64_t c = transitive_only ? it->second.transitive : it->second.all;
  return BigInt(static_cast<unsigned long>(c)) * sigma0_multiplier;
}

Rational Census::hurwitz(int g, const std::vector<int>& mu) const {
  if (sum_of(mu) != degree) throw std::invalid_argument("partition does not match the census degree");
  const int m = factorisation_length(flavor, a, g, mu);
  if (m < 0) return 0;
  if (m > max_length) throw BudgetExceeded("census does not reach length " + std::to_string(m));
  Rational r(tuples(m, mu, true) * static_cast<unsigned long>(labelling_multiplicity(mu)), factorial(degree));
  r.canonicalize();
  return r;
}

Rational Census::refined_hurwitz(int g, int mu1, int ell, const std::vector<int>& rest) const {
  if (mode != CountMode::FixedSigma0 || !is_monotone(flavor)) {
    throw std::logic_error("refined counts need a fixed base point and a monotone flavor");
  }
  const int ea = effective_a(flavor, a);
  if (mu1 + sum_of(rest) != degree) throw std::invalid_argument("partition does not match the census degree");
  if (ell < 1 || ell > ea) return 0;
  std::vector<int> mu{mu1};
  mu.insert(mu.end(), rest.begin(), rest.end());
  const int m = factorisation_length(flavor, a, g, mu);
  if (m < 0) return 0;
  if (m > max_length) throw BudgetExceeded("census does not reach length " + std::to_string(m));
  const int k = degree / ea;
  BigInt denom = factorial(k);
  for (int i = 0; i < k; ++i) denom *= ea;
  BigInt count = 0;
  if (m == 0) {
    // No last transposition: the single cycle carries counter 1.
    count = (ell == 1 && rest.empty() && mu1 == ea) ? 1 : 0;
  } else {
    auto it = refined.find({m, ell, mu1, canonical_partition(rest)});
    if (it != refined.end()) {
      count = BigInt(static_cast<unsigned long>(it->second)) * static_cast<unsigned long>(labelling_multiplicity(rest));
    }
  }
  Rational r(count, denom);
  r.canonicalize();
  return r;
}

Census run_census(Flavor flavor, int a, int degree, int max_length, CountMode mode, const EnumerationBudget& budget) {
  check_budget(degree, max_length, budget);
  const int ea = effective_a(flavor, a);
  if (ea <= 0 || degree % ea != 0) throw std::invalid_argument("a must divide the degree");
  Census c;
  c.flavor = flavor;
  c.mode = mode;
  c.a = a;
  c.degree = degree;
  c.max_length = max_length;
  std::vector<Permutation> starts;
  if (mode == CountMode::FixedSigma0) {
    starts.push_back(Permutation::special_sigma0(ea, degree / ea));
    c.sigma0_multiplier = class_size(ea, degree / ea);
  } else {
    starts = base_points(flavor, a, degree);
  }
  census_core(c, starts, is_monotone(flavor), mode == CountMode::FixedSigma0 && is_monotone(flavor), ea);
  return c;
}

Census run_census_from(const Permutation& sigma0, bool monotone, int max_length, const EnumerationBudget& budget) {
  check_budget(sigma0.degree(), max_length, budget);
  Census c;
  c.flavor = monotone ? Flavor::Monotone : Flavor::Simple;
  c.mode = CountMode::FixedSigma0;
  c.degree = sigma0.degree();
  c.max_length = max_length;
  census_core(c, {sigma0}, monotone, false, 1);
  return c;
}

Rational count_factorisations(Flavor flavor, int a, int g, const std::vector<int>& mu, CountMode mode,
                              const EnumerationBudget& budget) {
  const int m = factorisation_length(flavor, a, g, mu);
  if (m < 0) return 0;
  return run_census(flavor, a, sum_of(mu), m, mode, budget).hurwitz(g, mu);
}

Rational count_refined(int a, int g, int mu1, int ell, const std::vector<int>& rest, const EnumerationBudget& budget) {
  std::vector<int> mu{mu1};
  mu.insert(mu.end(), rest.begin(), rest.end());
  const int m = factorisation_length(Flavor::MonotoneOrbifold, a, g, mu);
  if (m < 0) return 0;
  return run_census(Flavor::MonotoneOrbifold, a, sum_of(mu), m, CountMode::FixedSigma0, budget)
      .refined_hurwitz(g, mu1, ell, rest);
}

std::uint64_t enumerate_factorisations(const Permutation& sigma0, int m, const Partition& target, bool monotone,
                                       bool transitive_only,
                                       const std::function<void(const FactorisationRecord&)>& visit,
                                       const EnumerationBudget& budget) {
  const int d = sigma0.degree();
  check_budget(d, m, budget);
  const int target_cycles = static_cast<int>(target.size());
  const Partition want = canonical_partition(target);

  FactorisationRecord rec{sigma0, {}};
  std::vector<int> tau = sigma0.images();
  std::vector<int> comp(d);
  for (const auto& c : sigma0.cycles()) {
    for (int x : c) comp[x] = c.front();
  }
  int cycles = sigma0.cycle_count();
  int components = cycles;
  std::uint64_t visited = 0;

  std::function<void(int)> dfs = [&](int min_s) {
    const int remaining = m - static_cast<int>(rec.transpositions.size());
    if (!target.empty() && (std::abs(cycles - target_cycles) > remaining ||
                            (std::abs(cycles - target_cycles) - remaining) % 2 != 0)) {
      return;
    }
    if (transitive_only && components - 1 > remaining) return;
    if (remaining == 0) {
      Permutation p(tau);
      if (!target.empty() && p.cycle_type() != want) return;
      ++visited;
      visit(rec);
      return;
    }
    for (int s = monotone ? min_s : 1; s < d; ++s) {
      for (int r = 0; r < s; ++r) {
        // tau * (r s) swaps the values r and s.
        const int pr = static_cast<int>(std::find(tau.begin(), tau.end(), r) - tau.begin());
        const int ps = static_cast<int>(std::find(tau.begin(), tau.end(), s) - tau.begin());
        bool same_cycle = false;
        for (int j = tau[r]; ; j = tau[j]) {
          if (j == s) same_cycle = true;
          if (j == r) break;
        }
        const std::vector<int> saved_comp = comp;
        const int saved_components = components;
        std::swap(tau[pr], tau[ps]);
        cycles += same_cycle ? 1 : -1;
        if (comp[r] != comp[s]) {
          const int drop = std::max(comp[r], comp[s]), keep = std::min(comp[r], comp[s]);
          for (int& c : comp) {
            if (c == drop) c = keep;
          }
          --components;
        }
        rec.transpositions.emplace_back(r, s);
        dfs(s);
        rec.transpositions.pop_back();
        std::swap(tau[pr], tau[ps]);
        cycles -= same_cycle ? 1 : -1;
        comp = saved_comp;
        components = saved_components;
      }
    }
  };
  dfs(1);
  return visited;
}

Rational count_factorisations_dfs(Flavor flavor, int a, int g, const std::vector<int>& mu,
                                  const EnumerationBudget& budget) {
  const int m = factorisation_length(flavor, a, g, mu);
  if (m < 0) return 0;
  const int d = sum_of(mu);
  std::uint64_t total = 0;
  for (const auto& s0 : base_points(flavor, a, d)) {
    total += enumerate_factorisations(s0, m, mu, is_monotone(flavor), true, [](const FactorisationRecord&) {}, budget);
  }
  Rational r(BigInt(static_cast<unsigned long>(total)) * static_cast<unsigned long>(labelling_multiplicity(mu)),
             factorial(d));
  r.canonicalize();
  return r;
}

std::uint64_t monotone_sequence_count(int d, int m) {
  std::uint64_t total = 0;
  enumerate_factorisations(Permutation::identity(d), m, {}, true, false,
                           [&](const FactorisationRecord&) { ++total; }, {std::max(d, 8), std::max(m, 10)});
  return total;
}

nlohmann::json IndependenceReport::to_json() const {
  return {{"input", {{"d", degree}, {"max_length", max_length}}},
          {"permutations_checked", permutations_checked},
          {"comparisons", comparisons},
          {"violations", violations}};
}

IndependenceReport check_cycle_type_independence(int d, int max_length, const Partition& only) {
  IndependenceReport report;
  report.degree = d;
  report.max_length = max_length;
  const Partition keep = canonical_partition(only);
  // reference tallies per conjugacy class of sigma
  std::map<Partition, std::pair<Permutation, Census>> reference;
  for (const auto& sigma : all_permutations(d)) {
    ++report.permutations_checked;
    Census c = run_census_from(sigma, true, max_length, {std::max(d, 8), std::max(max_length, 10)});
    const Partition type = sigma.cycle_type();
    auto it = reference.find(type);
    if (it == reference.end()) {
      reference.emplace(type, std::make_pair(sigma, std::move(c)));
      continue;
    }
    const auto& [ref_sigma, ref] = it->second;
    std::set<Census::PlainKey> keys;
    for (const auto& [k, v] : ref.plain) keys.insert(k);
    for (const auto& [k, v] : c.plain) keys.insert(k);
    for (const auto& key : keys) {
      if (!keep.empty() && key.second != keep) continue;
      ++report.comparisons;
      const auto lhs = ref.plain.count(key) ? ref.plain.at(key) : Census::PlainTally{};
      const auto rhs = c.plain.count(key) ? c.plain.at(key) : Census::PlainTally{};
      if (lhs.all != rhs.all || lhs.transitive != rhs.transitive) {
        report.violations.push_back("m=" + std::to_string(key.first) + " mu=" + partition_to_string(key.second) +
                                    ": sigma=" + ref_sigma.to_string() + " gives " + std::to_string(lhs.all) + "/" +
                                    std::to_string(lhs.transitive) + ", sigma=" + sigma.to_string() + " gives " +
                                    std::to_string(rhs.all) + "/" + std::to_string(rhs.transitive));
      }
    }
  }
  return report;
}

nlohmann::json count_report(Flavor flavor, int a, int g, const std::vector<int>& mu, CountMode mode,
                            const Rational& count, const std::vector<std::string>& violations) {
  return {{"input", {{"flavor", to_string(flavor)}, {"a", a}, {"g", g}, {"mu", mu}}},
          {"count", to_string(count)},
          {"mode", to_string(mode)},
          {"violations", violations}};
}

}  // namespace hurwitz
