#include "hurwitz/quasipoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "hurwitz/permutation.hpp"

namespace hurwitz {

CFactorParts c_factor_parts(int a, int mu) {
  if (a < 1 || mu < 1) throw std::invalid_argument("c_factor_parts needs a, mu >= 1");
  const int q = mu / a;
  return {binomial(mu + q, q), make_rational(mu % a, a)};
}

namespace {

// One forward difference along `axis` of a row-major box with extents `dims`.
std::vector<Rational> difference_along(const std::vector<Rational>& v, std::vector<int>& dims, int axis) {
  std::size_t inner = 1;
  for (std::size_t i = axis + 1; i < dims.size(); ++i) inner *= dims[i];
  std::size_t outer = 1;
  for (int i = 0; i < axis; ++i) outer *= dims[i];
  const int len = dims[axis];
  std::vector<Rational> out(outer * (len - 1) * inner);
  for (std::size_t o = 0; o < outer; ++o) {
    for (int t = 0; t + 1 < len; ++t) {
      for (std::size_t i = 0; i < inner; ++i) {
        out[(o * (len - 1) + t) * inner + i] = v[(o * len + t + 1) * inner + i] - v[(o * len + t) * inner + i];
      }
    }
  }
  --dims[axis];
  return out;
}

// Odometer over [0, cap]^n.
bool next_box(std::vector<int>& k, int cap) {
  int i = static_cast<int>(k.size()) - 1;
  while (i >= 0 && k[i] == cap) k[i--] = 0;
  if (i < 0) return false;
  ++k[i];
  return true;
}

}  // namespace

std::optional<DifferenceWitness> nonzero_difference(const SampleGrid& grid, int order) {
  const int n = grid.n;
  const int cap = grid.points - 1;
  if (order > n * cap) return std::nullopt;
  std::vector<int> k(n, 0);
  do {
    int sum = 0;
    for (int x : k) sum += x;
    if (sum != order) continue;
    std::vector<int> dims(n, grid.points);
    std::vector<Rational> v = grid.values;
    for (int axis = 0; axis < n; ++axis) {
      for (int r = 0; r < k[axis]; ++r) v = difference_along(v, dims, axis);
    }
    for (std::size_t flat = 0; flat < v.size(); ++flat) {
      if (v[flat] == 0) continue;
      std::vector<int> base(n);
      std::size_t f = flat;
      for (int i = n - 1; i >= 0; --i) {
        base[i] = static_cast<int>(f % dims[i]);
        f /= dims[i];
      }
      return DifferenceWitness{k, base, v[flat]};
    }
  } while (next_box(k, cap));
  return std::nullopt;
}

std::optional<int> difference_degree(const SampleGrid& grid) {
  for (int order = 0; order <= grid.points - 1; ++order) {
    if (!nonzero_difference(grid, order)) return order - 1;
  }
  return std::nullopt;
}

bool QuasiPolyReport::passed() const {
  if (!asymmetric.empty()) return false;
  for (const auto& c : classes) {
    if (!c.vanishes) return false;
  }
  const bool all_zero = classes.empty();
  return attained || all_zero;
}

nlohmann::json QuasiPolyReport::to_json() const {
  nlohmann::json j;
  j["a"] = a;
  j["g"] = g;
  j["n"] = n;
  j["bound"] = bound;
  j["expected_degree"] = expected_degree;
  j["classes"] = nlohmann::json::array();
  for (const auto& c : classes) {
    nlohmann::json e{{"residue", c.residue}, {"first", c.first}, {"vanishes", c.vanishes}};
    if (c.degree >= -1) {
      e["degree"] = c.degree;
    } else {
      e["degree"] = nullptr;
    }
    if (c.failure) {
      e["first_failure"] = {{"orders", c.failure->orders}, {"base", c.failure->base}, {"value", to_string(c.failure->value)}};
    }
    j["classes"].push_back(std::move(e));
  }
  j["zero_classes"] = zero_classes;
  j["asymmetric"] = asymmetric;
  j["attained"] = attained;
  j["passed"] = passed();
  return j;
}

QuasiPolyReport quasipoly_check(CutJoinEngine& engine, int a, int g, int n, int bound) {
  if (a < 1 || g < 0 || n < 1 || 2 * g - 2 + n <= 0) throw std::invalid_argument("quasipoly_check needs stable (g,n)");
  QuasiPolyReport rep;
  rep.a = a;
  rep.g = g;
  rep.n = n;
  rep.bound = bound;
  rep.expected_degree = 3 * g - 3 + n;
  const int order = rep.expected_degree + 1;

  // Sample points per residue: mu = r + a t, mu >= 1, mu <= bound.
  auto first_of = [a](int r) { return r == 0 ? a : r; };
  int points = bound;
  for (int r = 0; r < a; ++r) points = std::min(points, first_of(r) <= bound ? (bound - first_of(r)) / a + 1 : 0);
  if (points < order + 1) {
    throw std::invalid_argument("grid bound " + std::to_string(bound) + " gives " + std::to_string(points) +
                                " points per class; order " + std::to_string(order) + " differences need " +
                                std::to_string(order + 1));
  }

  std::vector<int> res(n, 0);
  while (true) {
    int sum = 0;
    for (int r : res) sum += r;
    if (sum % a == 0) {
      SampleGrid grid{n, points, {}};
      std::size_t total = 1;
      for (int i = 0; i < n; ++i) total *= points;
      grid.values.reserve(total);
      for (std::size_t flat = 0; flat < total; ++flat) {
        std::vector<int> mu(n);
        std::size_t f = flat;
        for (int i = n - 1; i >= 0; --i) {
          mu[i] = first_of(res[i]) + a * static_cast<int>(f % points);
          f /= points;
        }
        Rational h = engine.hurwitz(a, g, mu);
        Rational q = h;
        for (int m : mu) q /= Rational(c_factor_parts(a, m).binomial);
        grid.values.push_back(q);
        auto perm = mu;
        std::sort(perm.begin(), perm.end());
        do {
          if (perm != mu && engine.hurwitz(a, g, perm) != h) rep.asymmetric.push_back(partition_to_string(mu));
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
      std::vector<int> first(n);
      for (int i = 0; i < n; ++i) first[i] = first_of(res[i]);
      const bool zero = std::all_of(grid.values.begin(), grid.values.end(), [](const Rational& v) { return v == 0; });
      if (zero) {
        rep.zero_classes.push_back(first);
      } else {
        ClassResult c;
        c.residue = res;
        c.first = first;
        c.failure = nonzero_difference(grid, order);
        c.vanishes = !c.failure;
        c.degree = difference_degree(grid).value_or(-2);
        if (c.degree == rep.expected_degree) rep.attained = true;
        rep.classes.push_back(std::move(c));
      }
    }
    int i = n - 1;
    while (i >= 0 && res[i] == a - 1) res[i--] = 0;
    if (i < 0) break;
    ++res[i];
  }
  return rep;
}

}  // namespace hurwitz
