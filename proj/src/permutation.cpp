#include "hurwitz/permutation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hurwitz {

Partition canonical_partition(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return parts;
}

namespace {

void partitions_rec(int remaining, int max_part, Partition& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    current.push_back(p);
    partitions_rec(remaining - p, p, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition current;
  partitions_rec(n, n, current, out);
  return out;
}

std::uint64_t labelling_multiplicity(const std::vector<int>& parts) {
  std::map<int, int> counts;
  for (int p : parts) ++counts[p];
  std::uint64_t m = 1;
  for (const auto& [part, c] : counts) {
    for (int i = 2; i <= c; ++i) m *= static_cast<std::uint64_t>(i);
  }
  return m;
}

std::string partition_to_string(const std::vector<int>& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts[i]);
  }
  return s;
}

std::vector<int> parse_parts(const std::string& text) {
  std::vector<int> parts;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(), ::isspace), token.end());
    if (token.empty()) throw std::invalid_argument("empty part in '" + text + "'");
    std::size_t used = 0;
    const int v = std::stoi(token, &used);
    if (used != token.size() || v <= 0) throw std::invalid_argument("parts must be positive integers: '" + text + "'");
    parts.push_back(v);
  }
  return parts;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[v]) throw std::invalid_argument("not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::transposition(int degree, int r, int s) {
  if (r == s || r < 0 || s < 0 || r >= degree || s >= degree) throw std::invalid_argument("bad transposition");
  auto p = identity(degree);
  std::swap(p.images_[r], p.images_[s]);
  return p;
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) img.at(c[i]) = c[(i + 1) % c.size()];
  }
  return Permutation(std::move(img));
}

Permutation Permutation::special_sigma0(int a, int k) {
  std::vector<std::vector<int>> cycles;
  for (int b = 0; b < k; ++b) {
    std::vector<int> c(a);
    std::iota(c.begin(), c.end(), b * a);
    cycles.push_back(std::move(c));
  }
  return from_cycles(a * k, cycles);
}

Permutation Permutation::parse(const std::string& text) {
  std::string t = text;
  std::replace(t.begin(), t.end(), ',', ' ');
  std::istringstream in(t);
  std::vector<int> img;
  int v;
  while (in >> v) img.push_back(v - 1);
  if (!in.eof()) throw std::invalid_argument("malformed permutation '" + text + "'");
  return Permutation(std::move(img));
}

Permutation operator*(const Permutation& first, const Permutation& then) {
  if (first.degree() != then.degree()) throw std::invalid_argument("degree mismatch in product");
  std::vector<int> img(first.degree());
  for (int i = 0; i < first.degree(); ++i) img[i] = then.images_[first.images_[i]];
  Permutation r;
  r.images_ = std::move(img);
  return r;
}

Permutation Permutation::inverse() const {
  std::vector<int> img(degree());
  for (int i = 0; i < degree(); ++i) img[images_[i]] = i;
  Permutation r;
  r.images_ = std::move(img);
  return r;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::vector<int> c;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      c.push_back(j);
    }
    out.push_back(std::move(c));
  }
  return out;
}

Partition Permutation::cycle_type() const {
  Partition t;
  for (const auto& c : cycles()) t.push_back(static_cast<int>(c.size()));
  return canonical_partition(std::move(t));
}

int Permutation::cycle_count() const { return static_cast<int>(cycles().size()); }

std::string Permutation::to_string() const {
  std::string s;
  for (int i = 0; i < degree(); ++i) {
    if (i) s += ' ';
    s += std::to_string(images_[i] + 1);
  }
  return s;
}

std::vector<Permutation> all_permutations(int degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::vector<Permutation> permutations_of_cycle_type(int degree, const Partition& type) {
  int total = 0;
  for (int p : type) total += p;
  if (total != degree) throw std::invalid_argument("cycle type does not sum to the degree");
  const Partition want = canonical_partition(type);
  std::vector<Permutation> out;
  for (auto& p : all_permutations(degree)) {
    if (p.cycle_type() == want) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace hurwitz
