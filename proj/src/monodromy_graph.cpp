#include "hurwitz/monodromy_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace hurwitz {

namespace {

const char* colour_name(EdgeColour c) {
  switch (c) {
    case EdgeColour::Normal: return "normal";
    case EdgeColour::Dashed: return "dashed";
    case EdgeColour::Bold: return "bold";
  }
  return "?";
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int x, int y) { parent[find(x)] = find(y); }
};

}  // namespace

std::vector<int> MonodromyGraph::in_ends() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].source == GraphEdge::kLeaf) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<int> MonodromyGraph::out_ends() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].target == GraphEdge::kLeaf) out.push_back(static_cast<int>(i));
  }
  std::stable_sort(out.begin(), out.end(), [&](int x, int y) {
    const auto& ex = edges[x];
    const auto& ey = edges[y];
    const int cx = ex.colour == EdgeColour::Normal ? 0 : 1;
    const int cy = ey.colour == EdgeColour::Normal ? 0 : 1;
    return std::tie(ex.source, cx) < std::tie(ey.source, cy);
  });
  return out;
}

std::string MonodromyGraph::canonical() const {
  const auto outs = out_ends();
  std::vector<int> out_pos(edges.size(), 0);
  for (std::size_t p = 0; p < outs.size(); ++p) out_pos[outs[p]] = static_cast<int>(p);
  std::vector<std::tuple<int, int, int, int, int>> rows;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    const int target = e.target == GraphEdge::kLeaf ? inner_vertices + 1 + out_pos[i] : e.target;
    rows.emplace_back(e.source, target, e.weight, static_cast<int>(e.colour), e.counter);
  }
  std::sort(rows.begin(), rows.end());
  std::string s = "a=" + std::to_string(a) + " k=" + std::to_string(k) + " v=" + std::to_string(inner_vertices);
  for (const auto& [src, dst, w, c, ctr] : rows) {
    s += " " + std::to_string(src) + ">" + std::to_string(dst) + ":" + std::to_string(w) + colour_name(EdgeColour(c))[0] +
         std::to_string(ctr);
  }
  return s;
}

nlohmann::json MonodromyGraph::to_json() const {
  nlohmann::json es = nlohmann::json::array();
  for (const auto& e : edges) {
    nlohmann::json j = {{"source", e.source == GraphEdge::kLeaf ? nlohmann::json("in") : nlohmann::json(e.source)},
                        {"target", e.target == GraphEdge::kLeaf ? nlohmann::json("out") : nlohmann::json(e.target)},
                        {"weight", e.weight},
                        {"colour", colour_name(e.colour)}};
    if (e.colour != EdgeColour::Normal) j["counter"] = e.counter;
    es.push_back(std::move(j));
  }
  return {{"a", a}, {"k", k}, {"inner_vertices", inner_vertices}, {"edges", es}, {"canonical", canonical()}};
}

std::vector<MonodromyGraph::Chain> MonodromyGraph::bold_chains() const {
  const int E = static_cast<int>(edges.size());
  UnionFind uf(E);
  std::map<int, int> first_at_vertex;
  for (int i = 0; i < E; ++i) {
    if (edges[i].colour != EdgeColour::Bold) continue;
    for (int v : {edges[i].source, edges[i].target}) {
      if (v == GraphEdge::kLeaf) continue;
      auto [it, fresh] = first_at_vertex.emplace(v, i);
      if (!fresh) uf.unite(i, it->second);
    }
  }
  std::map<int, Chain> by_root;
  for (int i = 0; i < E; ++i) {
    if (edges[i].colour != EdgeColour::Bold) continue;
    auto& c = by_root[uf.find(i)];
    c.edges.push_back(i);
    for (int v : {edges[i].source, edges[i].target}) {
      if (v != GraphEdge::kLeaf) c.vertices.push_back(v);
    }
  }
  std::vector<Chain> chains;
  for (auto& [root, c] : by_root) {
    std::sort(c.vertices.begin(), c.vertices.end());
    c.vertices.erase(std::unique(c.vertices.begin(), c.vertices.end()), c.vertices.end());
    if (c.vertices.empty()) {
      c.adjacent_in_ends = 0;
      for (int e : c.edges) c.adjacent_in_ends += edges[e].source == GraphEdge::kLeaf;
    } else {
      for (const auto& e : edges) {
        if (e.source == GraphEdge::kLeaf && std::binary_search(c.vertices.begin(), c.vertices.end(), e.target)) {
          ++c.adjacent_in_ends;
        }
      }
    }
    chains.push_back(std::move(c));
  }
  std::sort(chains.begin(), chains.end(), [](const Chain& x, const Chain& y) {
    const int fx = x.vertices.empty() ? 0 : x.vertices.front();
    const int fy = y.vertices.empty() ? 0 : y.vertices.front();
    return fx < fy;
  });
  return chains;
}

std::vector<std::string> MonodromyGraph::violations(int g, const std::vector<int>& mu) const {
  std::vector<std::string> bad;
  auto fail = [&](std::string msg) { bad.push_back(std::move(msg)); };
  const int V_inner = inner_vertices;
  const auto ins = in_ends();
  const auto outs = out_ends();

  // graph conditions
  UnionFind uf(V_inner + 1);
  int leaf_to_leaf = 0;
  for (const auto& e : edges) {
    if (e.source != GraphEdge::kLeaf && e.target != GraphEdge::kLeaf) uf.unite(e.source, e.target);
    if (e.source == GraphEdge::kLeaf && e.target == GraphEdge::kLeaf) ++leaf_to_leaf;
    if (e.source != GraphEdge::kLeaf && e.target != GraphEdge::kLeaf && e.source >= e.target) {
      fail("edge " + std::to_string(e.source) + "->" + std::to_string(e.target) + " breaks the vertex order");
    }
  }
  bool connected = true;
  if (V_inner == 0) {
    connected = edges.size() == 1;
  } else {
    connected = leaf_to_leaf == 0;
    for (int v = 2; v <= V_inner; ++v) connected = connected && uf.find(v) == uf.find(1);
  }
  if (!connected) fail("graph is not connected");
  const long vertices = V_inner + static_cast<long>(ins.size() + outs.size());
  const long betti = static_cast<long>(edges.size()) - vertices + 1;
  if (connected && betti != g) fail("first Betti number " + std::to_string(betti) + " != " + std::to_string(g));
  if (static_cast<int>(ins.size()) != k) fail("expected " + std::to_string(k) + " in-ends");
  if (outs.size() != mu.size()) fail("expected " + std::to_string(mu.size()) + " out-ends");

  // weights
  std::vector<int> out_weights;
  for (int e : outs) out_weights.push_back(edges[e].weight);
  if (canonical_partition(out_weights) != canonical_partition(mu)) fail("out-end weights are not the parts of mu");
  for (int e : ins) {
    if (edges[e].weight != a) fail("in-end of weight " + std::to_string(edges[e].weight));
    if (edges[e].colour == EdgeColour::Normal) fail("normal in-end");
    else if (edges[e].counter != 1) fail("in-end counter " + std::to_string(edges[e].counter));
  }
  int bold_outs = 0;
  for (int e : outs) bold_outs += edges[e].colour == EdgeColour::Bold;
  if (bold_outs != 1) fail(std::to_string(bold_outs) + " bold out-ends");

  // counters
  for (const auto& e : edges) {
    if (e.weight <= 0) fail("non-positive weight");
    if (e.colour == EdgeColour::Normal) continue;
    if (e.counter < 1 || e.counter > a) fail("counter " + std::to_string(e.counter) + " outside 1..a");
    if (e.counter <= a - e.weight) {
      fail("edge of weight " + std::to_string(e.weight) + " has counter " + std::to_string(e.counter));
    }
  }

  // inner vertices: degree, balancing, colour pattern, counter monotonicity
  for (int v = 1; v <= V_inner; ++v) {
    std::vector<const GraphEdge*> in, out;
    for (const auto& e : edges) {
      if (e.target == v) in.push_back(&e);
      if (e.source == v) out.push_back(&e);
    }
    const std::string at = "vertex " + std::to_string(v) + ": ";
    if (in.size() + out.size() != 3 || in.empty() || out.empty()) {
      fail(at + "not trivalent with both directions");
      continue;
    }
    int win = 0, wout = 0;
    for (auto* e : in) win += e->weight;
    for (auto* e : out) wout += e->weight;
    if (win != wout) fail(at + "unbalanced");
    auto count = [](const std::vector<const GraphEdge*>& es, EdgeColour c) {
      return std::count_if(es.begin(), es.end(), [c](const GraphEdge* e) { return e->colour == c; });
    };
    const GraphEdge* bold_in = nullptr;
    for (auto* e : in) {
      if (e->colour == EdgeColour::Bold) bold_in = e;
    }
    bool pattern = false;
    if (in.size() == 1) {
      pattern = count(in, EdgeColour::Bold) == 1 && count(out, EdgeColour::Normal) == 1;
    } else {
      pattern = count(in, EdgeColour::Bold) == 1 && out[0]->colour != EdgeColour::Normal;
    }
    if (!pattern) fail(at + "colouring matches none of the six vertex types");
    if (bold_in) {
      for (auto* e : out) {
        if (e->colour != EdgeColour::Normal && bold_in->counter > e->counter) fail(at + "counter decreases");
      }
    }
  }

  // chains of bold edges
  const auto chains = bold_chains();
  std::vector<std::pair<int, int>> intervals;
  for (const auto& c : chains) {
    bool starts_at_in_end = false;
    for (int e : c.edges) starts_at_in_end = starts_at_in_end || edges[e].source == GraphEdge::kLeaf;
    if (!starts_at_in_end) fail("chain of bold edges does not begin at an in-end");
    if (!c.vertices.empty()) intervals.emplace_back(c.vertices.front(), c.vertices.back());
  }
  std::sort(intervals.begin(), intervals.end());
  for (std::size_t i = 1; i < intervals.size(); ++i) {
    if (intervals[i].first <= intervals[i - 1].second) fail("chain intervals intersect");
  }
  return bad;
}

MonodromyGraph build_monodromy_graph(const FactorisationRecord& f, int a) {
  const int d = f.sigma0.degree();
  if (a <= 0 || d % a != 0) throw std::invalid_argument("a must divide the degree");
  const int k = d / a;
  if (f.sigma0 != Permutation::special_sigma0(a, k)) throw std::invalid_argument("graph construction needs the special base point");
  if (!f.is_monotone()) throw std::invalid_argument("graph construction needs a monotone sequence");

  MonodromyGraph g;
  g.a = a;
  g.k = k;
  g.inner_vertices = static_cast<int>(f.transpositions.size());
  g.is_cut.assign(g.inner_vertices + 1, false);
  std::vector<int> owner(d);  // element -> edge currently representing its cycle
  for (int b = 0; b < k; ++b) {
    g.edges.push_back({GraphEdge::kLeaf, GraphEdge::kLeaf, a, EdgeColour::Dashed, 1});
    for (int x = b * a; x < (b + 1) * a; ++x) owner[x] = b;
  }
  Permutation tau = f.sigma0;
  int vertex = 0;
  for (auto [r, s] : f.transpositions) {
    ++vertex;
    const int counter = s % a + 1;
    const int er = owner[r], es = owner[s];
    tau = tau * Permutation::transposition(d, r, s);
    auto cycle_of = [&](int x) {
      std::vector<int> c;
      int y = x;
      do {
        c.push_back(y);
        y = tau(y);
      } while (y != x);
      return c;
    };
    if (er == es) {
      g.is_cut[vertex] = true;
      g.edges[er].target = vertex;
      g.edges[er].colour = EdgeColour::Bold;
      const auto cr = cycle_of(r), cs = cycle_of(s);
      const int nr = static_cast<int>(g.edges.size());
      g.edges.push_back({vertex, GraphEdge::kLeaf, static_cast<int>(cr.size()), EdgeColour::Normal, 0});
      g.edges.push_back({vertex, GraphEdge::kLeaf, static_cast<int>(cs.size()), EdgeColour::Dashed, counter});
      for (int x : cr) owner[x] = nr;
      for (int x : cs) owner[x] = nr + 1;
    } else {
      g.edges[er].target = vertex;
      g.edges[es].target = vertex;
      g.edges[es].colour = EdgeColour::Bold;
      const int w = g.edges[er].weight + g.edges[es].weight;
      const int ne = static_cast<int>(g.edges.size());
      g.edges.push_back({vertex, GraphEdge::kLeaf, w, EdgeColour::Dashed, counter});
      for (int x : cycle_of(s)) owner[x] = ne;
    }
  }
  const int last = f.transpositions.empty() ? d - 1 : f.transpositions.back().second;
  g.edges[owner[last]].colour = EdgeColour::Bold;
  return g;
}

BigInt chain_labelling_count(const MonodromyGraph& graph) {
  auto chains = graph.bold_chains();
  std::reverse(chains.begin(), chains.end());
  BigInt n = 1;
  long K = graph.k;
  for (const auto& c : chains) {
    const long ni = c.adjacent_in_ends;
    if (ni < 1 || ni > K) throw std::invalid_argument("malformed graph: chain in-end count out of range");
    n *= factorial(static_cast<unsigned>(K - 1));
    n /= factorial(static_cast<unsigned>(K - ni));
    K -= ni;
  }
  return n;
}

BigInt graph_multiplicity(const MonodromyGraph& graph) {
  BigInt m = chain_labelling_count(graph);
  for (int v = 1; v <= graph.inner_vertices; ++v) {
    if (graph.is_cut.size() > static_cast<std::size_t>(v) && graph.is_cut[v]) continue;
    int ins = 0;
    for (const auto& e : graph.edges) {
      if (e.target != v) continue;
      ++ins;
      if (e.colour != EdgeColour::Bold) m *= e.weight;
    }
    if (ins == 0) throw std::invalid_argument("malformed graph: vertex without ingoing edge");
  }
  return m;
}

nlohmann::json MultiplicityReport::to_json() const {
  return {{"input", {{"a", a}, {"g", g}, {"mu", mu}}},
          {"factorisations", factorisations},
          {"graphs", graphs},
          {"total", total.get_str()},
          {"expected", expected.get_str()},
          {"passed", passed()},
          {"violations", violations}};
}

MultiplicityReport verify_multiplicity_lemma(int a, int g, const std::vector<int>& mu, const EnumerationBudget& budget) {
  MultiplicityReport report;
  report.a = a;
  report.g = g;
  report.mu = mu;
  const int m = factorisation_length(Flavor::MonotoneOrbifold, a, g, mu);
  if (m < 0) {
    report.violations.push_back("no factorisations: m is negative or fractional");
    return report;
  }
  const int d = std::accumulate(mu.begin(), mu.end(), 0);
  const int k = d / a;
  struct Group {
    MonodromyGraph graph;
    std::uint64_t count = 0;
  };
  std::map<std::string, Group> groups;
  enumerate_factorisations(
      Permutation::special_sigma0(a, k), m, mu, true, true,
      [&](const FactorisationRecord& f) {
        ++report.factorisations;
        auto graph = build_monodromy_graph(f, a);
        auto key = graph.canonical();
        auto [it, fresh] = groups.try_emplace(key, Group{graph, 0});
        ++it->second.count;
      },
      budget);
  report.graphs = groups.size();
  const auto labels = static_cast<unsigned long>(labelling_multiplicity(mu));
  for (const auto& [key, grp] : groups) {
    for (const auto& v : grp.graph.violations(g, mu)) report.violations.push_back(key + ": " + v);
    const BigInt predicted = graph_multiplicity(grp.graph);
    if (predicted != BigInt(static_cast<unsigned long>(grp.count))) {
      report.violations.push_back(key + ": " + std::to_string(grp.count) + " factorisations, multiplicity formula gives " +
                                  predicted.get_str());
    }
    report.total += BigInt(static_cast<unsigned long>(grp.count)) * labels;
  }
  BigInt norm = factorial(k);
  for (int i = 0; i < k; ++i) norm *= a;
  const Rational h = count_factorisations(Flavor::MonotoneOrbifold, a, g, mu, CountMode::FixedSigma0, budget);
  const Rational expected = h * norm;
  if (expected.get_den() != 1) report.violations.push_back("a^k k! H is not an integer");
  report.expected = expected.get_num();
  if (report.total != report.expected) report.violations.push_back("grand total differs from a^k k! H");
  return report;
}

}  // namespace hurwitz
