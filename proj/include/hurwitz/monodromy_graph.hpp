#ifndef HURWITZ_MONODROMY_GRAPH_HPP
#define HURWITZ_MONODROMY_GRAPH_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "hurwitz/factorisation.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

enum class EdgeColour { Normal = 0, Dashed = 1, Bold = 2 };

/// Leaf endpoints are not stored as vertices: an in-end has source kLeaf and
/// an out-end has target kLeaf. Inner vertices are numbered 1..m in order.
struct GraphEdge {
  static constexpr int kLeaf = 0;
  int source = kLeaf;
  int target = kLeaf;
  int weight = 0;
  EdgeColour colour = EdgeColour::Dashed;
  int counter = 0;  // 0 for normal edges
};

class MonodromyGraph {
 public:
  int a = 1;
  int k = 0;
  int inner_vertices = 0;
  std::vector<GraphEdge> edges;
  /// true at vertices created by a cut
  std::vector<bool> is_cut;  // indexed 1..inner_vertices (slot 0 unused)

  std::vector<int> in_ends() const;
  /// Out-ends in their natural order: by source vertex, the normal end first.
  std::vector<int> out_ends() const;

  /// Byte-comparable serialization; equal graphs serialize identically.
  std::string canonical() const;
  nlohmann::json to_json() const;

  /// Every violated condition, empty when the graph is a monotone monodromy
  /// graph of type (g, mu).
  std::vector<std::string> violations(int g, const std::vector<int>& mu) const;

  struct Chain {
    std::vector<int> edges;
    std::vector<int> vertices;  // sorted
    int adjacent_in_ends = 0;
  };
  /// Chains of bold edges ordered by their first inner vertex.
  std::vector<Chain> bold_chains() const;
};

/// Applies the inductive construction. Throws std::invalid_argument when the
/// record does not use the special base point or is not monotone.
MonodromyGraph build_monodromy_graph(const FactorisationRecord& f, int a);

/// n_Gamma: product of (K_i - 1)!/(K_i - n_i)! over the chains listed from
/// the last one backwards, with K_1 = k and K_{i+1} = K_i - n_i.
BigInt chain_labelling_count(const MonodromyGraph& graph);
BigInt graph_multiplicity(const MonodromyGraph& graph);

struct MultiplicityReport {
  int a = 1, g = 0;
  std::vector<int> mu;
  std::size_t factorisations = 0;
  std::size_t graphs = 0;
  BigInt total = 0;     // sum over graphs times the labelling count
  BigInt expected = 0;  // a^k k! H
  std::vector<std::string> violations;
  bool passed() const { return violations.empty() && total == expected; }
  nlohmann::json to_json() const;
};

MultiplicityReport verify_multiplicity_lemma(int a, int g, const std::vector<int>& mu,
                                             const EnumerationBudget& budget = {});

}  // namespace hurwitz

#endif  // HURWITZ_MONODROMY_GRAPH_HPP
