#include <doctest.h>

#include "hurwitz/factorisation.hpp"

using namespace hurwitz;

TEST_CASE("permutation product acts left to right") {
  const auto p = Permutation::parse("2 3 1");
  const auto t = Permutation::transposition(3, 0, 1);
  CHECK((p * t).to_string() == "1 3 2");
  CHECK((t * p).to_string() == "3 2 1");
  CHECK(Permutation::special_sigma0(2, 2).to_string() == "2 1 4 3");
  CHECK(p.cycle_type() == Partition{3});
}

TEST_CASE("monotone orbifold counts from the definition") {
  for (auto mode : {CountMode::FixedSigma0, CountMode::Free}) {
    CHECK(count_factorisations(Flavor::MonotoneOrbifold, 2, 0, {2}, mode) == make_rational(1, 2));
    CHECK(count_factorisations(Flavor::MonotoneOrbifold, 1, 0, {1, 1}, mode) == 1);
    CHECK(count_factorisations(Flavor::MonotoneOrbifold, 1, 0, {3}, mode) == make_rational(2, 3));
  }
  CHECK(count_factorisations(Flavor::MonotoneOrbifold, 2, 0, {3}, CountMode::Free) == 0);
}

TEST_CASE("refined counts") {
  CHECK(count_refined(3, 0, 3, 1, {}) == make_rational(1, 3));
  CHECK(count_refined(3, 0, 3, 2, {}) == 0);
  CHECK(count_refined(1, 0, 2, 1, {}) == make_rational(1, 2));
  CHECK(count_refined(2, 0, 4, 1, {}) == make_rational(1, 4));
  CHECK(count_refined(2, 0, 2, 2, {1, 1}) == make_rational(7, 2));
  CHECK(count_refined(1, 0, 1, 1, {1, 1}) == make_rational(8, 3));
  CHECK(count_refined(2, 1, 2, 2, {}) == make_rational(1, 2));
  CHECK(count_refined(3, 0, 2, 3, {1, 3}) == make_rational(7, 2));
  CHECK(count_refined(1, 0, 2, 1, {1, 1}) == 12);
}

TEST_CASE("refined values sum to the plain count") {
  for (int a : {1, 2, 3}) {
    for (int d = a; d <= 6; d += a) {
      const int max_len = 7;
      auto census = run_census(Flavor::MonotoneOrbifold, a, d, max_len, CountMode::FixedSigma0);
      for (const auto& mu : partitions_of(d)) {
        for (int g = 0; g <= 2; ++g) {
          const int m = factorisation_length(Flavor::MonotoneOrbifold, a, g, mu);
          if (m < 0 || m > max_len) continue;
          Rational sum = 0;
          for (std::size_t i = 0; i < mu.size(); ++i) {
            std::vector<int> rest = mu;
            rest.erase(rest.begin() + static_cast<long>(i));
            for (int ell = 1; ell <= a; ++ell) sum += census.refined_hurwitz(g, mu[i], ell, rest);
          }
          CAPTURE(a);
          CAPTURE(g);
          CAPTURE(partition_to_string(mu));
          CHECK(sum == census.hurwitz(g, mu));
        }
      }
    }
  }
}

TEST_CASE("census agrees with depth-first enumeration and free mode") {
  struct Case {
    Flavor f;
    int a, g;
    std::vector<int> mu;
  };
  const std::vector<Case> cases = {
      {Flavor::MonotoneOrbifold, 2, 0, {1, 1, 2}}, {Flavor::MonotoneOrbifold, 2, 1, {2, 2}},
      {Flavor::MonotoneOrbifold, 3, 0, {2, 4}},    {Flavor::Monotone, 1, 1, {2, 1}},
      {Flavor::Simple, 1, 0, {2, 1}},              {Flavor::Orbifold, 2, 0, {3, 1}},
      {Flavor::Simple, 1, 1, {2}},
  };
  for (const auto& c : cases) {
    const auto fixed = count_factorisations(c.f, c.a, c.g, c.mu, CountMode::FixedSigma0);
    CHECK(fixed == count_factorisations(c.f, c.a, c.g, c.mu, CountMode::Free));
    CHECK(fixed == count_factorisations_dfs(c.f, c.a, c.g, c.mu));
  }
  // labelled cycles: ((12),(12)) with two labellings; six ordered pairs giving a 3-cycle.
  CHECK(count_factorisations(Flavor::Simple, 1, 0, {1, 1}, CountMode::Free) == 1);
  CHECK(count_factorisations(Flavor::Simple, 1, 0, {3}, CountMode::Free) == 1);
}

TEST_CASE("budget is enforced") {
  CHECK_THROWS_AS(count_factorisations(Flavor::MonotoneOrbifold, 1, 0, {9}, CountMode::FixedSigma0), BudgetExceeded);
  CHECK_THROWS_AS(count_factorisations(Flavor::MonotoneOrbifold, 1, 4, {4}, CountMode::FixedSigma0), BudgetExceeded);
  CHECK(count_factorisations(Flavor::MonotoneOrbifold, 1, 4, {4}, CountMode::FixedSigma0, {8, 12}) > 0);
}

TEST_CASE("monotone sequences are counted by Stirling numbers") {
  CHECK(monotone_sequence_count(3, 1) == 3);
  for (int d = 1; d <= 5; ++d) {
    for (int m = 0; m <= 4; ++m) CHECK(BigInt(static_cast<unsigned long>(monotone_sequence_count(d, m))) == stirling2(d + m - 1, d - 1));
  }
}

TEST_CASE("cycle type independence") {
  CHECK(check_cycle_type_independence(3, 1, {2, 1}).violations.empty());
  CHECK(check_cycle_type_independence(2, 4).violations.empty());
  auto r = check_cycle_type_independence(4, 2, {4});
  CHECK(r.violations.empty());
  CHECK(r.comparisons > 0);
}

#include "hurwitz/monodromy_graph.hpp"

TEST_CASE("graph of the empty factorisation") {
  FactorisationRecord f{Permutation::special_sigma0(2, 1), {}};
  auto g = build_monodromy_graph(f, 2);
  CHECK(g.inner_vertices == 0);
  REQUIRE(g.edges.size() == 1);
  CHECK(g.edges[0].colour == EdgeColour::Bold);
  CHECK(g.edges[0].counter == 1);
  CHECK(g.violations(0, {2}).empty());
  CHECK(graph_multiplicity(g) == 1);
}

TEST_CASE("graph of a single join") {
  FactorisationRecord f{Permutation::identity(2), {{0, 1}}};
  auto g = build_monodromy_graph(f, 1);
  CHECK(g.inner_vertices == 1);
  CHECK(g.in_ends().size() == 2);
  const auto outs = g.out_ends();
  REQUIRE(outs.size() == 1);
  CHECK(g.edges[outs[0]].weight == 2);
  CHECK(g.edges[outs[0]].colour == EdgeColour::Bold);
  CHECK(g.edges[outs[0]].counter == 1);
  CHECK(g.violations(0, {2}).empty());
  CHECK(graph_multiplicity(g) == 1);
}

TEST_CASE("multiplicity lemma by grouping") {
  struct Case {
    int a, g;
    std::vector<int> mu;
  };
  for (const auto& c : std::vector<Case>{{1, 0, {2}}, {1, 0, {1, 1}}, {1, 1, {1}}, {2, 0, {1, 1, 2}}, {2, 0, {4}},
                                         {3, 0, {1, 2, 3}}, {2, 1, {2, 2}}}) {
    auto r = verify_multiplicity_lemma(c.a, c.g, c.mu);
    CAPTURE(r.to_json().dump());
    CHECK(r.passed());
  }
  auto r = verify_multiplicity_lemma(2, 0, {1, 1, 2});
  CHECK(r.graphs == 24);
  CHECK(r.total == 72);
}

TEST_CASE("graphs of the (1,1,2) shape") {
  // two weight-2 in-ends, three inner vertices, bold out-end of weight 2 and counter 2
  int found = 0;
  enumerate_factorisations(Permutation::special_sigma0(2, 2), 3, {2, 1, 1}, true, true,
                           [&](const FactorisationRecord& f) {
                             auto g = build_monodromy_graph(f, 2);
                             CHECK(g.violations(0, {1, 1, 2}).empty());
                             for (int e : g.out_ends()) {
                               const auto& edge = g.edges[e];
                               if (edge.colour == EdgeColour::Bold && edge.weight == 2 && edge.counter == 2) ++found;
                             }
                           });
  CHECK(found > 0);
}
