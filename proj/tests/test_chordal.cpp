#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "sig/chordal.hpp"
#include "sig/classes.hpp"
#include "sig/error.hpp"
#include "sig/oracle.hpp"
#include "sig/sicore.hpp"

using namespace sig;
using sig::testing::all_clique_trees;
using sig::testing::brute_maximal_cliques;

namespace {

Graph star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph(leaves + 1, edges);
}

Graph gmin23() { return realize(SICore::min(2, 3)); }

}  // namespace

TEST_CASE("maximum cardinality search") {
  SUBCASE("C4 is not chordal") {
    const PeoResult r = mcs_peo(cycle_graph(4));
    CHECK_FALSE(r.chordal);
    REQUIRE(r.violating.has_value());
    CHECK_FALSE(is_chordal(cycle_graph(4)));
  }
  SUBCASE("trees are chordal") {
    const PeoResult r = mcs_peo(star(5));
    CHECK(r.chordal);
    CHECK_FALSE(peo_violation(star(5), r.order).has_value());
  }
  SUBCASE("gem is chordal") {
    CHECK(mcs_peo(pattern_graph(Pattern::gem)).chordal);
  }
  SUBCASE("disconnected input is outside the domain") {
    const std::vector<Edge> two{{0, 1}, {2, 3}};
    CHECK_THROWS_AS(mcs_peo(Graph(4, two)), DomainError);
    CHECK(is_chordal(Graph(4, two)));
  }
}

TEST_CASE("leaf-first orderings of a tree are perfect") {
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {1, 3}, {3, 4}};
  const Graph t(5, edges);
  const std::vector<Vertex> order{0, 2, 4, 3, 1};
  CHECK_FALSE(peo_violation(t, order).has_value());
  const std::vector<Vertex> bad{1, 0, 2, 3, 4};
  CHECK(peo_violation(t, bad).has_value());
  const std::vector<Vertex> short_order{0, 1};
  CHECK_THROWS_AS(peo_violation(t, short_order), std::invalid_argument);
}

TEST_CASE("maximal cliques") {
  CHECK(maximal_cliques(complete_graph(4), mcs_peo(complete_graph(4)).order) ==
        std::vector<VertexSet>{{0, 1, 2, 3}});
  CHECK(maximal_cliques(path_graph(4), mcs_peo(path_graph(4)).order) ==
        std::vector<VertexSet>{{0, 1}, {1, 2}, {2, 3}});

  const Graph g = gmin23();
  const auto q = maximal_cliques(g, mcs_peo(g).order);
  CHECK(q.size() == 7);
  CHECK(q == brute_maximal_cliques(g));
  CHECK(std::count_if(q.begin(), q.end(), [](const VertexSet& c) { return c.size() == 4; }) == 1);
  CHECK(std::count_if(q.begin(), q.end(), [](const VertexSet& c) { return c.size() == 3; }) == 6);

  const std::vector<Vertex> identity{0, 1, 2, 3};
  CHECK_THROWS_AS(maximal_cliques(cycle_graph(4), identity), DomainError);
}

TEST_CASE("maximal cliques agree with subset enumeration on random chordal graphs") {
  std::mt19937_64 rng(corpus_seed());
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_connected_chordal(2 + trial % 11, rng);
    const PeoResult r = mcs_peo(g);
    REQUIRE(r.chordal);
    CHECK(maximal_cliques(g, r.order) == brute_maximal_cliques(g));
  }
}

TEST_CASE("clique trees") {
  SUBCASE("P4 is a path of three cliques") {
    const CliqueTree ct = clique_tree(path_graph(4));
    CHECK(ct.cliques.size() == 3);
    CHECK(ct.edges.size() == 2);
    CHECK(is_valid_clique_tree(ct));
    CHECK(minimal_separators(ct) == SeparatorSet{{{1}, 1}, {{2}, 1}});
  }
  SUBCASE("K4 is a single node") {
    const CliqueTree ct = clique_tree(complete_graph(4));
    CHECK(ct.cliques.size() == 1);
    CHECK(ct.edges.empty());
    CHECK(minimal_separators(ct).empty());
  }
  SUBCASE("star K1,4 repeats the centre three times") {
    const CliqueTree ct = clique_tree(star(4));
    CHECK(ct.cliques.size() == 4);
    CHECK(minimal_separators(ct) == SeparatorSet{{{0}, 3}});
  }
  SUBCASE("minimum core has two separators of multiplicity three") {
    const CliqueTree ct = clique_tree(gmin23());
    CHECK(is_valid_clique_tree(ct));
    CHECK(minimal_separators(ct) == SeparatorSet{{{0, 1}, 3}, {{2, 3}, 3}});
  }
  SUBCASE("non-chordal input is outside the domain") {
    CHECK_THROWS_AS(clique_tree(cycle_graph(5)), DomainError);
  }
}

TEST_CASE("clique tree validation rejects broken trees") {
  CliqueTree ct = clique_tree(path_graph(4));
  CliqueTree wrong_label = ct;
  wrong_label.edges[0].separator = {0};
  CHECK_FALSE(is_valid_clique_tree(wrong_label));
  // {0,1} - {2,3} - {1,2}: vertex 1's cliques are not connected.
  CliqueTree wrong_shape = ct;
  wrong_shape.edges = {{0, 2, {}}, {1, 2, {2}}};
  CHECK_FALSE(is_valid_clique_tree(wrong_shape));
}

TEST_CASE("separator multiset is the same for every clique tree") {
  std::mt19937_64 rng(corpus_seed() + 1);
  for (int trial = 0; trial < 120; ++trial) {
    const Graph g = random_connected_chordal(3 + trial % 6, rng);
    const CliqueTree ct = clique_tree(g);
    REQUIRE(is_valid_clique_tree(ct));
    const SeparatorSet mine = minimal_separators(ct);
    std::size_t mu_total = 0;
    for (const auto& s : mine) mu_total += s.multiplicity;
    CHECK(mu_total + 1 == ct.cliques.size());
    for (const CliqueTree& other : all_clique_trees(ct.cliques)) CHECK(minimal_separators(other) == mine);

    // With pairwise disjoint separators, one of multiplicity mu lies in
    // exactly mu + 1 maximal cliques. Nested separators break this.
    if (!is_strictly_chordal(g).strictly_chordal) continue;
    for (const auto& s : mine) {
      const auto holding = std::count_if(ct.cliques.begin(), ct.cliques.end(), [&](const VertexSet& q) {
        return std::includes(q.begin(), q.end(), s.vertices.begin(), s.vertices.end());
      });
      CHECK(static_cast<std::size_t>(holding) == s.multiplicity + 1);
    }
  }
}

TEST_CASE("simplicial vertices and the derived graph") {
  CHECK(simplicial_vertices(path_graph(4)) == VertexSet{0, 3});
  CHECK(simplicial_vertices(complete_graph(4)) == VertexSet{0, 1, 2, 3});
  CHECK(simplicial_vertices(pattern_graph(Pattern::gem)) == VertexSet{1, 4});

  CHECK(derived_graph(complete_graph(4)).graph.order() == 0);
  const InducedSubgraph p4 = derived_graph(path_graph(4));
  CHECK(p4.graph == path_graph(2));
  CHECK(p4.original == std::vector<Vertex>{1, 2});
  const InducedSubgraph p5 = derived_graph(path_graph(5));
  CHECK(p5.graph == path_graph(3));
  CHECK(p5.original == std::vector<Vertex>{1, 2, 3});
}

TEST_CASE("boundary cliques") {
  {
    const Graph g = path_graph(4);
    const CliqueTree ct = clique_tree(g);
    std::vector<VertexSet> b;
    for (std::size_t i : boundary_cliques(g, ct)) b.push_back(ct.cliques[i]);
    CHECK(b == std::vector<VertexSet>{{0, 1}, {2, 3}});
  }
  {
    const Graph g = complete_graph(4);
    CHECK(boundary_cliques(g, clique_tree(g)) == std::vector<std::size_t>{0});
  }
  {
    const Graph g = gmin23();
    const CliqueTree ct = clique_tree(g);
    const auto b = boundary_cliques(g, ct);
    CHECK(b.size() == 6);
    for (std::size_t i : b) CHECK(ct.cliques[i].size() == 3);
  }
}

TEST_CASE("boundary cliques are exactly the leaves of some clique tree") {
  std::mt19937_64 rng(corpus_seed() + 2);
  for (int trial = 0; trial < 120; ++trial) {
    const Graph g = random_connected_chordal(3 + trial % 6, rng);
    const CliqueTree ct = clique_tree(g);
    if (ct.cliques.size() < 2) continue;
    std::set<std::size_t> leaves;
    for (const CliqueTree& t : all_clique_trees(ct.cliques)) {
      std::vector<int> degree(ct.cliques.size(), 0);
      for (const TreeEdge& e : t.edges) {
        ++degree[e.a];
        ++degree[e.b];
      }
      for (std::size_t i = 0; i < degree.size(); ++i)
        if (degree[i] == 1) leaves.insert(i);
    }
    const auto b = boundary_cliques(g, ct);
    CHECK(std::set<std::size_t>(b.begin(), b.end()) == leaves);
  }
}
