#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sig/chordal.hpp"
#include "sig/classes.hpp"
#include "sig/error.hpp"
#include "sig/oracle.hpp"
#include "sig/sicore.hpp"

using namespace sig;

namespace {

Graph from(std::size_t n, std::initializer_list<Edge> edges) {
  const std::vector<Edge> e(edges);
  return Graph(n, e);
}

// Three legs of length two around a centre.
Graph spider() { return from(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}}); }

}  // namespace

TEST_CASE("critical clique graph") {
  SUBCASE("K4 collapses to one vertex") {
    const auto cc = critical_clique_graph(complete_graph(4));
    CHECK(cc.quotient.order() == 1);
    CHECK(cc.classes == std::vector<VertexSet>{{0, 1, 2, 3}});
  }
  SUBCASE("P4 is its own quotient") {
    CHECK(critical_clique_graph(path_graph(4)).quotient == path_graph(4));
  }
  SUBCASE("minimum core") {
    const auto cc = critical_clique_graph(realize(SICore::min(2, 3)));
    REQUIRE(cc.quotient.order() == 8);
    CHECK(cc.kinds[0] == ClassKind::separator);
    CHECK(cc.kinds[1] == ClassKind::separator);
    CHECK(cc.quotient.adjacent(0, 1));
    for (Vertex c = 2; c < 8; ++c) {
      CHECK(cc.kinds[c] == ClassKind::simplicial);
      CHECK(cc.quotient.degree(c) == 1);
    }
    CHECK(cc.quotient.degree(0) == 4);
    CHECK(cc.quotient.degree(1) == 4);
  }
  SUBCASE("the quotient has no true twins") {
    std::mt19937_64 rng(corpus_seed() + 3);
    for (int trial = 0; trial < 100; ++trial) {
      const Graph g = testing::random_graph(3 + trial % 8, 0.5, rng);
      const auto cc = critical_clique_graph(g);
      CHECK(true_twin_partition(cc.quotient).size() == cc.quotient.order());
      for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = u + 1; v < g.order(); ++v) {
          const auto cu = cc.class_of[u];
          const auto cv = cc.class_of[v];
          if (cu != cv) CHECK(g.adjacent(u, v) == cc.quotient.adjacent(static_cast<Vertex>(cu), static_cast<Vertex>(cv)));
        }
      }
    }
  }
}

TEST_CASE("block graphs") {
  CHECK(is_block_graph(path_graph(5)));
  CHECK_FALSE(is_block_graph(cycle_graph(4)));
  CHECK(is_block_graph(from(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}})));
  CHECK(is_block_graph(complete_graph(5)));
  CHECK_FALSE(is_block_graph(from(4, {{0, 1}, {2, 3}})));
}

TEST_CASE("strictly chordal graphs") {
  CHECK_FALSE(is_strictly_chordal(pattern_graph(Pattern::gem)).strictly_chordal);
  CHECK_FALSE(is_strictly_chordal(pattern_graph(Pattern::dart)).strictly_chordal);
  CHECK(is_strictly_chordal(realize(SICore::min(2, 3))).strictly_chordal);

  const auto c5 = is_strictly_chordal(cycle_graph(5));
  CHECK(c5.failure == ChordalFailure::not_chordal);
  const auto gem = is_strictly_chordal(pattern_graph(Pattern::gem));
  CHECK(gem.failure == ChordalFailure::intersecting_separators);
  REQUIRE(gem.intersecting.has_value());
  CHECK(gem.intersecting->first != gem.intersecting->second);
  CHECK_THROWS_AS(is_strictly_chordal(from(3, {{0, 1}})), DomainError);
}

TEST_CASE("interval oracle") {
  CHECK(is_interval_oracle(path_graph(4)));
  CHECK(is_interval_oracle(complete_graph(6)));
  CHECK_FALSE(is_interval_oracle(spider()));
  CHECK_THROWS_AS(is_interval_oracle(cycle_graph(4)), DomainError);
  CHECK_THROWS_AS(is_interval_oracle(path_graph(12)), DomainError);
}

TEST_CASE("forbidden pattern search") {
  const Graph& gem = pattern_graph(Pattern::gem);
  const auto self = find_induced(gem, Pattern::gem);
  REQUIRE(self.has_value());
  CHECK(*self == std::vector<Vertex>{0, 1, 2, 3, 4});
  CHECK_FALSE(find_induced(path_graph(4), Pattern::gem).has_value());
  CHECK_FALSE(find_induced(pattern_graph(Pattern::bipartite_claw), Pattern::two_net).has_value());
  CHECK(find_induced(path_graph(7), Pattern::path5).has_value());
  CHECK_FALSE(find_induced(cycle_graph(5), Pattern::path5).has_value());

  // An embedding is induced: its image reproduces the pattern exactly.
  const Graph host = realize(SICore::make(2, 3, Partition({2, 1}), Partition::singletons(3)));
  for (Pattern p : {Pattern::gem, Pattern::dart, Pattern::two_net, Pattern::bipartite_claw}) {
    if (auto hit = find_induced(host, p)) CHECK(host.induced(*hit) == pattern_graph(p));
  }
}

TEST_CASE("pattern names") {
  for (Pattern p : {Pattern::gem, Pattern::dart, Pattern::two_net, Pattern::bipartite_claw, Pattern::path5})
    CHECK(pattern_from_name(pattern_name(p)) == p);
  CHECK(pattern_name(Pattern::two_net) == "2net");
  CHECK_THROWS_AS(pattern_from_name("house"), std::invalid_argument);
  CHECK(pattern_graph(Pattern::gem).size() == 7);
  CHECK(pattern_graph(Pattern::dart).size() == 6);
  CHECK(pattern_graph(Pattern::two_net).size() == 6);
  CHECK(pattern_graph(Pattern::bipartite_claw).size() == 6);
  CHECK(pattern_graph(Pattern::bipartite_claw).order() == 7);
}

TEST_CASE("strictly interval recognition") {
  SUBCASE("obstructions") {
    const auto net = is_strictly_interval(pattern_graph(Pattern::two_net));
    CHECK_FALSE(net.strictly_interval);
    CHECK(net.failed_step == SigStep::derived_path);
    REQUIRE(net.path_witness.has_value());
    CHECK_FALSE(is_strictly_interval(pattern_graph(Pattern::bipartite_claw)).strictly_interval);
    const auto gem = is_strictly_interval(pattern_graph(Pattern::gem));
    CHECK(gem.failed_step == SigStep::strictly_chordal);
  }
  SUBCASE("complete graphs and paths") {
    const auto k5 = is_strictly_interval(complete_graph(5));
    CHECK(k5.strictly_interval);
    CHECK(k5.complete);
    CHECK(is_strictly_interval(path_graph(6)).strictly_interval);
    CHECK(is_strictly_interval(Graph(1)).strictly_interval);
  }
  SUBCASE("every SI-core graph is strictly interval") {
    for (int s = 2; s <= 4; ++s) {
      for (int p = 2; p <= 4; ++p) {
        for (const SICore& c : enumerate_si_core(s, p)) {
          const auto v = is_strictly_interval(realize(c));
          CHECK_MESSAGE(v.strictly_interval, c.to_string());
          CHECK(v.derived_classes.size() == 2);
        }
      }
    }
  }
  SUBCASE("spider fails on a class of degree three") {
    const auto v = is_strictly_interval(spider());
    CHECK_FALSE(v.strictly_interval);
    REQUIRE(v.path_witness.has_value());
    CHECK(v.path_witness->classes.size() >= 1);
  }
}
