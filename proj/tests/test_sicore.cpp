#include <doctest.h>

#include <algorithm>
#include <set>

#include "sig/error.hpp"
#include "sig/sicore.hpp"

using namespace sig;

TEST_CASE("partition counts") {
  CHECK(partition_count(1) == 1);
  CHECK(partition_count(4) == 5);
  CHECK(partition_count(6) == 11);
  CHECK(partition_count(10) == 42);
  CHECK(partition_count(100) == 190569292ULL);
  CHECK(partition_count(0) == 1);
}

TEST_CASE("partition enumeration order") {
  const auto p3 = enumerate_partitions(3);
  REQUIRE(p3.size() == 3);
  CHECK(p3[0] == Partition({3}));
  CHECK(p3[1] == Partition({2, 1}));
  CHECK(p3[2] == Partition({1, 1, 1}));
  CHECK(enumerate_partitions(2) == std::vector<Partition>{Partition({2}), Partition({1, 1})});
  CHECK(enumerate_partitions(5).size() == 7);
  for (int p = 1; p <= 12; ++p) {
    const auto all = enumerate_partitions(p);
    CHECK(all.size() == partition_count(p));
    CHECK(std::is_sorted(all.begin(), all.end(), [](const Partition& a, const Partition& b) { return a > b; }));
    for (const auto& part : all) CHECK(part.total() == p);
  }
}

TEST_CASE("partitions normalise their parts") {
  const Partition q({1, 3, 1});
  CHECK(q.parts() == std::vector<int>{3, 1, 1});
  CHECK(q.to_string() == "3,1,1");
  CHECK(q.count() == 3);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  CHECK(Partition::singletons(3) == Partition({1, 1, 1}));
  CHECK(Partition::whole(4) == Partition({4}));
}

TEST_CASE("SI-core descriptors") {
  const SICore c = SICore::make(2, 2, Partition({1, 1}), Partition({2}));
  CHECK(c.lambda1 == Partition({2}));
  CHECK(c.lambda2 == Partition({1, 1}));
  CHECK(c.to_string() == "2 2 | 2 | 1,1");
  CHECK_THROWS_AS(SICore::make(1, 2, Partition({2}), Partition({2})), DomainError);
  CHECK_THROWS_AS(SICore::make(2, 1, Partition({1}), Partition({1})), DomainError);
  CHECK_THROWS_AS(SICore::make(2, 3, Partition({2}), Partition({3})), DomainError);
}

TEST_CASE("counting G(s,p)") {
  CHECK(count_si_core(4, 6) == 66);
  CHECK(count_si_core(2, 2) == 3);
  CHECK(count_si_core(2, 3) == 6);
  CHECK_THROWS_AS(count_si_core(2, 1), DomainError);
  for (int s = 2; s <= 3; ++s)
    for (int p = 2; p <= 8; ++p) CHECK(enumerate_si_core(s, p).size() == count_si_core(s, p));
}

TEST_CASE("enumeration order and contents") {
  const auto g22 = enumerate_si_core(2, 2);
  REQUIRE(g22.size() == 3);
  CHECK(g22[0] == SICore::max(2, 2));
  CHECK(g22[1] == SICore::make(2, 2, Partition({2}), Partition({1, 1})));
  CHECK(g22[2] == SICore::min(2, 2));

  const auto g23 = enumerate_si_core(2, 3);
  CHECK(g23.front() == SICore::max(2, 3));
  CHECK(g23.back() == SICore::min(2, 3));
  CHECK(std::is_sorted(g23.begin(), g23.end(), canonical_before));
  for (int p = 2; p <= 6; ++p) CHECK(enumerate_si_core(3, p).front() == SICore::max(3, p));
}

TEST_CASE("realization") {
  SUBCASE("minimum core on 10 vertices") {
    const Graph g = realize(SICore::min(2, 3));
    CHECK(g.order() == 10);
    CHECK(g.size() == 18);
    CHECK(si_core_edge_count(SICore::min(2, 3)) == 18);
  }
  SUBCASE("maximum core adds p(p-1) edges") {
    CHECK(realize(SICore::max(2, 3)).size() == 24);
  }
  SUBCASE("degrees follow the layout") {
    const Graph g = realize(SICore::make(2, 2, Partition({2}), Partition({1, 1})));
    REQUIRE(g.order() == 8);
    std::vector<std::size_t> deg;
    for (Vertex v = 0; v < 8; ++v) deg.push_back(g.degree(v));
    CHECK(deg == std::vector<std::size_t>{5, 5, 5, 5, 3, 3, 2, 2});
  }
  SUBCASE("edge count formula matches the construction") {
    for (int s = 2; s <= 5; ++s)
      for (int p = 2; p <= 5; ++p)
        for (const SICore& c : enumerate_si_core(s, p)) CHECK(realize(c).size() == si_core_edge_count(c));
  }
}

TEST_CASE("recognition inverts realization") {
  for (int s = 2; s <= 4; ++s) {
    for (int p = 2; p <= 4; ++p) {
      for (const SICore& c : enumerate_si_core(s, p)) {
        const auto r = recognize_si_core(realize(c));
        REQUIRE_MESSAGE(r.core.has_value(), c.to_string() << ": " << r.reason);
        CHECK(*r.core == c);
      }
    }
  }
  CHECK_FALSE(recognize_si_core(path_graph(4)).core.has_value());

  // One extra simplicial vertex on S1 breaks the p1 = p2 balance.
  std::vector<Edge> edges = realize(SICore::min(2, 3)).edges();
  edges.push_back({0, 10});
  edges.push_back({1, 10});
  const auto r = recognize_si_core(Graph(11, edges));
  CHECK_FALSE(r.core.has_value());
  CHECK_FALSE(r.reason.empty());
}

TEST_CASE("recognition ignores vertex numbering") {
  const Graph g = realize(SICore::make(3, 4, Partition({3, 1}), Partition({2, 2})));
  std::vector<Vertex> perm(g.order());
  for (Vertex v = 0; v < g.order(); ++v) perm[v] = static_cast<Vertex>((v * 5 + 3) % g.order());
  std::vector<Edge> moved;
  for (const Edge& e : g.edges()) moved.push_back({perm[e.u], perm[e.v]});
  const auto r = recognize_si_core(Graph(g.order(), moved));
  REQUIRE(r.core.has_value());
  CHECK(*r.core == SICore::make(3, 4, Partition({3, 1}), Partition({2, 2})));
}
