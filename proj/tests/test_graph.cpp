#include <doctest.h>

#include <stdexcept>

#include "sig/error.hpp"
#include "sig/graph.hpp"
#include "sig/sicore.hpp"

using namespace sig;

TEST_CASE("edges collapse, are ordered and symmetric") {
  const std::vector<Edge> edges{{2, 1}, {0, 1}, {1, 2}, {1, 0}};
  const Graph g(3, edges);
  CHECK(g.order() == 3);
  CHECK(g.size() == 2);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(g.adjacent(2, 1));
  CHECK(g.adjacent(1, 2));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.degree(1) == 2);
}

TEST_CASE("invalid edges are rejected") {
  const std::vector<Edge> loop{{1, 1}};
  const std::vector<Edge> outside{{0, 3}};
  CHECK_THROWS_AS(Graph(3, loop), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, outside), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3).neighbors(3), std::out_of_range);
}

TEST_CASE("parsing the edge-list format") {
  SUBCASE("path with header") {
    const Graph g = parse_edge_list("4\n0 1\n1 2\n2 3\n");
    CHECK(g == path_graph(4));
  }
  SUBCASE("isolated vertices only") {
    const Graph g = parse_edge_list("2\n");
    CHECK(g.order() == 2);
    CHECK(g.size() == 0);
  }
  SUBCASE("duplicate edges collapse") {
    const Graph g = parse_edge_list("3\n0 1\n0 1\n1 2\n");
    CHECK(g.size() == 2);
    CHECK(g == path_graph(3));
  }
  SUBCASE("comments, blank lines, CRLF and no trailing newline") {
    const Graph g = parse_edge_list("# a comment\n\n3\r\n# another\n0 1\r\n1 2");
    CHECK(g == path_graph(3));
  }
  SUBCASE("header is optional and may exceed the largest index") {
    CHECK(parse_edge_list("0 1\n1 2\n").order() == 3);
    CHECK(parse_edge_list("6\n0 1\n").order() == 6);
    CHECK(parse_edge_list("2\n0 4\n").order() == 5);
  }
  SUBCASE("empty input is the empty graph") {
    CHECK(parse_edge_list("").order() == 0);
  }
}

TEST_CASE("parse errors carry line numbers") {
  auto line_of = [](std::string_view text) {
    try {
      parse_edge_list(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  CHECK(line_of("3\n0 1\n1 x\n") == 3);
  CHECK(line_of("3\n0 -1\n") == 2);
  CHECK(line_of("3\n0 1 2\n") == 2);
  CHECK(line_of("# c\n3\n\n2 2\n") == 4);
  CHECK(line_of("3\n0\n") == 2);
  CHECK_THROWS_WITH_AS(parse_edge_list("3\n0 1\n1 x\n"), doctest::Contains("line 3"), ParseError);
}

TEST_CASE("labeled edge lists remap in first-seen order") {
  const LabeledGraph lg = parse_labeled_edge_list("100 200\n200 300\n300 100\n300 7\n");
  CHECK(lg.labels == std::vector<std::uint64_t>{100, 200, 300, 7});
  CHECK(lg.graph.size() == 4);
  CHECK(lg.graph.adjacent(2, 3));
  const LabeledGraph padded = parse_labeled_edge_list("4\n5 9\n");
  CHECK(padded.labels == std::vector<std::uint64_t>{5, 9, 10, 11});
}

TEST_CASE("rendering round-trips") {
  const Graph g = cycle_graph(5);
  CHECK(render_edge_list(g) == "5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
  CHECK(parse_edge_list(render_edge_list(g)) == g);
}

TEST_CASE("closed neighbourhoods") {
  CHECK(closed_neighborhood(path_graph(4), 1) == VertexSet{0, 1, 2});
  CHECK(closed_neighborhood(complete_graph(4), 2) == VertexSet{0, 1, 2, 3});
  CHECK(closed_neighborhood(Graph(3), 1) == VertexSet{1});
}

TEST_CASE("true-twin classes") {
  CHECK(true_twin_partition(complete_graph(4)) == std::vector<VertexSet>{{0, 1, 2, 3}});
  CHECK(true_twin_partition(path_graph(4)) == std::vector<VertexSet>{{0}, {1}, {2}, {3}});

  // Simplicial vertices of the minimum core are false twins only.
  const auto classes = true_twin_partition(realize(SICore::min(2, 3)));
  REQUIRE(classes.size() == 8);
  CHECK(classes[0] == VertexSet{0, 1});
  CHECK(classes[1] == VertexSet{2, 3});
  for (std::size_t i = 2; i < 8; ++i) CHECK(classes[i].size() == 1);
}

TEST_CASE("connectivity") {
  CHECK(is_connected(path_graph(4)));
  const std::vector<Edge> two{{0, 1}, {2, 3}};
  CHECK_FALSE(is_connected(Graph(4, two)));
  CHECK(is_connected(Graph(1)));
  CHECK(is_connected(Graph(0)));
}

TEST_CASE("induced subgraphs follow the given vertex order") {
  const Graph g = cycle_graph(5);
  const std::vector<Vertex> pick{4, 0, 1};
  const Graph h = g.induced(pick);
  CHECK(h == path_graph(3));
  CHECK(is_clique(complete_graph(5), pick));
  CHECK_FALSE(is_clique(g, pick));
}
