#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sig {

using Vertex = std::uint32_t;

// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Undirected simple graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  // Duplicate edges collapse; self-loops and out-of-range endpoints throw
  // std::invalid_argument.
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t size() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;

  // Every edge once, as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  // Subgraph induced by `vertices`; new vertex i is vertices[i].
  Graph induced(std::span<const Vertex> vertices) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);

// Edge-list parsing. The first non-comment line may be a lone vertex count;
// every other non-comment line is "u v". '#' starts a comment line.
// The vertex count is max(header, 1 + largest index).
Graph parse_edge_list(std::string_view text);

// Same format, but vertex labels are arbitrary non-negative integers that
// are remapped to 0..n-1 in first-seen order. labels[i] is the original
// label of vertex i. Header vertices not named by any edge are appended
// with fresh labels above the largest one seen.
struct LabeledGraph {
  Graph graph;
  std::vector<std::uint64_t> labels;
};
LabeledGraph parse_labeled_edge_list(std::string_view text);

std::string render_edge_list(const Graph& g);

// N[v] = N(v) + {v}. Throws std::out_of_range for v >= n.
VertexSet closed_neighborhood(const Graph& g, Vertex v);

// Classes of vertices with equal closed neighborhoods, each sorted, ordered
// by smallest member. For chordal graphs these are the critical cliques.
std::vector<VertexSet> true_twin_partition(const Graph& g);

// The empty graph and K1 are connected.
bool is_connected(const Graph& g);

bool is_clique(const Graph& g, std::span<const Vertex> vertices);

}  // namespace sig
