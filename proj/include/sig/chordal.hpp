#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sig/graph.hpp"

namespace sig {

// Result of maximum cardinality search. When `chordal` is false,
// `violating` is a vertex whose later neighbours in `order` are not a clique.
struct PeoResult {
  bool chordal = false;
  std::vector<Vertex> order;
  std::optional<Vertex> violating;
};

// Maximum cardinality search followed by a perfect-elimination check.
// Throws DomainError on disconnected input.
PeoResult mcs_peo(const Graph& g);

// Chordality of any graph, connected or not.
bool is_chordal(const Graph& g);

// A vertex whose later neighbours in `order` do not form a clique, or
// nullopt if `order` is a perfect elimination ordering. Throws
// std::invalid_argument if `order` is not a permutation of the vertices.
std::optional<Vertex> peo_violation(const Graph& g, std::span<const Vertex> order);

// The maximal cliques, each sorted, listed in lexicographic order.
// Throws DomainError if `peo` is not a perfect elimination ordering of g.
std::vector<VertexSet> maximal_cliques(const Graph& g, std::span<const Vertex> peo);

struct TreeEdge {
  std::size_t a;  // a < b, indices into CliqueTree::cliques
  std::size_t b;
  VertexSet separator;

  friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
};

struct CliqueTree {
  std::vector<VertexSet> cliques;
  std::vector<TreeEdge> edges;
};

// Maximum-weight spanning tree of the clique intersection graph, grown by
// Prim from clique 0 with ties broken by the smallest (in-tree, new) clique
// index pair. Throws DomainError if g is disconnected or not chordal.
CliqueTree clique_tree(const Graph& g);

// Spanning tree over the cliques whose edge labels are the pairwise
// intersections and which has the induced-subtree property.
bool is_valid_clique_tree(const CliqueTree& ct);

struct Separator {
  VertexSet vertices;
  std::size_t multiplicity = 0;

  friend bool operator==(const Separator&, const Separator&) = default;
};

// Distinct minimal vertex separators with their multiplicity in the
// clique-tree edge multiset, in lexicographic order of the vertex sets.
using SeparatorSet = std::vector<Separator>;

SeparatorSet minimal_separators(const CliqueTree& ct);

VertexSet simplicial_vertices(const Graph& g);

// g minus its simplicial vertices. original[i] is the vertex of g that
// became vertex i.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;
};

InducedSubgraph derived_graph(const Graph& g);

// Indices of boundary cliques: cliques Q holding a simplicial vertex for
// which some other maximal clique meets Q in exactly its non-simplicial
// part. A lone clique counts as boundary.
std::vector<std::size_t> boundary_cliques(const Graph& g, const CliqueTree& ct);

}  // namespace sig
