#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sig/graph.hpp"

namespace sig {

enum class ClassKind { separator, simplicial };

// Quotient of a graph by its true-twin classes. Vertex i of `quotient` is
// classes[i]. A class is tagged `simplicial` when its members are
// simplicial in the original graph; the tags are meaningful for strictly
// chordal inputs, where every class is either a minimal separator or the
// simplicial part of one maximal clique.
struct CriticalCliqueGraph {
  std::vector<VertexSet> classes;
  std::vector<ClassKind> kinds;
  std::vector<std::size_t> class_of;  // per original vertex
  Graph quotient;
};

CriticalCliqueGraph critical_clique_graph(const Graph& g);

// Connected, and every biconnected component is complete.
bool is_block_graph(const Graph& g);

// Connected, acyclic, maximum degree <= 2. Empty graph and K1 included.
bool is_path(const Graph& g);

enum class ChordalFailure { none, not_chordal, intersecting_separators };

struct StrictlyChordalVerdict {
  bool strictly_chordal = false;
  ChordalFailure failure = ChordalFailure::none;
  std::optional<Vertex> violating_vertex;
  std::optional<std::pair<VertexSet, VertexSet>> intersecting;
};

// Chordal with pairwise disjoint minimal vertex separators.
// Throws DomainError on disconnected input.
StrictlyChordalVerdict is_strictly_chordal(const Graph& g);

// Largest clique count the interval oracle accepts.
inline constexpr std::size_t kIntervalOracleMaxCliques = 9;

// Brute-force interval test: searches for an ordering of the maximal
// cliques in which every vertex's cliques are consecutive. Throws
// DomainError if g is not connected and chordal or has more than
// kIntervalOracleMaxCliques maximal cliques.
bool is_interval_oracle(const Graph& g);

enum class Pattern { gem, dart, two_net, bipartite_claw, path5 };

// Forbidden induced subgraphs, one table. Names: "gem", "dart", "2net",
// "bipartite_claw", "p5".
const Graph& pattern_graph(Pattern p);
std::string_view pattern_name(Pattern p);
Pattern pattern_from_name(std::string_view name);  // throws std::invalid_argument

// An induced embedding: result[i] is the vertex of g playing pattern vertex
// i. Embeddings are searched in lexicographic order of the image tuple.
std::optional<std::vector<Vertex>> find_induced(const Graph& g, const Graph& pattern);
std::optional<std::vector<Vertex>> find_induced(const Graph& g, Pattern pattern);

enum class SigStep { none, strictly_chordal, derived_path };

// Why D(CC(G)) fails to be a path: a class of degree >= 3, a cycle.
struct PathWitness {
  std::string reason;
  std::vector<std::size_t> classes;  // indices into CriticalCliqueGraph::classes
};

struct StrictlyIntervalVerdict {
  bool strictly_interval = false;
  SigStep failed_step = SigStep::none;
  bool complete = false;
  StrictlyChordalVerdict chordality;
  std::optional<CriticalCliqueGraph> cc;
  std::vector<std::size_t> derived_classes;  // classes surviving in D(CC(G))
  std::optional<PathWitness> path_witness;
};

// Three steps: strictly chordal test, D(CC(G)) from the critical clique
// graph with its simplicial vertices removed, path test. Complete graphs
// are accepted directly. Throws DomainError on disconnected input.
StrictlyIntervalVerdict is_strictly_interval(const Graph& g);

}  // namespace sig
