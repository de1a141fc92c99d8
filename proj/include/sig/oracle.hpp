#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "sig/graph.hpp"

namespace sig {

// Brute-force helpers used as reference implementations by the tests and
// the acceptance suite. None of them is fast; all are exact.

inline constexpr std::size_t kCanonicalMaxOrder = 32;
inline constexpr std::size_t kIsomorphismOracleMaxOrder = 20;

// Adjacency rows of the lexicographically smallest relabeling reachable in
// an individualization-refinement search. Equal forms iff isomorphic.
struct CanonicalForm {
  std::size_t order = 0;
  std::vector<std::uint32_t> rows;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

// Throws std::invalid_argument beyond kCanonicalMaxOrder vertices.
CanonicalForm canonical_form(const Graph& g);
Graph graph_from_form(const CanonicalForm& form);

// Backtracking over vertex bijections, pruned by color refinement on the
// disjoint union. Independent of canonical_form. Throws
// std::invalid_argument beyond kIsomorphismOracleMaxOrder vertices.
bool are_isomorphic(const Graph& g, const Graph& h);

// One representative per isomorphism class for each order 0..max_order,
// built by vertex augmentation. result[n] holds the graphs on n vertices,
// sorted by canonical form.
std::vector<std::vector<Graph>> all_graphs_up_to(std::size_t max_order);

// Connected members of all_graphs_up_to, same layout.
std::vector<std::vector<Graph>> connected_graphs_up_to(std::size_t max_order);

// Random connected chordal graph: each new vertex joins a random clique
// containing a random earlier vertex.
Graph random_connected_chordal(std::size_t n, std::mt19937_64& rng);

// SIG_SEED from the environment, or a fixed default.
std::uint64_t corpus_seed();

}  // namespace sig
