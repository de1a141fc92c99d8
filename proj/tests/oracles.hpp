#pragma once

// Brute-force references for the chordal module, small graphs only.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "sig/chordal.hpp"
#include "sig/graph.hpp"

namespace sig::testing {

inline std::vector<VertexSet> brute_maximal_cliques(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint32_t> cliques;
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    bool ok = true;
    for (Vertex u = 0; u < n && ok; ++u) {
      if (!(mask >> u & 1U)) continue;
      for (Vertex v = u + 1; v < n && ok; ++v)
        if ((mask >> v & 1U) && !g.adjacent(u, v)) ok = false;
    }
    if (ok) cliques.push_back(mask);
  }
  std::vector<VertexSet> out;
  for (std::uint32_t c : cliques) {
    const bool maximal = std::none_of(cliques.begin(), cliques.end(), [&](std::uint32_t d) {
      return d != c && (d & c) == c;
    });
    if (!maximal) continue;
    VertexSet q;
    for (Vertex v = 0; v < n; ++v)
      if (c >> v & 1U) q.push_back(v);
    out.push_back(q);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Every clique tree over `cliques`: spanning trees of the clique
// intersection graph with the induced-subtree property.
inline std::vector<CliqueTree> all_clique_trees(const std::vector<VertexSet>& cliques) {
  struct Candidate {
    std::size_t a, b;
    VertexSet sep;
  };
  std::vector<Candidate> candidates;
  for (std::size_t a = 0; a < cliques.size(); ++a) {
    for (std::size_t b = a + 1; b < cliques.size(); ++b) {
      VertexSet sep;
      std::set_intersection(cliques[a].begin(), cliques[a].end(), cliques[b].begin(),
                            cliques[b].end(), std::back_inserter(sep));
      if (!sep.empty()) candidates.push_back({a, b, sep});
    }
  }
  std::vector<CliqueTree> out;
  const std::size_t need = cliques.empty() ? 0 : cliques.size() - 1;
  std::vector<std::size_t> pick;
  auto recurse = [&](auto&& self, std::size_t from) -> void {
    if (pick.size() == need) {
      CliqueTree ct{cliques, {}};
      for (std::size_t i : pick) ct.edges.push_back({candidates[i].a, candidates[i].b, candidates[i].sep});
      if (is_valid_clique_tree(ct)) out.push_back(std::move(ct));
      return;
    }
    for (std::size_t i = from; i < candidates.size(); ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  recurse(recurse, 0);
  return out;
}

inline Graph random_graph(std::size_t n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution edge(density);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (edge(rng)) edges.push_back({u, v});
  return Graph(n, edges);
}

}  // namespace sig::testing
