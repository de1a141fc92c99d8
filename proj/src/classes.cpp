#include "sig/classes.hpp"

#include <algorithm>
#include <numeric>

#include "sig/chordal.hpp"
#include "sig/error.hpp"

namespace sig {

CriticalCliqueGraph critical_clique_graph(const Graph& g) {
  CriticalCliqueGraph cc;
  cc.classes = true_twin_partition(g);
  cc.class_of.assign(g.order(), 0);
  for (std::size_t c = 0; c < cc.classes.size(); ++c)
    for (Vertex v : cc.classes[c]) cc.class_of[v] = c;

  const VertexSet simp = simplicial_vertices(g);
  for (const auto& cls : cc.classes) {
    const bool s = std::binary_search(simp.begin(), simp.end(), cls.front());
    cc.kinds.push_back(s ? ClassKind::simplicial : ClassKind::separator);
  }

  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const auto a = static_cast<Vertex>(cc.class_of[e.u]);
    const auto b = static_cast<Vertex>(cc.class_of[e.v]);
    if (a != b) edges.push_back({std::min(a, b), std::max(a, b)});
  }
  cc.quotient = Graph(cc.classes.size(), edges);
  return cc;
}

bool is_block_graph(const Graph& g) {
  if (!is_connected(g)) return false;
  const std::size_t n = g.order();
  if (n <= 2) return true;

  // Iterative Hopcroft-Tarjan; each popped edge group is one block.
  std::vector<std::size_t> disc(n, 0), low(n, 0);
  std::vector<Vertex> parent(n, 0);
  std::vector<std::size_t> next(n, 0);
  std::vector<Edge> edge_stack;
  std::size_t timer = 0;

  auto block_is_complete = [&](Vertex v, Vertex w) {
    VertexSet verts;
    std::size_t edges = 0;
    while (true) {
      const Edge e = edge_stack.back();
      edge_stack.pop_back();
      verts.push_back(e.u);
      verts.push_back(e.v);
      ++edges;
      if (e.u == v && e.v == w) break;
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    return edges == verts.size() * (verts.size() - 1) / 2;
  };

  std::vector<Vertex> stack{0};
  disc[0] = low[0] = ++timer;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    const auto nv = g.neighbors(v);
    if (next[v] < nv.size()) {
      const Vertex w = nv[next[v]++];
      if (disc[w] == 0) {
        parent[w] = v;
        disc[w] = low[w] = ++timer;
        edge_stack.push_back({v, w});
        stack.push_back(w);
      } else if (w != parent[v] && disc[w] < disc[v]) {
        edge_stack.push_back({v, w});
        low[v] = std::min(low[v], disc[w]);
      }
      continue;
    }
    stack.pop_back();
    if (stack.empty()) break;
    const Vertex u = parent[v];
    low[u] = std::min(low[u], low[v]);
    if (low[v] >= disc[u] && !block_is_complete(u, v)) return false;
  }
  return true;
}

bool is_path(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return true;
  if (g.size() != n - 1 || !is_connected(g)) return false;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) > 2) return false;
  return true;
}

StrictlyChordalVerdict is_strictly_chordal(const Graph& g) {
  StrictlyChordalVerdict verdict;
  const PeoResult peo = mcs_peo(g);
  if (!peo.chordal) {
    verdict.failure = ChordalFailure::not_chordal;
    verdict.violating_vertex = peo.violating;
    return verdict;
  }
  const SeparatorSet seps = minimal_separators(clique_tree(g));
  std::vector<std::optional<std::size_t>> owner(g.order());
  for (std::size_t i = 0; i < seps.size(); ++i) {
    for (Vertex v : seps[i].vertices) {
      if (owner[v]) {
        verdict.failure = ChordalFailure::intersecting_separators;
        verdict.intersecting = {seps[*owner[v]].vertices, seps[i].vertices};
        return verdict;
      }
      owner[v] = i;
    }
  }
  verdict.strictly_chordal = true;
  return verdict;
}

namespace {

bool order_cliques(const std::vector<VertexSet>& cliques, std::vector<bool>& placed,
                   std::vector<bool>& closed, const VertexSet* last, std::size_t remaining) {
  if (remaining == 0) return true;
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    if (placed[i]) continue;
    const VertexSet& c = cliques[i];
    if (std::any_of(c.begin(), c.end(), [&](Vertex v) { return closed[v]; })) continue;
    // Vertices of the previous clique that are missing here never return.
    std::vector<Vertex> newly_closed;
    if (last) {
      for (Vertex v : *last)
        if (!std::binary_search(c.begin(), c.end(), v)) newly_closed.push_back(v);
    }
    for (Vertex v : newly_closed) closed[v] = true;
    placed[i] = true;
    if (order_cliques(cliques, placed, closed, &c, remaining - 1)) return true;
    placed[i] = false;
    for (Vertex v : newly_closed) closed[v] = false;
  }
  return false;
}

}  // namespace

bool is_interval_oracle(const Graph& g) {
  const PeoResult peo = mcs_peo(g);
  if (!peo.chordal) throw DomainError("is_interval_oracle: graph is not chordal");
  const auto cliques = maximal_cliques(g, peo.order);
  if (cliques.size() > kIntervalOracleMaxCliques) {
    throw DomainError("is_interval_oracle: too many maximal cliques for brute force");
  }
  std::vector<bool> placed(cliques.size(), false);
  std::vector<bool> closed(g.order(), false);
  return order_cliques(cliques, placed, closed, nullptr, cliques.size());
}

StrictlyIntervalVerdict is_strictly_interval(const Graph& g) {
  if (!is_connected(g)) throw DomainError("is_strictly_interval: graph is not connected");
  StrictlyIntervalVerdict verdict;

  verdict.complete = g.size() * 2 == g.order() * (g.order() == 0 ? 0 : g.order() - 1);
  if (verdict.complete) {
    verdict.strictly_interval = true;
    verdict.chordality.strictly_chordal = true;
    return verdict;
  }

  verdict.chordality = is_strictly_chordal(g);
  if (!verdict.chordality.strictly_chordal) {
    verdict.failed_step = SigStep::strictly_chordal;
    return verdict;
  }

  CriticalCliqueGraph cc = critical_clique_graph(g);
  const InducedSubgraph derived = derived_graph(cc.quotient);
  verdict.derived_classes.assign(derived.original.begin(), derived.original.end());

  if (is_path(derived.graph)) {
    verdict.strictly_interval = true;
  } else {
    verdict.failed_step = SigStep::derived_path;
    PathWitness w;
    for (Vertex v = 0; v < derived.graph.order(); ++v) {
      if (derived.graph.degree(v) > 2) {
        w.reason = "critical clique of degree " + std::to_string(derived.graph.degree(v)) +
                   " in D(CC(G))";
        w.classes.push_back(derived.original[v]);
        for (Vertex u : derived.graph.neighbors(v)) w.classes.push_back(derived.original[u]);
        break;
      }
    }
    if (w.classes.empty()) {
      w.reason = is_connected(derived.graph) ? "D(CC(G)) contains a cycle"
                                             : "D(CC(G)) is disconnected";
      w.classes = verdict.derived_classes;
    }
    verdict.path_witness = std::move(w);
  }
  verdict.cc = std::move(cc);
  return verdict;
}

}  // namespace sig
