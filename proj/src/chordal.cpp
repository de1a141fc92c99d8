#include "sig/chordal.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <set>
#include <stdexcept>

#include "sig/error.hpp"

namespace sig {

namespace {

std::size_t intersection_size(const VertexSet& a, const VertexSet& b) {
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

VertexSet intersect(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<std::size_t> positions(const Graph& g, std::span<const Vertex> order) {
  const std::size_t n = g.order();
  if (order.size() != n) throw std::invalid_argument("ordering has wrong length");
  std::vector<std::size_t> pos(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || pos[order[i]] != n) {
      throw std::invalid_argument("ordering is not a permutation");
    }
    pos[order[i]] = i;
  }
  return pos;
}

// Neighbours of v eliminated after v, nearest first.
std::vector<Vertex> later_neighbors(const Graph& g, const std::vector<std::size_t>& pos, Vertex v) {
  std::vector<Vertex> out;
  for (Vertex w : g.neighbors(v))
    if (pos[w] > pos[v]) out.push_back(w);
  std::sort(out.begin(), out.end(), [&](Vertex a, Vertex b) { return pos[a] < pos[b]; });
  return out;
}

PeoResult run_mcs(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> weight(n, 0);
  std::vector<bool> numbered(n, false);
  // (weight, -vertex) so that among equal weights the smallest vertex wins.
  std::set<std::pair<std::size_t, long long>> queue;
  for (Vertex v = 0; v < n; ++v) queue.emplace(0, -static_cast<long long>(v));

  std::vector<Vertex> visit;
  visit.reserve(n);
  while (!queue.empty()) {
    auto top = std::prev(queue.end());
    const auto v = static_cast<Vertex>(-top->second);
    queue.erase(top);
    numbered[v] = true;
    visit.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (numbered[w]) continue;
      queue.erase({weight[w], -static_cast<long long>(w)});
      ++weight[w];
      queue.emplace(weight[w], -static_cast<long long>(w));
    }
  }

  PeoResult result;
  result.order.assign(visit.rbegin(), visit.rend());
  result.violating = peo_violation(g, result.order);
  result.chordal = !result.violating.has_value();
  return result;
}

}  // namespace

std::optional<Vertex> peo_violation(const Graph& g, std::span<const Vertex> order) {
  const auto pos = positions(g, order);
  for (Vertex v : order) {
    const auto later = later_neighbors(g, pos, v);
    if (later.size() < 2) continue;
    const Vertex parent = later.front();
    for (std::size_t i = 1; i < later.size(); ++i) {
      if (!g.adjacent(parent, later[i])) return v;
    }
  }
  return std::nullopt;
}

PeoResult mcs_peo(const Graph& g) {
  if (!is_connected(g)) throw DomainError("mcs_peo: graph is not connected");
  return run_mcs(g);
}

bool is_chordal(const Graph& g) { return run_mcs(g).chordal; }

std::vector<VertexSet> maximal_cliques(const Graph& g, std::span<const Vertex> peo) {
  if (peo_violation(g, peo)) {
    throw DomainError("maximal_cliques: ordering is not a perfect elimination ordering");
  }
  const auto pos = positions(g, peo);
  const std::size_t n = g.order();

  std::vector<std::vector<Vertex>> later(n);
  for (Vertex v = 0; v < n; ++v) later[v] = later_neighbors(g, pos, v);

  // C(v) = {v} + later(v) is maximal unless some u with parent v has
  // |later(u)| = |later(v)| + 1, in which case C(v) is inside C(u).
  std::vector<bool> absorbed(n, false);
  for (Vertex u = 0; u < n; ++u) {
    if (later[u].empty()) continue;
    const Vertex parent = later[u].front();
    if (later[u].size() == later[parent].size() + 1) absorbed[parent] = true;
  }

  std::vector<VertexSet> cliques;
  for (Vertex v = 0; v < n; ++v) {
    if (absorbed[v]) continue;
    VertexSet c = later[v];
    c.push_back(v);
    std::sort(c.begin(), c.end());
    cliques.push_back(std::move(c));
  }
  std::sort(cliques.begin(), cliques.end());
  return cliques;
}

CliqueTree clique_tree(const Graph& g) {
  const PeoResult peo = mcs_peo(g);
  if (!peo.chordal) throw DomainError("clique_tree: graph is not chordal");

  CliqueTree ct;
  ct.cliques = maximal_cliques(g, peo.order);
  const std::size_t k = ct.cliques.size();
  if (k <= 1) return ct;

  struct Best {
    std::size_t weight = 0;
    std::size_t from = 0;
    bool set = false;
  };
  std::vector<Best> best(k);
  std::vector<bool> in_tree(k, false);

  auto absorb = [&](std::size_t t) {
    in_tree[t] = true;
    for (std::size_t j = 0; j < k; ++j) {
      if (in_tree[j]) continue;
      const std::size_t w = intersection_size(ct.cliques[t], ct.cliques[j]);
      Best& b = best[j];
      if (!b.set || w > b.weight || (w == b.weight && t < b.from)) b = {w, t, true};
    }
  };

  absorb(0);
  for (std::size_t step = 1; step < k; ++step) {
    std::size_t pick = k;
    for (std::size_t j = 0; j < k; ++j) {
      if (in_tree[j]) continue;
      if (pick == k || best[j].weight > best[pick].weight ||
          (best[j].weight == best[pick].weight && best[j].from < best[pick].from)) {
        pick = j;
      }
    }
    const std::size_t from = best[pick].from;
    ct.edges.push_back({std::min(from, pick), std::max(from, pick),
                        intersect(ct.cliques[from], ct.cliques[pick])});
    absorb(pick);
  }
  return ct;
}

bool is_valid_clique_tree(const CliqueTree& ct) {
  const std::size_t k = ct.cliques.size();
  if (k == 0) return ct.edges.empty();
  if (ct.edges.size() != k - 1) return false;

  std::vector<std::size_t> root(k);
  for (std::size_t i = 0; i < k; ++i) root[i] = i;
  auto find = [&](std::size_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (const TreeEdge& e : ct.edges) {
    if (e.a >= k || e.b >= k || e.a == e.b) return false;
    if (e.separator != intersect(ct.cliques[e.a], ct.cliques[e.b])) return false;
    const auto ra = find(e.a);
    const auto rb = find(e.b);
    if (ra == rb) return false;
    root[ra] = rb;
  }

  // A vertex's cliques induce a subtree iff they span (count - 1) edges.
  std::map<Vertex, std::size_t> clique_count;
  std::map<Vertex, std::size_t> edge_count;
  for (const auto& c : ct.cliques)
    for (Vertex v : c) ++clique_count[v];
  for (const auto& e : ct.edges)
    for (Vertex v : e.separator) ++edge_count[v];
  for (const auto& [v, c] : clique_count) {
    if (edge_count[v] + 1 != c) return false;
  }
  return true;
}

SeparatorSet minimal_separators(const CliqueTree& ct) {
  std::map<VertexSet, std::size_t> counts;
  for (const TreeEdge& e : ct.edges) ++counts[e.separator];
  SeparatorSet out;
  out.reserve(counts.size());
  for (auto& [set, mu] : counts) out.push_back({set, mu});
  return out;
}

VertexSet simplicial_vertices(const Graph& g) {
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (is_clique(g, g.neighbors(v))) out.push_back(v);
  }
  return out;
}

InducedSubgraph derived_graph(const Graph& g) {
  const VertexSet simp = simplicial_vertices(g);
  InducedSubgraph out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!std::binary_search(simp.begin(), simp.end(), v)) out.original.push_back(v);
  }
  out.graph = g.induced(out.original);
  return out;
}

std::vector<std::size_t> boundary_cliques(const Graph& g, const CliqueTree& ct) {
  if (ct.cliques.size() == 1) return {0};
  const VertexSet simp = simplicial_vertices(g);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ct.cliques.size(); ++i) {
    const VertexSet& q = ct.cliques[i];
    VertexSet core;
    std::set_difference(q.begin(), q.end(), simp.begin(), simp.end(), std::back_inserter(core));
    if (core.size() == q.size()) continue;  // no simplicial vertex
    for (std::size_t j = 0; j < ct.cliques.size(); ++j) {
      if (j != i && intersect(q, ct.cliques[j]) == core) {
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

}  // namespace sig
