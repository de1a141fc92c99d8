#include "sig/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

namespace sig {

namespace {

using Mask = std::uint32_t;
using Cells = std::vector<std::vector<Vertex>>;

struct CanonicalSearch {
  std::size_t n = 0;
  std::vector<Mask> adj;
  std::optional<CanonicalForm> best;
  std::vector<Vertex> best_lab;
  std::vector<std::vector<Vertex>> automorphisms;

  Mask mask_of(const std::vector<Vertex>& cell) const {
    Mask m = 0;
    for (Vertex v : cell) m |= Mask{1} << v;
    return m;
  }

  // Equitable refinement. Cells are split by neighbour count into each
  // splitter, smaller counts first, restarting after every split.
  void refine(Cells& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t w = 0; w < cells.size() && !changed; ++w) {
        const Mask wm = mask_of(cells[w]);
        Cells next;
        next.reserve(cells.size() + 1);
        for (const auto& cell : cells) {
          if (cell.size() == 1) {
            next.push_back(cell);
            continue;
          }
          std::map<int, std::vector<Vertex>> groups;
          for (Vertex v : cell) groups[std::popcount(adj[v] & wm)].push_back(v);
          if (groups.size() > 1) changed = true;
          for (auto& [count, members] : groups) next.push_back(std::move(members));
        }
        if (changed) cells = std::move(next);
      }
    }
  }

  CanonicalForm form_of(const std::vector<Vertex>& lab) const {
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[lab[i]] = i;
    CanonicalForm f{n, std::vector<Mask>(n, 0)};
    for (std::size_t i = 0; i < n; ++i) {
      Mask row = adj[lab[i]];
      while (row) {
        const int w = std::countr_zero(row);
        row &= row - 1;
        f.rows[i] |= Mask{1} << pos[static_cast<std::size_t>(w)];
      }
    }
    return f;
  }

  void leaf(const Cells& cells) {
    std::vector<Vertex> lab;
    lab.reserve(n);
    for (const auto& c : cells) lab.push_back(c.front());
    CanonicalForm f = form_of(lab);
    if (!best || f < *best) {
      best = std::move(f);
      best_lab = std::move(lab);
    } else if (f == *best) {
      std::vector<Vertex> gamma(n);
      for (std::size_t i = 0; i < n; ++i) gamma[best_lab[i]] = lab[i];
      automorphisms.push_back(std::move(gamma));
    }
  }

  // Orbit representatives under the known automorphisms that fix `prefix`.
  std::vector<Vertex> orbits(const std::vector<Vertex>& prefix) const {
    std::vector<Vertex> parent(n);
    std::iota(parent.begin(), parent.end(), Vertex{0});
    auto find = [&](Vertex v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (const auto& gamma : automorphisms) {
      const bool fixes = std::all_of(prefix.begin(), prefix.end(),
                                     [&](Vertex v) { return gamma[v] == v; });
      if (!fixes) continue;
      for (Vertex v = 0; v < n; ++v) {
        const Vertex a = find(v);
        const Vertex b = find(gamma[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (Vertex v = 0; v < n; ++v) parent[v] = find(v);
    return parent;
  }

  void search(Cells cells, std::vector<Vertex>& prefix) {
    refine(cells);
    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].size() > 1 && (target == cells.size() || cells[i].size() < cells[target].size())) {
        target = i;
      }
    }
    if (target == cells.size()) {
      leaf(cells);
      return;
    }
    std::vector<Vertex> candidates = cells[target];
    std::sort(candidates.begin(), candidates.end());
    std::vector<Vertex> explored;
    for (Vertex u : candidates) {
      const std::vector<Vertex> orbit = orbits(prefix);
      const bool covered = std::any_of(explored.begin(), explored.end(),
                                       [&](Vertex w) { return orbit[w] == orbit[u]; });
      if (covered) continue;
      explored.push_back(u);

      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i != target) {
          child.push_back(cells[i]);
          continue;
        }
        child.push_back({u});
        std::vector<Vertex> rest;
        for (Vertex v : cells[i])
          if (v != u) rest.push_back(v);
        child.push_back(std::move(rest));
      }
      prefix.push_back(u);
      search(std::move(child), prefix);
      prefix.pop_back();
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kCanonicalMaxOrder) throw std::invalid_argument("canonical_form: graph too large");
  if (n == 0) return {};
  CanonicalSearch cs;
  cs.n = n;
  cs.adj.assign(n, 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.neighbors(v)) cs.adj[v] |= Mask{1} << w;

  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), Vertex{0});
  std::vector<Vertex> prefix;
  cs.search(Cells{all}, prefix);
  return *cs.best;
}

Graph graph_from_form(const CanonicalForm& form) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < form.order; ++i) {
    for (Vertex j = i + 1; j < form.order; ++j)
      if (form.rows[i] >> j & 1U) edges.push_back({i, j});
  }
  return Graph(form.order, edges);
}

namespace {

// Stable colors of the 1-dimensional Weisfeiler-Leman refinement.
std::vector<std::size_t> color_refinement(const std::vector<std::vector<Vertex>>& adj) {
  const std::size_t n = adj.size();
  std::vector<std::size_t> color(n, 0);
  std::size_t classes = 1;
  while (true) {
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> ids;
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<std::size_t> around;
      for (Vertex w : adj[v]) around.push_back(color[w]);
      std::sort(around.begin(), around.end());
      sig[v] = {color[v], std::move(around)};
      ids.emplace(sig[v], 0);
    }
    std::size_t next = 0;
    for (auto& [key, id] : ids) id = next++;
    for (std::size_t v = 0; v < n; ++v) color[v] = ids[sig[v]];
    if (ids.size() == classes) return color;
    classes = ids.size();
  }
}

struct IsoSearch {
  std::size_t n;
  std::vector<std::vector<bool>> ga;
  std::vector<std::vector<bool>> ha;
  std::vector<std::size_t> gcolor;
  std::vector<std::size_t> hcolor;
  std::vector<Vertex> order;
  std::vector<int> image;
  std::vector<bool> used;

  bool extend(std::size_t depth) {
    if (depth == n) return true;
    const Vertex v = order[depth];
    for (Vertex w = 0; w < n; ++w) {
      if (used[w] || hcolor[w] != gcolor[v]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const Vertex u = order[d];
        ok = ga[v][u] == ha[w][static_cast<Vertex>(image[u])];
      }
      if (!ok) continue;
      image[v] = static_cast<int>(w);
      used[w] = true;
      if (extend(depth + 1)) return true;
      used[w] = false;
      image[v] = -1;
    }
    return false;
  }
};

}  // namespace

bool are_isomorphic(const Graph& g, const Graph& h) {
  const std::size_t n = g.order();
  if (n > kIsomorphismOracleMaxOrder || h.order() > kIsomorphismOracleMaxOrder) {
    throw std::invalid_argument("are_isomorphic: graph too large for the brute-force oracle");
  }
  if (h.order() != n || h.size() != g.size()) return false;

  std::vector<std::vector<Vertex>> joint(2 * n);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) joint[v].push_back(w);
    for (Vertex w : h.neighbors(v)) joint[n + v].push_back(static_cast<Vertex>(n + w));
  }
  const std::vector<std::size_t> color = color_refinement(joint);

  IsoSearch s{n, {}, {}, {}, {}, {}, std::vector<int>(n, -1), std::vector<bool>(n, false)};
  s.gcolor.assign(color.begin(), color.begin() + static_cast<std::ptrdiff_t>(n));
  s.hcolor.assign(color.begin() + static_cast<std::ptrdiff_t>(n), color.end());
  {
    auto a = s.gcolor;
    auto b = s.hcolor;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  s.ga.assign(n, std::vector<bool>(n, false));
  s.ha.assign(n, std::vector<bool>(n, false));
  for (const Edge& e : g.edges()) s.ga[e.u][e.v] = s.ga[e.v][e.u] = true;
  for (const Edge& e : h.edges()) s.ha[e.u][e.v] = s.ha[e.v][e.u] = true;

  // Rarest color first, then the vertex with most already-ordered neighbours.
  std::map<std::size_t, std::size_t> freq;
  for (std::size_t c : s.gcolor) ++freq[c];
  std::vector<bool> placed(n, false);
  for (std::size_t k = 0; k < n; ++k) {
    int pick = -1;
    std::size_t pick_links = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (placed[v]) continue;
      std::size_t links = 0;
      for (Vertex u : s.order) links += s.ga[v][u] ? 1 : 0;
      if (pick < 0 || links > pick_links ||
          (links == pick_links && freq[s.gcolor[v]] < freq[s.gcolor[static_cast<Vertex>(pick)]])) {
        pick = static_cast<int>(v);
        pick_links = links;
      }
    }
    placed[static_cast<Vertex>(pick)] = true;
    s.order.push_back(static_cast<Vertex>(pick));
  }
  return s.extend(0);
}

std::vector<std::vector<Graph>> all_graphs_up_to(std::size_t max_order) {
  if (max_order > 10) throw std::invalid_argument("all_graphs_up_to: order above 10");
  std::vector<std::vector<Graph>> out(max_order + 1);
  out[0].push_back(Graph(0));
  for (std::size_t n = 1; n <= max_order; ++n) {
    std::set<CanonicalForm> seen;
    const auto last = static_cast<Vertex>(n - 1);
    for (const Graph& g : out[n - 1]) {
      const std::vector<Edge> base = g.edges();
      for (Mask links = 0; links < (Mask{1} << last); ++links) {
        std::vector<Edge> edges = base;
        for (Vertex v = 0; v < last; ++v)
          if (links >> v & 1U) edges.push_back({v, last});
        seen.insert(canonical_form(Graph(n, edges)));
      }
    }
    for (const auto& f : seen) out[n].push_back(graph_from_form(f));
  }
  return out;
}

std::vector<std::vector<Graph>> connected_graphs_up_to(std::size_t max_order) {
  auto all = all_graphs_up_to(max_order);
  for (auto& level : all) {
    std::erase_if(level, [](const Graph& g) { return !is_connected(g); });
  }
  return all;
}

Graph random_connected_chordal(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  std::vector<Edge> edges;
  std::bernoulli_distribution coin(0.5);
  for (Vertex v = 1; v < n; ++v) {
    std::uniform_int_distribution<Vertex> pick(0, v - 1);
    const Vertex u = pick(rng);
    std::vector<Vertex> around;
    for (Vertex w = 0; w < v; ++w)
      if (adj[u][w]) around.push_back(w);
    std::shuffle(around.begin(), around.end(), rng);
    std::vector<Vertex> clique{u};
    for (Vertex w : around) {
      const bool fits = std::all_of(clique.begin(), clique.end(), [&](Vertex c) { return adj[c][w]; });
      if (fits && coin(rng)) clique.push_back(w);
    }
    for (Vertex c : clique) {
      adj[c][v] = adj[v][c] = true;
      edges.push_back({c, v});
    }
  }
  return Graph(n, edges);
}

std::uint64_t corpus_seed() {
  if (const char* env = std::getenv("SIG_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return 20240611ULL;
}

}  // namespace sig
