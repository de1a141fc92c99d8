#include <array>
#include <stdexcept>
#include <string>

#include "sig/classes.hpp"

namespace sig {

namespace {

struct PatternSpec {
  Pattern id;
  std::string_view name;
  std::size_t order;
  std::vector<Edge> edges;
};

// Vertex numbering follows the usual letter labels in order: gem a..e
// (a is the apex), dart n,k,l,m,j, 2-net a..f, bipartite claw
// g,h,i,j,k,m,n.
const std::array<PatternSpec, 5>& pattern_table() {
  static const std::array<PatternSpec, 5> table{{
      {Pattern::gem, "gem", 5, {{2, 3}, {2, 1}, {2, 0}, {3, 0}, {3, 4}, {1, 0}, {4, 0}}},
      {Pattern::dart, "dart", 5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {1, 4}, {2, 4}}},
      {Pattern::two_net, "2net", 6, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 4}, {5, 4}}},
      {Pattern::bipartite_claw, "bipartite_claw", 7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {5, 6}}},
      {Pattern::path5, "p5", 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}},
  }};
  return table;
}

const PatternSpec& spec_of(Pattern p) {
  for (const auto& s : pattern_table())
    if (s.id == p) return s;
  throw std::invalid_argument("unknown pattern");
}

bool extend(const Graph& g, const Graph& pattern, std::vector<Vertex>& image,
            std::vector<bool>& used) {
  const std::size_t i = image.size();
  if (i == pattern.order()) return true;
  const auto pi = static_cast<Vertex>(i);
  for (Vertex x = 0; x < g.order(); ++x) {
    if (used[x] || g.degree(x) < pattern.degree(pi)) continue;
    bool ok = true;
    for (Vertex j = 0; j < i && ok; ++j) {
      ok = pattern.adjacent(pi, j) == g.adjacent(x, image[j]);
    }
    if (!ok) continue;
    image.push_back(x);
    used[x] = true;
    if (extend(g, pattern, image, used)) return true;
    used[x] = false;
    image.pop_back();
  }
  return false;
}

}  // namespace

const Graph& pattern_graph(Pattern p) {
  static const auto graphs = [] {
    std::array<Graph, 5> out;
    for (std::size_t i = 0; i < pattern_table().size(); ++i) {
      const auto& s = pattern_table()[i];
      out[i] = Graph(s.order, s.edges);
    }
    return out;
  }();
  for (std::size_t i = 0; i < pattern_table().size(); ++i)
    if (pattern_table()[i].id == p) return graphs[i];
  throw std::invalid_argument("unknown pattern");
}

std::string_view pattern_name(Pattern p) { return spec_of(p).name; }

Pattern pattern_from_name(std::string_view name) {
  for (const auto& s : pattern_table())
    if (s.name == name) return s.id;
  throw std::invalid_argument("unknown pattern '" + std::string(name) + "'");
}

std::optional<std::vector<Vertex>> find_induced(const Graph& g, const Graph& pattern) {
  if (pattern.order() > g.order()) return std::nullopt;
  std::vector<Vertex> image;
  image.reserve(pattern.order());
  std::vector<bool> used(g.order(), false);
  if (extend(g, pattern, image, used)) return image;
  return std::nullopt;
}

std::optional<std::vector<Vertex>> find_induced(const Graph& g, Pattern pattern) {
  return find_induced(g, pattern_graph(pattern));
}

}  // namespace sig
