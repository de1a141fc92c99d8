#include "sig/graph.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "sig/error.hpp"

namespace sig {

Graph::Graph(std::size_t n) : adj_(n) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adj_(n) {
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop on vertex " + std::to_string(e.u));
    }
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    edge_count_ += list.size();
  }
  edge_count_ /= 2;
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  if (v >= adj_.size()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  }
  return adj_[v];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto nu = neighbors(u);
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adj_.size(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  std::vector<std::optional<Vertex>> remap(order());
  for (Vertex i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= order()) throw std::out_of_range("induced: vertex out of range");
    remap[vertices[i]] = i;
  }
  std::vector<Edge> kept;
  for (Vertex i = 0; i < vertices.size(); ++i) {
    for (Vertex w : adj_[vertices[i]]) {
      if (remap[w] && i < *remap[w]) kept.push_back({i, *remap[w]});
    }
  }
  return Graph(vertices.size(), kept);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.push_back({u, v});
  return Graph(n, e);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u + 1 < n; ++u) e.push_back({u, u + 1});
  return Graph(n, e);
}

Graph cycle_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u + 1 < n; ++u) e.push_back({u, u + 1});
  if (n >= 3) e.push_back({0, static_cast<Vertex>(n - 1)});
  return Graph(n, e);
}

namespace {

struct RawEdgeList {
  std::optional<std::uint64_t> header;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
  std::vector<std::size_t> lines;
};

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_index(std::string_view field, std::size_t line_no) {
  if (!field.empty() && field[0] == '-') {
    throw ParseError(line_no, "negative vertex index '" + std::string(field) + "'");
  }
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError(line_no, "expected a non-negative integer, got '" + std::string(field) + "'");
  }
  return value;
}

RawEdgeList scan(std::string_view text) {
  RawEdgeList raw;
  std::size_t line_no = 0;
  bool first = true;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    const auto fields = split_fields(line);
    if (fields.empty() || fields[0].front() == '#') continue;
    if (first && fields.size() == 1) {
      raw.header = parse_index(fields[0], line_no);
      first = false;
      continue;
    }
    first = false;
    if (fields.size() != 2) {
      throw ParseError(line_no, "expected 'u v', got " + std::to_string(fields.size()) + " fields");
    }
    const auto u = parse_index(fields[0], line_no);
    const auto v = parse_index(fields[1], line_no);
    if (u == v) throw ParseError(line_no, "self-loop on vertex " + std::to_string(u));
    raw.edges.emplace_back(u, v);
    raw.lines.push_back(line_no);
  }
  return raw;
}

constexpr std::uint64_t kMaxVertices = std::numeric_limits<Vertex>::max() / 2;

void check_size(std::uint64_t n, std::size_t line_no) {
  if (n > kMaxVertices) throw ParseError(line_no, "vertex count too large");
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  const RawEdgeList raw = scan(text);
  std::uint64_t n = raw.header.value_or(0);
  for (std::size_t i = 0; i < raw.edges.size(); ++i) {
    const auto [u, v] = raw.edges[i];
    check_size(u, raw.lines[i]);
    check_size(v, raw.lines[i]);
    n = std::max({n, u + 1, v + 1});
  }
  check_size(n, 0);
  std::vector<Edge> edges;
  edges.reserve(raw.edges.size());
  for (const auto& [u, v] : raw.edges) {
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  return Graph(static_cast<std::size_t>(n), edges);
}

LabeledGraph parse_labeled_edge_list(std::string_view text) {
  const RawEdgeList raw = scan(text);
  LabeledGraph out;
  std::unordered_map<std::uint64_t, Vertex> index;
  auto id_of = [&](std::uint64_t label) {
    auto [it, inserted] = index.emplace(label, static_cast<Vertex>(out.labels.size()));
    if (inserted) out.labels.push_back(label);
    return it->second;
  };
  std::vector<Edge> edges;
  for (const auto& [u, v] : raw.edges) edges.push_back({id_of(u), id_of(v)});

  const std::uint64_t declared = raw.header.value_or(0);
  check_size(declared, 0);
  std::uint64_t next = out.labels.empty()
                           ? 0
                           : *std::max_element(out.labels.begin(), out.labels.end()) + 1;
  while (out.labels.size() < declared) out.labels.push_back(next++);
  out.graph = Graph(out.labels.size(), edges);
  return out;
}

std::string render_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  const auto nv = g.neighbors(v);
  VertexSet out(nv.begin(), nv.end());
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

std::vector<VertexSet> true_twin_partition(const Graph& g) {
  std::map<VertexSet, VertexSet> by_key;
  for (Vertex v = 0; v < g.order(); ++v) {
    by_key[closed_neighborhood(g, v)].push_back(v);
  }
  std::vector<VertexSet> classes;
  classes.reserve(by_key.size());
  for (auto& [key, members] : by_key) classes.push_back(std::move(members));
  std::sort(classes.begin(), classes.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
  return classes;
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.order();
  if (n <= 1) return true;
  std::vector<bool> seen(n, false);
  std::queue<Vertex> todo;
  todo.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!todo.empty()) {
    const Vertex u = todo.front();
    todo.pop();
    for (Vertex w : g.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        todo.push(w);
      }
    }
  }
  return reached == n;
}

bool is_clique(const Graph& g, std::span<const Vertex> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (!g.adjacent(vertices[i], vertices[j])) return false;
  return true;
}

}  // namespace sig
