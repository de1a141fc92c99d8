#include "sig/sicore.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <map>
#include <sstream>
#include <stdexcept>

#include "sig/chordal.hpp"
#include "sig/classes.hpp"
#include "sig/error.hpp"

namespace sig {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int x : parts_) {
    if (x <= 0) throw std::invalid_argument("partition parts must be positive");
    total_ += x;
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::singletons(int total) { return Partition(std::vector<int>(total, 1)); }

Partition Partition::whole(int total) { return Partition(std::vector<int>{total}); }

std::string Partition::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  return os.str();
}

std::uint64_t partition_count(int p) {
  if (p < 0) return 0;
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(p) + 1, 0);
  ways[0] = 1;
  for (int part = 1; part <= p; ++part) {
    for (int total = part; total <= p; ++total) {
      if (__builtin_add_overflow(ways[total], ways[total - part], &ways[total])) {
        throw std::overflow_error("partition_count: a(p) exceeds 64 bits");
      }
    }
  }
  return ways[p];
}

namespace {

void partitions_into(int remaining, int largest, std::vector<int>& prefix,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, largest); part >= 1; --part) {
    prefix.push_back(part);
    partitions_into(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

void require_params(int s, int p) {
  if (s < 2 || p < 2) {
    throw DomainError("SI-core parameters need s >= 2 and p >= 2 (got s=" + std::to_string(s) +
                      ", p=" + std::to_string(p) + ")");
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int p) {
  std::vector<Partition> out;
  std::vector<int> prefix;
  if (p >= 0) partitions_into(p, p, prefix, out);
  return out;
}

SICore SICore::make(int s, int p, Partition a, Partition b) {
  require_params(s, p);
  if (a.total() != p || b.total() != p) {
    throw DomainError("SI-core partitions must both sum to p=" + std::to_string(p));
  }
  if (a < b) std::swap(a, b);
  return SICore{s, p, std::move(a), std::move(b)};
}

SICore SICore::min(int s, int p) {
  require_params(s, p);
  return make(s, p, Partition::singletons(p), Partition::singletons(p));
}

SICore SICore::max(int s, int p) {
  require_params(s, p);
  return make(s, p, Partition::whole(p), Partition::whole(p));
}

std::string SICore::to_string() const {
  return std::to_string(s) + " " + std::to_string(p) + " | " + lambda1.to_string() + " | " +
         lambda2.to_string();
}

bool canonical_before(const SICore& a, const SICore& b) {
  if (a.s != b.s) return a.s < b.s;
  if (a.p != b.p) return a.p < b.p;
  if (a.lambda1 != b.lambda1) return a.lambda1 > b.lambda1;
  return a.lambda2 > b.lambda2;
}

std::uint64_t count_si_core(int s, int p) {
  require_params(s, p);
  const std::uint64_t a = partition_count(p);
  return a * (a + 1) / 2;
}

std::vector<SICore> enumerate_si_core(int s, int p) {
  require_params(s, p);
  const auto parts = enumerate_partitions(p);
  std::vector<SICore> out;
  out.reserve(parts.size() * (parts.size() + 1) / 2);
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i; j < parts.size(); ++j) out.push_back(SICore{s, p, parts[i], parts[j]});
  return out;
}

Graph realize(const SICore& c) {
  require_params(c.s, c.p);
  const auto s = static_cast<Vertex>(c.s);
  const auto p = static_cast<Vertex>(c.p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < 2 * s; ++u)
    for (Vertex v = u + 1; v < 2 * s; ++v) edges.push_back({u, v});

  auto attach = [&](const Partition& lambda, Vertex sep_begin, Vertex first) {
    Vertex next = first;
    for (int part : lambda.parts()) {
      const Vertex group = next;
      next += static_cast<Vertex>(part);
      for (Vertex v = group; v < next; ++v) {
        for (Vertex u = sep_begin; u < sep_begin + s; ++u) edges.push_back({u, v});
        for (Vertex w = v + 1; w < next; ++w) edges.push_back({v, w});
      }
    }
  };
  attach(c.lambda1, 0, 2 * s);
  attach(c.lambda2, s, 2 * s + p);
  return Graph(2 * s + 2 * p, edges);
}

std::uint64_t si_core_edge_count(const SICore& c) {
  const std::uint64_t s = c.s;
  const std::uint64_t p = c.p;
  std::uint64_t m = s * (2 * s - 1) + 2 * p * s;
  for (const Partition* lambda : {&c.lambda1, &c.lambda2})
    for (int l : lambda->parts()) m += static_cast<std::uint64_t>(l) * (l - 1) / 2;
  return m;
}

SICoreRecognition recognize_si_core(const Graph& g) {
  auto fail = [](std::string why) { return SICoreRecognition{std::nullopt, std::move(why)}; };

  if (!is_connected(g)) throw DomainError("recognize_si_core: graph is not connected");
  if (!is_strictly_interval(g).strictly_interval) return fail("not strictly interval");

  const CliqueTree ct = clique_tree(g);
  const SeparatorSet seps = minimal_separators(ct);
  if (seps.size() != 2) {
    return fail("expected exactly two minimal vertex separators, found " +
                std::to_string(seps.size()));
  }
  const VertexSet& s1 = seps[0].vertices;
  const VertexSet& s2 = seps[1].vertices;
  if (s1.size() != s2.size()) return fail("minimal vertex separators differ in size");
  const auto s = static_cast<int>(s1.size());
  if (s < 2) return fail("minimal vertex separators have size below 2");

  VertexSet core;
  std::merge(s1.begin(), s1.end(), s2.begin(), s2.end(), std::back_inserter(core));
  if (std::find(ct.cliques.begin(), ct.cliques.end(), core) == ct.cliques.end()) {
    return fail("separator union is not a maximal clique");
  }

  // Every other vertex is simplicial and lies in a clique S_j + twins.
  const VertexSet simp = simplicial_vertices(g);
  if (simp.size() + core.size() != g.order()) return fail("unexpected non-simplicial vertex");

  std::vector<int> sizes1, sizes2;
  int p1 = 0;
  int p2 = 0;
  for (const VertexSet& cls : true_twin_partition(g)) {
    const Vertex v = cls.front();
    if (std::binary_search(core.begin(), core.end(), v)) continue;
    const bool on1 = g.adjacent(v, s1.front());
    const bool on2 = g.adjacent(v, s2.front());
    if (on1 == on2) return fail("simplicial vertex not attached to exactly one separator");
    (on1 ? sizes1 : sizes2).push_back(static_cast<int>(cls.size()));
    (on1 ? p1 : p2) += static_cast<int>(cls.size());
  }
  if (p1 != p2) return fail("separators have different numbers of simplicial neighbours");
  if (p1 < 2) return fail("fewer than two simplicial vertices per separator");

  return {SICore::make(s, p1, Partition(sizes1), Partition(sizes2)), {}};
}

}  // namespace sig
