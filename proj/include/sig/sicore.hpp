#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sig/graph.hpp"

namespace sig {

// Integer partition with parts in non-increasing order. Ordering is
// lexicographic on the parts, so {3} > {2,1} > {1,1,1}.
class Partition {
 public:
  Partition() = default;
  // Sorts the parts; throws std::invalid_argument on a non-positive part.
  explicit Partition(std::vector<int> parts);

  static Partition singletons(int total);  // {1,1,...,1}
  static Partition whole(int total);       // {total}

  const std::vector<int>& parts() const noexcept { return parts_; }
  int total() const noexcept { return total_; }
  std::size_t count() const noexcept { return parts_.size(); }

  std::string to_string() const;  // "3,3,1"

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

// a(p), OEIS A000041. Throws std::overflow_error past 64 bits.
std::uint64_t partition_count(int p);

// Every partition of p, largest first in lexicographic order.
std::vector<Partition> enumerate_partitions(int p);

// An SI-core graph up to isomorphism: separator size s, p simplicial
// vertices per separator, grouped into true-twin cliques by lambda1 and
// lambda2. The pair is unordered and stored with lambda1 >= lambda2.
struct SICore {
  int s = 0;
  int p = 0;
  Partition lambda1;
  Partition lambda2;

  // Validates and canonicalises. Throws DomainError.
  static SICore make(int s, int p, Partition a, Partition b);
  static SICore min(int s, int p);
  static SICore max(int s, int p);

  std::string to_string() const;  // "s p | lambda1 | lambda2"

  friend bool operator==(const SICore&, const SICore&) = default;
};

// Enumeration order: s and p ascending, then (lambda1, lambda2) descending.
bool canonical_before(const SICore& a, const SICore& b);

// a(p)(a(p)+1)/2. Throws DomainError when s < 2 or p < 2.
std::uint64_t count_si_core(int s, int p);

// All of G(s,p), one representative per isomorphism class, starting with
// the max core ({p},{p}).
std::vector<SICore> enumerate_si_core(int s, int p);

// Vertices 0..s-1 form S1, s..2s-1 form S2, the next p vertices hang off S1
// grouped by lambda1, the last p hang off S2 grouped by lambda2.
Graph realize(const SICore& c);

// Edge count of realize(c), from the construction.
std::uint64_t si_core_edge_count(const SICore& c);

struct SICoreRecognition {
  std::optional<SICore> core;
  std::string reason;  // empty on success
};

// Inverse of realize up to isomorphism. Throws DomainError on disconnected
// input.
SICoreRecognition recognize_si_core(const Graph& g);

}  // namespace sig
