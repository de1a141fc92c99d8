#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sig/error.hpp"
#include "sig/sicore.hpp"
#include "sig/spectra.hpp"
#include "sig/surd.hpp"

namespace sig {

// A candidate spectrum. Values either arrive exact (from a closed form) or
// as decimals, which are snapped to integers or to the two admissible
// surds once s and p are known.
struct ZEntry {
  double value = 0.0;
  std::optional<Surd> exact;
  std::size_t multiplicity = 0;
};

class ZMultiset {
 public:
  ZMultiset() = default;
  // Sorts descending and merges entries whose values coincide.
  explicit ZMultiset(std::vector<ZEntry> entries);
  explicit ZMultiset(const ExactSpectrum& spectrum);

  const std::vector<ZEntry>& entries() const noexcept { return entries_; }
  std::size_t total() const;

 private:
  std::vector<ZEntry> entries_;
};

// "v:m,v:m,..." with integer or decimal v and positive integer m.
// Throws ParseError.
ZMultiset parse_z(std::string_view text);

struct ZParameters {
  int s = 0;
  int p = 0;

  friend bool operator==(const ZParameters&, const ZParameters&) = default;
};

struct ParameterVerdict {
  std::optional<ZParameters> params;
  std::string failure;  // first failing condition; empty on success
  ExactSpectrum exact;  // snapped multiset, set on success
};

// s from the multiplicity 2(s-1) of the second-largest value, p = d1 - 2s,
// then the fixed values c1, c2 = s+p, c3 and 0 and the total 2s+2p are
// checked.
ParameterVerdict recover_parameters(const ZMultiset& z, double snap_tol = 1e-6);

// One admissible assignment of the variable block to the two separators.
struct SideSplit {
  std::vector<ExactEntry> side1;
  std::vector<ExactEntry> side2;
  Partition lambda1;
  Partition lambda2;
};

struct ZVerdict {
  bool valid = false;
  std::optional<ZParameters> params;
  std::string failure;
  std::optional<SideSplit> split;  // first admissible split found
};

ZVerdict validate_z(const ZMultiset& z, double snap_tol = 1e-6);

class ZError : public DomainError {
 public:
  explicit ZError(ZVerdict verdict)
      : DomainError("inadmissible multiset: " + verdict.failure), verdict_(std::move(verdict)) {}
  const ZVerdict& verdict() const noexcept { return verdict_; }

 private:
  ZVerdict verdict_;
};

// Every SI-core graph whose Laplacian spectrum is z, canonical and in
// enumeration order. Throws ZError when z is inadmissible.
std::vector<SICore> reconstruct(const ZMultiset& z, double snap_tol = 1e-6);

// Whether `a` can be a Laplacian eigenvalue of some graph in G(s,p).
// Fixed eigenvalues (0, s+p, 2s+p, and c1, c3 when integral) occur in
// every member. In the variable block a = s always works, and
// s+2 <= a <= s+p works with k cliques of a-s twins on one separator for
// each k with k(a-s) <= p.
struct EigenvalueFeasibility {
  bool feasible = false;
  bool fixed = false;
  std::vector<int> clique_counts;  // admissible k per separator
  // Achievable multiplicities of a inside the variable block, summed over
  // both separators.
  std::vector<std::size_t> multiplicities;
  std::optional<SICore> witness;
};

EigenvalueFeasibility feasible_eigenvalue(int s, int p, long long a);

// Smallest-s parameters of an SI-core graph on n vertices.
std::optional<ZParameters> buildable_order(long long n);

}  // namespace sig
