#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sig/graph.hpp"
#include "sig/sicore.hpp"
#include "sig/surd.hpp"

namespace sig {

// Dense row-major square matrix.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  std::size_t rows() const noexcept { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  double max_abs_row_sum() const;  // infinity norm
  double max_asymmetry() const;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

// L = D - A.
Matrix laplacian(const Graph& g);

// All eigenvalues of a symmetric matrix by cyclic Jacobi rotations, sorted
// descending. Only the upper triangle is read.
std::vector<double> symmetric_eigenvalues(const Matrix& m);

struct SpectrumEntry {
  double value = 0.0;
  std::size_t multiplicity = 0;
};

// Distinct eigenvalues, strictly decreasing, with multiplicities.
struct Spectrum {
  std::vector<SpectrumEntry> entries;

  std::size_t total() const;
  std::vector<double> expanded() const;
};

// Eigenvalues of symmetric `l`, with values closer than
// merge_tol * max(1, |l|_inf) grouped into one entry at their mean.
// Throws DomainError if l is asymmetric by more than merge_tol.
Spectrum numeric_spectrum(const Matrix& l, double merge_tol = 1e-6);

// True when every value lies within snap_tol of an integer. Values are
// reported, never rounded.
bool is_numerically_integral(const Spectrum& s, double snap_tol = 1e-6);

struct ExactEntry {
  Surd value;
  std::size_t multiplicity = 0;

  friend bool operator==(const ExactEntry&, const ExactEntry&) = default;
};

// Closed-form spectrum: distinct exact values, strictly decreasing.
class ExactSpectrum {
 public:
  ExactSpectrum() = default;
  // Merges equal values, drops zero multiplicities, sorts.
  explicit ExactSpectrum(std::vector<ExactEntry> entries);

  const std::vector<ExactEntry>& entries() const noexcept { return entries_; }
  std::size_t total() const;
  std::vector<Surd> expanded() const;
  std::size_t multiplicity_of(const Surd& v) const;
  bool contains(const Surd& v) const { return multiplicity_of(v) > 0; }

  // Count of non-integer eigenvalues, with multiplicity.
  std::size_t non_integer_count() const;
  Spectrum to_numeric() const;

  friend bool operator==(const ExactSpectrum&, const ExactSpectrum&) = default;

 private:
  std::vector<ExactEntry> entries_;
};

// (s+p)^2 + 4sp, the discriminant of the reduced quotient block.
std::int64_t si_discriminant(int s, int p);

// (3s+p + sqrt(D))/2 and (3s+p - sqrt(D))/2.
Surd si_top(int s, int p);
Surd si_bottom(int s, int p);

// Closed forms for the min, max and general SI-core Laplacian spectra.
// All throw DomainError when s < 2 or p < 2.
ExactSpectrum spec_min(int s, int p);
ExactSpectrum spec_max(int s, int p);
ExactSpectrum spec_general(const SICore& c);

// Equitable quotient of L(G) over the blocks (S1, S2, F1, F2), where F_j are
// the simplicial vertices on separator S_j. It does not depend on the
// partitions, and `reduced` is its restriction to vectors that are
// antisymmetric between the two sides.
struct QuotientMatrix {
  Matrix full;     // 4x4, not symmetric
  Matrix reduced;  // [[2s+p, -p], [-s, s]]
};

QuotientMatrix quotient_matrix(int s, int p);

// Equitable quotient of `m` over `blocks`, or nullopt if some block pair
// does not have constant row sums (within tol).
std::optional<Matrix> equitable_quotient(const Matrix& m, std::span<const VertexSet> blocks,
                                         double tol = 1e-9);

// {0, s+p, (3s+p +- sqrt(D))/2}.
ExactSpectrum quotient_spectrum(int s, int p);

// D is a perfect square, decided in integer arithmetic.
bool is_laplacian_integral(int s, int p);

}  // namespace sig
