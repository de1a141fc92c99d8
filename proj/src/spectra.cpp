#include "sig/spectra.hpp"

#include <algorithm>
#include <cmath>

#include "sig/error.hpp"

namespace sig {

Matrix laplacian(const Graph& g) {
  Matrix l(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    l(v, v) = static_cast<double>(g.degree(v));
    for (Vertex w : g.neighbors(v)) l(v, w) = -1.0;
  }
  return l;
}

std::size_t Spectrum::total() const {
  std::size_t t = 0;
  for (const auto& e : entries) t += e.multiplicity;
  return t;
}

std::vector<double> Spectrum::expanded() const {
  std::vector<double> out;
  for (const auto& e : entries) out.insert(out.end(), e.multiplicity, e.value);
  return out;
}

Spectrum numeric_spectrum(const Matrix& l, double merge_tol) {
  if (l.max_asymmetry() > merge_tol) throw DomainError("numeric_spectrum: matrix is not symmetric");
  const std::vector<double> values = symmetric_eigenvalues(l);
  const double gap = merge_tol * std::max(1.0, l.max_abs_row_sum());

  Spectrum out;
  std::size_t i = 0;
  while (i < values.size()) {
    std::size_t j = i + 1;
    double sum = values[i];
    while (j < values.size() && values[j - 1] - values[j] <= gap) sum += values[j++];
    out.entries.push_back({sum / static_cast<double>(j - i), j - i});
    i = j;
  }
  return out;
}

bool is_numerically_integral(const Spectrum& s, double snap_tol) {
  return std::all_of(s.entries.begin(), s.entries.end(), [&](const SpectrumEntry& e) {
    return std::abs(e.value - std::round(e.value)) <= snap_tol;
  });
}

ExactSpectrum::ExactSpectrum(std::vector<ExactEntry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const ExactEntry& x, const ExactEntry& y) { return x.value > y.value; });
  for (auto& e : entries) {
    if (e.multiplicity == 0) continue;
    if (!entries_.empty() && entries_.back().value == e.value) {
      entries_.back().multiplicity += e.multiplicity;
    } else {
      entries_.push_back(std::move(e));
    }
  }
}

std::size_t ExactSpectrum::total() const {
  std::size_t t = 0;
  for (const auto& e : entries_) t += e.multiplicity;
  return t;
}

std::vector<Surd> ExactSpectrum::expanded() const {
  std::vector<Surd> out;
  for (const auto& e : entries_) out.insert(out.end(), e.multiplicity, e.value);
  return out;
}

std::size_t ExactSpectrum::multiplicity_of(const Surd& v) const {
  for (const auto& e : entries_)
    if (e.value == v) return e.multiplicity;
  return 0;
}

std::size_t ExactSpectrum::non_integer_count() const {
  std::size_t count = 0;
  for (const auto& e : entries_)
    if (!e.value.is_integer()) count += e.multiplicity;
  return count;
}

Spectrum ExactSpectrum::to_numeric() const {
  Spectrum out;
  for (const auto& e : entries_) out.entries.push_back({e.value.to_double(), e.multiplicity});
  return out;
}

namespace {

void require_params(int s, int p) {
  if (s < 2 || p < 2) throw DomainError("spectrum: need s >= 2 and p >= 2");
}

std::size_t count(long long v) { return static_cast<std::size_t>(v); }

}  // namespace

std::int64_t si_discriminant(int s, int p) {
  const std::int64_t a = s + p;
  return a * a + 4LL * s * p;
}

Surd si_top(int s, int p) { return Surd(3LL * s + p, 1, si_discriminant(s, p)); }

Surd si_bottom(int s, int p) { return Surd(3LL * s + p, -1, si_discriminant(s, p)); }

ExactSpectrum spec_min(int s, int p) {
  require_params(s, p);
  return ExactSpectrum({
      {si_top(s, p), 1},
      {Surd::integer(2 * s + p), count(2LL * (s - 1))},
      {Surd::integer(s + p), 1},
      {Surd::integer(s), count(2LL * (p - 1))},
      {si_bottom(s, p), 1},
      {Surd::integer(0), 1},
  });
}

ExactSpectrum spec_max(int s, int p) {
  require_params(s, p);
  return ExactSpectrum({
      {si_top(s, p), 1},
      {Surd::integer(2 * s + p), count(2LL * (s - 1))},
      {Surd::integer(s + p), 1},
      {Surd::integer(s + p), count(2LL * (p - 1))},
      {si_bottom(s, p), 1},
      {Surd::integer(0), 1},
  });
}

ExactSpectrum spec_general(const SICore& c) {
  require_params(c.s, c.p);
  const int s = c.s;
  const int p = c.p;
  std::vector<ExactEntry> entries{
      {si_top(s, p), 1},
      {Surd::integer(2 * s + p), count(2LL * (s - 1))},
      {Surd::integer(s + p), 1},
      {si_bottom(s, p), 1},
      {Surd::integer(0), 1},
  };
  // A true-twin clique K_l on separator S_j contributes s + l with
  // multiplicity l - 1; the r_j cliques on one side leave s^(r_j - 1).
  for (const Partition* lambda : {&c.lambda1, &c.lambda2}) {
    for (int l : lambda->parts())
      if (l >= 2) entries.push_back({Surd::integer(s + l), count(l - 1)});
  }
  entries.push_back({Surd::integer(s), c.lambda1.count() + c.lambda2.count() - 2});
  return ExactSpectrum(std::move(entries));
}

QuotientMatrix quotient_matrix(int s, int p) {
  require_params(s, p);
  QuotientMatrix q{Matrix(4), Matrix(2)};
  const double sd = s;
  const double pd = p;
  const double rows[4][4] = {
      {sd + pd, -sd, -pd, 0.0},
      {-sd, sd + pd, 0.0, -pd},
      {-sd, 0.0, sd, 0.0},
      {0.0, -sd, 0.0, sd},
  };
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) q.full(i, j) = rows[i][j];
  q.reduced(0, 0) = 2 * sd + pd;
  q.reduced(0, 1) = -pd;
  q.reduced(1, 0) = -sd;
  q.reduced(1, 1) = sd;
  return q;
}

std::optional<Matrix> equitable_quotient(const Matrix& m, std::span<const VertexSet> blocks,
                                         double tol) {
  Matrix b(blocks.size());
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    for (std::size_t bj = 0; bj < blocks.size(); ++bj) {
      std::optional<double> common;
      for (Vertex i : blocks[bi]) {
        double row = 0.0;
        for (Vertex j : blocks[bj]) row += m(i, j);
        if (!common) {
          common = row;
        } else if (std::abs(*common - row) > tol) {
          return std::nullopt;
        }
      }
      b(bi, bj) = common.value_or(0.0);
    }
  }
  return b;
}

ExactSpectrum quotient_spectrum(int s, int p) {
  require_params(s, p);
  return ExactSpectrum({
      {si_top(s, p), 1},
      {Surd::integer(s + p), 1},
      {si_bottom(s, p), 1},
      {Surd::integer(0), 1},
  });
}

bool is_laplacian_integral(int s, int p) {
  require_params(s, p);
  return is_perfect_square(si_discriminant(s, p));
}

}  // namespace sig
