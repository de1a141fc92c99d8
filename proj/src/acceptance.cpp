#include "sig/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>

#include "sig/chordal.hpp"
#include "sig/oracle.hpp"
#include "sig/sicore.hpp"
#include "sig/spectra.hpp"
#include "sig/zset.hpp"

namespace sig {

namespace {

constexpr double kNumericTol = 1e-8;
constexpr double kSnapTol = 1e-6;

struct Outcome {
  bool passed = true;
  std::string detail;
};

// First mismatch wins; later checks only add to the counters.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (first_.empty()) first_ = what;
  }
  Outcome outcome(const std::string& summary) const {
    if (failures_ == 0) return {true, summary + ", " + std::to_string(checks_) + " checks"};
    return {false, std::to_string(failures_) + " of " + std::to_string(checks_) +
                       " checks failed; first: " + first_};
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string first_;
};

bool eigenvalues_match(const std::vector<double>& numeric, const std::vector<Surd>& exact,
                       double tol) {
  if (numeric.size() != exact.size()) return false;
  for (std::size_t i = 0; i < numeric.size(); ++i)
    if (std::abs(numeric[i] - exact[i].to_double()) > tol) return false;
  return true;
}

std::vector<SICore> sweep(int max_s, int max_p) {
  std::vector<SICore> all;
  for (int s = 2; s <= max_s; ++s) {
    for (int p = 2; p <= max_p; ++p) {
      auto level = enumerate_si_core(s, p);
      all.insert(all.end(), level.begin(), level.end());
    }
  }
  return all;
}

Outcome worked_example() {
  Tally t;
  const SICore c = SICore::make(3, 10, Partition({9, 1}), Partition({3, 3, 3, 1}));
  const ExactSpectrum expected({{Surd::integer(18), 1},
                                {Surd::integer(16), 4},
                                {Surd::integer(13), 1},
                                {Surd::integer(12), 8},
                                {Surd::integer(6), 6},
                                {Surd::integer(3), 4},
                                {Surd::integer(1), 1},
                                {Surd::integer(0), 1}});
  const ExactSpectrum closed = spec_general(c);
  t.check(closed == expected, "closed form differs from [18,16^4,13,12^8,6^6,3^4,1,0]");
  const Graph g = realize(c);
  t.check(g.order() == 26, "realized graph does not have 26 vertices");
  const auto numeric = symmetric_eigenvalues(laplacian(g));
  t.check(eigenvalues_match(numeric, expected.expanded(), kNumericTol),
          "numeric spectrum deviates by more than 1e-8");
  return t.outcome("exact and numeric spectra agree on 26 vertices");
}

Outcome integrality() {
  Tally t;
  for (auto [s, p] : {std::pair{2, 3}, std::pair{3, 10}, std::pair{4, 6}}) {
    const std::string tag = "(" + std::to_string(s) + "," + std::to_string(p) + ")";
    t.check(is_laplacian_integral(s, p), tag + " discriminant is not a perfect square");
    const Spectrum spec = numeric_spectrum(laplacian(realize(SICore::min(s, p))));
    t.check(is_numerically_integral(spec, kSnapTol), tag + " minimum core has a non-integer eigenvalue");
  }
  return t.outcome("(2,3), (3,10), (4,6) integral");
}

Outcome counting(int max_iso) {
  Tally t;
  for (int s = 2; s <= 3; ++s) {
    for (int p = 2; p <= 8; ++p) {
      const std::uint64_t a = partition_count(p);
      t.check(enumerate_si_core(s, p).size() == a * (a + 1) / 2,
              "wrong count for (" + std::to_string(s) + "," + std::to_string(p) + ")");
    }
  }
  t.check(enumerate_si_core(4, 6).size() == 66, "(4,6) does not have 66 members");

  std::vector<Graph> graphs;
  for (const SICore& c : sweep(max_iso, max_iso)) graphs.push_back(realize(c));
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    for (std::size_t j = i + 1; j < graphs.size(); ++j) {
      if (graphs[i].order() != graphs[j].order()) continue;
      ++pairs;
      t.check(!are_isomorphic(graphs[i], graphs[j]),
              "realizations " + std::to_string(i) + " and " + std::to_string(j) + " are isomorphic");
    }
  }
  return t.outcome("counts match a(p)(a(p)+1)/2, " + std::to_string(graphs.size()) +
                   " realizations, " + std::to_string(pairs) + " same-order pairs non-isomorphic");
}

Outcome recognition(std::size_t max_order, const std::map<Pattern, Graph>& overrides) {
  auto pattern = [&](Pattern p) -> const Graph& {
    auto it = overrides.find(p);
    return it == overrides.end() ? pattern_graph(p) : it->second;
  };
  Tally t;
  std::size_t graphs = 0;
  std::size_t strictly_chordal = 0;
  std::size_t strictly_interval = 0;
  const auto corpus = connected_graphs_up_to(max_order);
  for (std::size_t n = 1; n <= max_order; ++n) {
    for (const Graph& g : corpus[n]) {
      ++graphs;
      const std::string tag = render_edge_list(g);
      const bool sc = is_strictly_chordal(g).strictly_chordal;
      const bool gem_dart_free = is_chordal(g) && !find_induced(g, pattern(Pattern::gem)) &&
                                 !find_induced(g, pattern(Pattern::dart));
      const bool block = is_block_graph(critical_clique_graph(g).quotient);
      t.check(sc == gem_dart_free, "strictly chordal vs gem/dart-free disagree on\n" + tag);
      t.check(sc == block, "strictly chordal vs block CC(G) disagree on\n" + tag);
      if (!sc) continue;
      ++strictly_chordal;
      const bool sig = is_strictly_interval(g).strictly_interval;
      const bool net_claw_free = !find_induced(g, pattern(Pattern::two_net)) &&
                                 !find_induced(g, pattern(Pattern::bipartite_claw));
      const bool interval = is_interval_oracle(g);
      t.check(sig == net_claw_free, "strictly interval vs 2net/bipartite-claw-free disagree on\n" + tag);
      t.check(sig == interval, "strictly interval vs clique-path oracle disagree on\n" + tag);
      if (sig) ++strictly_interval;
    }
  }
  return t.outcome(std::to_string(graphs) + " connected graphs with n <= " + std::to_string(max_order) +
                   ", " + std::to_string(strictly_chordal) + " strictly chordal, " +
                   std::to_string(strictly_interval) + " strictly interval");
}

Outcome non_integer_count(int max_sp) {
  Tally t;
  std::size_t cores = 0;
  for (int s = 2; s <= max_sp; ++s) {
    for (int p = 2; p <= max_sp; ++p) {
      const bool square = is_perfect_square(si_discriminant(s, p));
      for (const SICore& c : enumerate_si_core(s, p)) {
        ++cores;
        const std::size_t k = spec_general(c).non_integer_count();
        t.check(k == 0 || k == 2, c.to_string() + " has " + std::to_string(k) + " non-integer values");
        t.check((k == 0) == square, c.to_string() + " integrality disagrees with the discriminant");
      }
    }
  }
  return t.outcome(std::to_string(cores) + " cores");
}

Outcome quotient_inclusion(int max_sp) {
  Tally t;
  std::size_t cores = 0;
  for (int s = 2; s <= max_sp; ++s) {
    for (int p = 2; p <= max_sp; ++p) {
      const ExactSpectrum q = quotient_spectrum(s, p);
      for (const SICore& c : enumerate_si_core(s, p)) {
        ++cores;
        const ExactSpectrum full = spec_general(c);
        for (const ExactEntry& e : q.entries()) {
          t.check(full.multiplicity_of(e.value) >= e.multiplicity,
                  c.to_string() + " lacks quotient eigenvalue " + e.value.to_string());
        }
      }
    }
  }
  return t.outcome(std::to_string(cores) + " cores");
}

Outcome round_trip(int max_trip, int max_complete) {
  Tally t;
  std::size_t cores = 0;
  for (int s = 2; s <= max_trip; ++s) {
    for (int p = 2; p <= max_trip; ++p) {
      const auto all = enumerate_si_core(s, p);
      std::vector<ExactSpectrum> spectra;
      for (const SICore& c : all) spectra.push_back(spec_general(c));
      for (std::size_t i = 0; i < all.size(); ++i) {
        ++cores;
        const auto found = reconstruct(ZMultiset(spectra[i]));
        t.check(std::find(found.begin(), found.end(), all[i]) != found.end(),
                all[i].to_string() + " is not reconstructed from its spectrum");
        for (const SICore& d : found)
          t.check(spec_general(d) == spectra[i], d.to_string() + " returned but not cospectral");
        if (s > max_complete || p > max_complete) continue;
        std::vector<SICore> brute;
        for (std::size_t j = 0; j < all.size(); ++j)
          if (spectra[j] == spectra[i]) brute.push_back(all[j]);
        t.check(found == brute, all[i].to_string() + " reconstruction differs from spectrum filtering");
      }
    }
  }
  return t.outcome(std::to_string(cores) + " cores");
}

Outcome cospectral_pair() {
  Tally t;
  const SICore a = SICore::make(2, 5, Partition({3, 2}), Partition::singletons(5));
  const SICore b = SICore::make(2, 5, Partition({3, 1, 1}), Partition({2, 1, 1, 1}));
  const ExactSpectrum sa = spec_general(a);
  t.check(sa == spec_general(b), "closed forms differ");
  const Graph ga = realize(a);
  const Graph gb = realize(b);
  const auto na = symmetric_eigenvalues(laplacian(ga));
  const auto nb = symmetric_eigenvalues(laplacian(gb));
  t.check(eigenvalues_match(na, sa.expanded(), kNumericTol), "first numeric spectrum off the closed form");
  t.check(eigenvalues_match(nb, sa.expanded(), kNumericTol), "second numeric spectrum off the closed form");
  t.check(!are_isomorphic(ga, gb), "the two realizations are isomorphic");
  return t.outcome("cospectral and non-isomorphic");
}

Outcome trace_and_kernel(int max_sp) {
  Tally t;
  std::size_t cores = 0;
  for (const SICore& c : sweep(max_sp, max_sp)) {
    ++cores;
    const Graph g = realize(c);
    const Spectrum spec = numeric_spectrum(laplacian(g));
    double trace = 0.0;
    for (const auto& e : spec.entries) trace += e.value * static_cast<double>(e.multiplicity);
    const double twice_m = 2.0 * static_cast<double>(g.size());
    t.check(std::abs(trace - twice_m) <= kNumericTol * std::max(1.0, twice_m),
            c.to_string() + " eigenvalue sum differs from 2m");
    const SpectrumEntry& last = spec.entries.back();
    t.check(std::abs(last.value) <= kSnapTol && last.multiplicity == 1,
            c.to_string() + " does not have a simple zero eigenvalue");
  }
  return t.outcome(std::to_string(cores) + " realized cores");
}

std::string seconds_text(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

bool AcceptanceReport::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.passed; });
}

AcceptanceReport run_acceptance(const AcceptanceConfig& config) {
  const int sp3 = config.quick ? 3 : 4;
  const int sp5 = config.quick ? 3 : 5;
  const int sp6 = config.quick ? 3 : 6;
  const std::size_t corpus = config.quick ? 7 : 8;

  struct Criterion {
    int id;
    const char* name;
    double budget;
    std::function<Outcome()> body;
  };
  const std::vector<Criterion> criteria{
      {1, "worked example spectrum", 1.0, worked_example},
      {2, "Laplacian integrality", 1.0, integrality},
      {3, "SI-core enumeration count", 30.0, [&] { return counting(sp3); }},
      {4, "recognition equivalences", 300.0,
       [&] { return recognition(corpus, config.pattern_overrides); }},
      {5, "non-integer eigenvalue count", 30.0, [&] { return non_integer_count(sp6); }},
      {6, "quotient spectrum inclusion", 30.0, [&] { return quotient_inclusion(sp6); }},
      {7, "spectrum reconstruction round trip", 120.0,
       [&] { return round_trip(sp5, sp3); }},
      {8, "cospectral non-isomorphic pair", 1.0, cospectral_pair},
      {9, "trace and connectivity", 30.0, [&] { return trace_and_kernel(sp5); }},
  };

  AcceptanceReport report;
  for (const Criterion& c : criteria) {
    CriterionResult r{c.id, c.name, false, {}, 0.0, c.budget};
    const auto start = std::chrono::steady_clock::now();
    try {
      Outcome o = c.body();
      r.passed = o.passed;
      r.detail = std::move(o.detail);
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.passed && r.seconds > r.budget_seconds) {
      r.passed = false;
      r.detail += "; over the time budget";
    }
    report.results.push_back(std::move(r));
  }
  return report;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream out;
  out << (r.passed ? "PASS" : "FAIL") << "  " << r.id << " " << r.name << " ("
      << seconds_text(r.seconds) << " s, budget " << seconds_text(r.budget_seconds)
      << " s): " << r.detail;
  return out.str();
}

}  // namespace sig
