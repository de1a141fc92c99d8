#include "sig/zset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <iterator>
#include <set>
#include <string>

namespace sig {

ZMultiset::ZMultiset(std::vector<ZEntry> entries) {
  std::sort(entries.begin(), entries.end(), [](const ZEntry& x, const ZEntry& y) {
    if (x.exact && y.exact) return *x.exact > *y.exact;
    return x.value > y.value;
  });
  for (auto& e : entries) {
    if (e.multiplicity == 0) continue;
    if (!entries_.empty()) {
      ZEntry& last = entries_.back();
      const bool same = (last.exact && e.exact) ? *last.exact == *e.exact : last.value == e.value;
      if (same) {
        last.multiplicity += e.multiplicity;
        continue;
      }
    }
    entries_.push_back(e);
  }
}

ZMultiset::ZMultiset(const ExactSpectrum& spectrum) {
  for (const auto& e : spectrum.entries())
    entries_.push_back({e.value.to_double(), e.value, e.multiplicity});
}

std::size_t ZMultiset::total() const {
  std::size_t t = 0;
  for (const auto& e : entries_) t += e.multiplicity;
  return t;
}

ZMultiset parse_z(std::string_view text) {
  std::vector<ZEntry> entries;
  std::size_t field = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string item(text.substr(pos, end - pos));
    pos = end + 1;
    ++field;
    item.erase(std::remove_if(item.begin(), item.end(), [](char c) { return std::isspace(c); }),
               item.end());
    if (item.empty()) {
      if (end == text.size() && field > 1) break;  // trailing comma
      throw ParseError(0, "empty spectrum item " + std::to_string(field));
    }
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw ParseError(0, "spectrum item '" + item + "' is not value:multiplicity");
    }
    const std::string value_text = item.substr(0, colon);
    const std::string mult_text = item.substr(colon + 1);

    char* value_end = nullptr;
    const double value = std::strtod(value_text.c_str(), &value_end);
    if (value_text.empty() || *value_end != '\0' || !std::isfinite(value)) {
      throw ParseError(0, "bad eigenvalue '" + value_text + "'");
    }
    std::size_t mult = 0;
    auto [ptr, ec] = std::from_chars(mult_text.data(), mult_text.data() + mult_text.size(), mult);
    if (ec != std::errc{} || ptr != mult_text.data() + mult_text.size() || mult == 0) {
      throw ParseError(0, "bad multiplicity '" + mult_text + "'");
    }
    entries.push_back({value, std::nullopt, mult});
  }
  return ZMultiset(std::move(entries));
}

namespace {

std::optional<Surd> snap_integer(const ZEntry& e, double tol) {
  if (e.exact) return e.exact->is_integer() ? e.exact : std::nullopt;
  const double r = std::round(e.value);
  if (std::abs(e.value - r) <= tol) return Surd::integer(static_cast<std::int64_t>(r));
  return std::nullopt;
}

std::optional<Surd> snap(const ZEntry& e, int s, int p, double tol) {
  if (e.exact) return e.exact;
  if (auto i = snap_integer(e, tol)) return i;
  for (const Surd& c : {si_top(s, p), si_bottom(s, p)})
    if (std::abs(c.to_double() - e.value) <= tol) return c;
  return std::nullopt;
}

std::string show(double v) {
  std::string out = std::to_string(v);
  while (out.size() > 1 && out.back() == '0') out.pop_back();
  if (!out.empty() && out.back() == '.') out.pop_back();
  return out;
}

}  // namespace

ParameterVerdict recover_parameters(const ZMultiset& z, double snap_tol) {
  ParameterVerdict out;
  auto fail = [&](std::string why) {
    out.failure = std::move(why);
    return out;
  };
  const auto& entries = z.entries();
  if (entries.size() < 4) return fail("fewer than four distinct values");

  const std::size_t e = entries[1].multiplicity;
  if (e < 2 || e % 2 != 0) {
    return fail("multiplicity " + std::to_string(e) +
                " of the second-largest value is not 2(s-1) for any s >= 2");
  }
  const auto d1 = snap_integer(entries[1], snap_tol);
  if (!d1) return fail("second-largest value " + show(entries[1].value) + " is not an integer");
  const int s = static_cast<int>(e / 2 + 1);
  const std::int64_t p64 = *d1->as_integer() - 2 * s;
  if (p64 < 2) return fail("p = d1 - 2s = " + std::to_string(p64) + " is below 2");
  if (p64 > (1 << 20)) return fail("p = " + std::to_string(p64) + " is unreasonably large");
  const int p = static_cast<int>(p64);

  if (z.total() != static_cast<std::size_t>(2 * s + 2 * p)) {
    return fail("total multiplicity " + std::to_string(z.total()) + " differs from 2s+2p = " +
                std::to_string(2 * s + 2 * p));
  }

  std::vector<ExactEntry> exact;
  for (const ZEntry& entry : entries) {
    auto v = snap(entry, s, p, snap_tol);
    if (!v) {
      return fail("value " + show(entry.value) + " is neither an integer nor (3s+p±√D)/2");
    }
    exact.push_back({*v, entry.multiplicity});
  }
  ExactSpectrum spectrum(std::move(exact));
  if (spectrum.entries().size() != entries.size()) return fail("values collapse after snapping");

  const auto& se = spectrum.entries();
  if (se.front().value != si_top(s, p) || se.front().multiplicity != 1) {
    return fail("largest value is not c1 = (3s+p+√D)/2 with multiplicity 1");
  }
  if (se.back().value != Surd::integer(0) || se.back().multiplicity != 1) {
    return fail("smallest value is not 0 with multiplicity 1");
  }
  if (se[se.size() - 2].value != si_bottom(s, p) || se[se.size() - 2].multiplicity != 1) {
    return fail("second-smallest value is not c3 = (3s+p-√D)/2 with multiplicity 1");
  }
  if (!spectrum.contains(Surd::integer(s + p))) return fail("c2 = s+p is missing");

  out.params = ZParameters{s, p};
  out.exact = std::move(spectrum);
  return out;
}

namespace {

struct Value {
  std::int64_t x;
  std::size_t count;
};

// Partition of p whose twin cliques on one separator produce exactly
// `side` (values with multiplicities, in the variable block).
std::optional<Partition> side_partition(const std::vector<Value>& side, int s, int p) {
  std::vector<int> parts;
  std::size_t base_count = 0;
  std::int64_t used = 0;
  std::size_t cliques = 0;
  for (const Value& v : side) {
    if (v.count == 0) continue;
    if (v.x == s) {
      base_count = v.count;
      continue;
    }
    const std::int64_t per = v.x - s - 1;  // multiplicity from one clique
    if (per < 1) return std::nullopt;
    if (v.count % static_cast<std::size_t>(per) != 0) return std::nullopt;
    const std::size_t k = v.count / static_cast<std::size_t>(per);
    used += static_cast<std::int64_t>(k) * (v.x - s);
    if (used > p) return std::nullopt;
    cliques += k;
    parts.insert(parts.end(), k, static_cast<int>(v.x - s));
  }
  const auto singles = static_cast<std::size_t>(p - used);
  if (cliques + singles == 0 || base_count != cliques + singles - 1) return std::nullopt;
  parts.insert(parts.end(), singles, 1);
  return Partition(std::move(parts));
}

std::vector<ExactEntry> to_entries(const std::vector<Value>& side) {
  std::vector<ExactEntry> out;
  for (const Value& v : side)
    if (v.count) out.push_back({Surd::integer(v.x), v.count});
  return out;
}

struct SplitSearch {
  int s;
  int p;
  std::vector<Value> middle;  // descending
  std::vector<Value> side1;
  std::vector<Value> side2;
  bool first_only = false;
  std::vector<SideSplit> found;

  void run(std::size_t i, std::size_t size1, std::size_t size2) {
    if (first_only && !found.empty()) return;
    const std::size_t half = static_cast<std::size_t>(p - 1);
    if (size1 > half || size2 > half) return;
    if (i == middle.size()) {
      if (size1 != half || size2 != half) return;
      auto l1 = side_partition(side1, s, p);
      if (!l1) return;
      auto l2 = side_partition(side2, s, p);
      if (!l2) return;
      found.push_back({to_entries(side1), to_entries(side2), *l1, *l2});
      return;
    }
    const Value v = middle[i];
    const std::size_t step = v.x > s ? static_cast<std::size_t>(std::max<std::int64_t>(v.x - s - 1, 1)) : 1;
    // Side 1 takes the larger shares first.
    if (v.count % step != 0) return;
    for (std::size_t a = v.count + step; a >= step;) {
      a -= step;
      side1.push_back({v.x, a});
      side2.push_back({v.x, v.count - a});
      run(i + 1, size1 + a, size2 + v.count - a);
      side1.pop_back();
      side2.pop_back();
    }
  }
};

// Checks the variable block and enumerates its admissible splits.
ZVerdict examine(const ZMultiset& z, double snap_tol, bool first_only,
                 std::vector<SideSplit>* all) {
  ZVerdict verdict;
  const ParameterVerdict pv = recover_parameters(z, snap_tol);
  if (!pv.params) {
    verdict.failure = pv.failure;
    return verdict;
  }
  verdict.params = pv.params;
  const int s = pv.params->s;
  const int p = pv.params->p;

  // Drop c1, d1^(2(s-1)), one copy of c2 = s+p, c3 and 0.
  const auto& se = pv.exact.entries();
  SplitSearch search{s, p, {}, {}, {}, first_only, {}};
  for (std::size_t i = 2; i + 2 < se.size(); ++i) {
    std::size_t count = se[i].multiplicity;
    if (se[i].value == Surd::integer(s + p)) --count;
    if (count == 0) continue;
    const auto x = se[i].value.as_integer();
    if (!x) {
      verdict.failure = "variable-block value " + se[i].value.to_string() + " is not an integer";
      return verdict;
    }
    if (*x < s || *x > s + p) {
      verdict.failure = "variable-block value " + std::to_string(*x) + " lies outside [s, s+p] = [" +
                        std::to_string(s) + ", " + std::to_string(s + p) + "]";
      return verdict;
    }
    if (*x == s + 1) {
      verdict.failure = "variable-block value s+1 = " + std::to_string(*x) +
                        " cannot arise: a twin clique of size l gives s+l with l >= 2";
      return verdict;
    }
    search.middle.push_back({*x, count});
  }
  search.run(0, 0, 0);
  if (search.found.empty()) {
    verdict.failure = "no split of the variable block into two admissible separator sides";
    return verdict;
  }
  verdict.valid = true;
  verdict.split = search.found.front();
  if (all) *all = std::move(search.found);
  return verdict;
}

}  // namespace

ZVerdict validate_z(const ZMultiset& z, double snap_tol) {
  return examine(z, snap_tol, true, nullptr);
}

std::vector<SICore> reconstruct(const ZMultiset& z, double snap_tol) {
  std::vector<SideSplit> splits;
  ZVerdict verdict = examine(z, snap_tol, false, &splits);
  if (!verdict.valid) throw ZError(std::move(verdict));

  std::vector<SICore> cores;
  for (auto& sp : splits) {
    cores.push_back(SICore::make(verdict.params->s, verdict.params->p, sp.lambda1, sp.lambda2));
  }
  std::sort(cores.begin(), cores.end(), canonical_before);
  cores.erase(std::unique(cores.begin(), cores.end()), cores.end());
  return cores;
}

EigenvalueFeasibility feasible_eigenvalue(int s, int p, long long a) {
  if (s < 2 || p < 2) throw DomainError("feasible_eigenvalue: need s >= 2 and p >= 2");
  EigenvalueFeasibility out;
  const Surd value = Surd::integer(a);
  out.fixed = a == 0 || a == s + p || a == 2LL * s + p || value == si_top(s, p) ||
              value == si_bottom(s, p);

  if (a == s) {
    for (std::size_t m = 1; m <= static_cast<std::size_t>(2 * (p - 1)); ++m) {
      out.multiplicities.push_back(m);
    }
  } else if (a >= s + 2 && a <= s + p) {
    const auto size = static_cast<int>(a - s);
    const int kmax = p / size;
    for (int k = 1; k <= kmax; ++k) out.clique_counts.push_back(k);
    std::set<std::size_t> totals;
    for (int k = 1; k <= 2 * kmax; ++k) totals.insert(static_cast<std::size_t>(k) * (size - 1));
    out.multiplicities.assign(totals.begin(), totals.end());

    std::vector<int> parts{size};
    parts.insert(parts.end(), static_cast<std::size_t>(p - size), 1);
    out.witness = SICore::make(s, p, Partition(parts), Partition::singletons(p));
  }
  out.feasible = out.fixed || !out.multiplicities.empty();
  if (out.feasible && !out.witness) out.witness = SICore::min(s, p);
  return out;
}

std::optional<ZParameters> buildable_order(long long n) {
  if (n < 8 || n % 2 != 0) return std::nullopt;
  return ZParameters{2, static_cast<int>(n / 2 - 2)};
}

}  // namespace sig
