#include "sig/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "sig/acceptance.hpp"
#include "sig/chordal.hpp"
#include "sig/classes.hpp"
#include "sig/error.hpp"
#include "sig/graph.hpp"
#include "sig/sicore.hpp"
#include "sig/spectra.hpp"
#include "sig/zset.hpp"

namespace sig::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct Globals {
  bool pretty = false;
  bool relabel = false;
  double tol = 1e-8;
};

// A graph read from disk, with the original vertex names when --relabel
// is in effect.
struct Input {
  Graph graph;
  std::vector<std::uint64_t> labels;

  std::uint64_t name(Vertex v) const { return labels.empty() ? v : labels[v]; }

  Json names(std::span<const Vertex> vs) const {
    Json a = Json::array();
    for (Vertex v : vs) a.push_back(name(v));
    return a;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
  if (!out) throw Error("cannot write " + path);
}

Input load(const std::string& path, const Globals& g) {
  const std::string text = read_file(path);
  try {
    if (g.relabel) {
      LabeledGraph lg = parse_labeled_edge_list(text);
      return {std::move(lg.graph), std::move(lg.labels)};
    }
    return {parse_edge_list(text), {}};
  } catch (const ParseError& e) {
    throw ParseError(0, path + ": " + e.what());
  }
}

void emit(std::ostream& out, const Json& j, const Globals& g) {
  out << j.dump(g.pretty ? 2 : -1) << '\n';
}

Json partition_json(const Partition& lambda) {
  return Json(lambda.parts());
}

Json core_json(const SICore& c) {
  return Json{{"s", c.s}, {"p", c.p}, {"lambda1", partition_json(c.lambda1)},
              {"lambda2", partition_json(c.lambda2)}};
}

std::optional<Json> forbidden(const Graph& g, std::initializer_list<Pattern> patterns,
                              const Input& in) {
  for (Pattern p : patterns) {
    if (auto hit = find_induced(g, p))
      return Json{{"pattern", std::string(pattern_name(p))}, {"vertices", in.names(*hit)}};
  }
  return std::nullopt;
}

int cmd_recognize(const Input& in, const Globals& g, std::ostream& out) {
  const Graph& graph = in.graph;
  const StrictlyIntervalVerdict v = is_strictly_interval(graph);
  const bool chordal = v.chordality.failure != ChordalFailure::not_chordal;
  const bool sc = v.chordality.strictly_chordal;

  Json interval = nullptr;
  if (sc) {
    interval = v.strictly_interval;
  } else if (chordal) {
    const PeoResult peo = mcs_peo(graph);
    if (maximal_cliques(graph, peo.order).size() <= kIntervalOracleMaxCliques)
      interval = is_interval_oracle(graph);
  }

  Json witness = nullptr;
  if (!v.strictly_interval) {
    witness = Json::object();
    if (!chordal) {
      witness["step"] = "strictly_chordal";
      witness["reason"] = "not chordal";
      if (v.chordality.violating_vertex)
        witness["violating_vertex"] = in.name(*v.chordality.violating_vertex);
    } else if (!sc) {
      witness["step"] = "strictly_chordal";
      witness["reason"] = "two minimal separators intersect";
      if (v.chordality.intersecting) {
        witness["separators"] = Json::array({in.names(v.chordality.intersecting->first),
                                             in.names(v.chordality.intersecting->second)});
      }
      if (auto f = forbidden(graph, {Pattern::gem, Pattern::dart}, in)) witness["forbidden"] = *f;
    } else {
      witness["step"] = "derived_path";
      if (v.path_witness) {
        witness["reason"] = v.path_witness->reason;
        Json classes = Json::array();
        for (std::size_t c : v.path_witness->classes) classes.push_back(in.names(v.cc->classes[c]));
        witness["classes"] = classes;
      }
      if (auto f = forbidden(graph, {Pattern::two_net, Pattern::bipartite_claw}, in))
        witness["forbidden"] = *f;
    }
  }

  Json j{{"n", graph.order()},
         {"m", graph.size()},
         {"chordal", chordal},
         {"strictly_chordal", sc},
         {"interval", interval},
         {"strictly_interval", v.strictly_interval},
         {"complete", v.complete},
         {"witness", witness}};
  if (v.strictly_interval) {
    const SICoreRecognition r = recognize_si_core(graph);
    j["si_core"] = r.core ? core_json(*r.core) : Json(nullptr);
  }
  emit(out, j, g);
  return v.strictly_interval ? kOk : kNegative;
}

int cmd_chordal(const Input& in, const Globals& g, std::ostream& out) {
  const Graph& graph = in.graph;
  const PeoResult peo = mcs_peo(graph);
  Json j{{"chordal", peo.chordal}};
  if (!peo.chordal) {
    if (peo.violating) j["violating_vertex"] = in.name(*peo.violating);
    emit(out, j, g);
    return kNegative;
  }
  const CliqueTree ct = clique_tree(graph);
  Json cliques = Json::array();
  for (const VertexSet& q : ct.cliques) cliques.push_back(in.names(q));
  Json seps = Json::array();
  for (const Separator& s : minimal_separators(ct))
    seps.push_back(Json{{"set", in.names(s.vertices)}, {"mu", s.multiplicity}});
  Json tree = Json::array();
  for (const TreeEdge& e : ct.edges) tree.push_back(Json::array({e.a, e.b}));
  j["peo"] = in.names(peo.order);
  j["clique_count"] = ct.cliques.size();
  j["cliques"] = cliques;
  j["clique_tree"] = tree;
  j["separators"] = seps;
  emit(out, j, g);
  return kOk;
}

struct CcOptions {
  bool derived = false;
  std::string output;
  std::string map;
};

int cmd_ccgraph(const Input& in, const CcOptions& o, const Globals& g, std::ostream& out) {
  const CriticalCliqueGraph cc = critical_clique_graph(in.graph);
  std::vector<std::size_t> kept(cc.classes.size());
  for (std::size_t i = 0; i < kept.size(); ++i) kept[i] = i;
  Graph result = cc.quotient;
  if (o.derived) {
    const InducedSubgraph d = derived_graph(cc.quotient);
    result = d.graph;
    kept.assign(d.original.begin(), d.original.end());
  }

  Json classes = Json::array();
  for (std::size_t i = 0; i < kept.size(); ++i) {
    const std::size_t c = kept[i];
    classes.push_back(Json{{"vertex", i},
                           {"members", in.names(cc.classes[c])},
                           {"kind", cc.kinds[c] == ClassKind::simplicial ? "simplicial" : "separator"}});
  }
  const Json map{{"derived", o.derived}, {"classes", classes}};

  const std::string edges = render_edge_list(result);
  if (o.output.empty()) {
    out << edges;
  } else {
    write_file(o.output, edges);
  }
  std::string map_path = o.map;
  if (map_path.empty() && !o.output.empty()) map_path = o.output + ".map.json";
  if (!map_path.empty()) write_file(map_path, map.dump(g.pretty ? 2 : -1) + "\n");
  if (!o.output.empty()) {
    Json j{{"n", result.order()}, {"m", result.size()}, {"file", o.output}, {"map", map_path}};
    emit(out, j, g);
  }
  return kOk;
}

Partition parse_partition(const std::vector<int>& parts, const char* flag) {
  try {
    return Partition(parts);
  } catch (const std::invalid_argument&) {
    throw DomainError(std::string(flag) + ": parts must be positive");
  }
}

struct GenOptions {
  int s = 0;
  int p = 0;
  std::vector<int> lambda1;
  std::vector<int> lambda2;
  bool min = false;
  bool max = false;
  std::string output;
};

int cmd_sicore_gen(const GenOptions& o, const Globals& g, std::ostream& out) {
  const int modes = int{o.min} + int{o.max} + int{!o.lambda1.empty() || !o.lambda2.empty()};
  if (modes != 1) throw DomainError("give exactly one of --min, --max or --lambda1/--lambda2");
  SICore c;
  if (o.min) {
    c = SICore::min(o.s, o.p);
  } else if (o.max) {
    c = SICore::max(o.s, o.p);
  } else {
    if (o.lambda1.empty() || o.lambda2.empty()) throw DomainError("--lambda1 and --lambda2 go together");
    c = SICore::make(o.s, o.p, parse_partition(o.lambda1, "--lambda1"),
                     parse_partition(o.lambda2, "--lambda2"));
  }
  const Graph graph = realize(c);
  const std::string text = render_edge_list(graph);
  if (o.output.empty()) {
    out << text;
    return kOk;
  }
  write_file(o.output, text);
  Json j = core_json(c);
  j["n"] = graph.order();
  j["m"] = graph.size();
  j["file"] = o.output;
  emit(out, j, g);
  return kOk;
}

int cmd_sicore_enum(int s, int p, std::ostream& out) {
  for (const SICore& c : enumerate_si_core(s, p)) out << c.to_string() << '\n';
  return kOk;
}

enum class SpectrumMode { numeric, closed_form, both };

Json exact_entries(const ExactSpectrum& spec) {
  Json a = Json::array();
  for (const ExactEntry& e : spec.entries())
    a.push_back(Json{{"value", e.value.to_double()}, {"exact", e.value.to_string()},
                     {"multiplicity", e.multiplicity}});
  return a;
}

int cmd_spectrum(const Input& in, SpectrumMode mode, const Globals& g, std::ostream& out) {
  const Graph& graph = in.graph;
  std::optional<ExactSpectrum> exact;
  std::optional<SICore> core;
  if (mode != SpectrumMode::numeric) {
    const SICoreRecognition r = recognize_si_core(graph);
    if (!r.core) throw DomainError("no closed form: not an SI-core graph (" + r.reason + ")");
    core = r.core;
    exact = spec_general(*core);
  }

  Json j = Json::object();
  if (core) j["si_core"] = core_json(*core);
  int code = kOk;
  if (mode == SpectrumMode::closed_form) {
    j["eigenvalues"] = exact_entries(*exact);
    j["integral"] = exact->non_integer_count() == 0;
  } else {
    const Matrix l = laplacian(graph);
    const Spectrum numeric = numeric_spectrum(l);
    if (mode == SpectrumMode::numeric) {
      Json a = Json::array();
      for (const SpectrumEntry& e : numeric.entries) {
        const double r = std::round(e.value);
        Json ex = nullptr;
        if (std::abs(e.value - r) <= 1e-6) ex = Surd::integer(static_cast<std::int64_t>(r)).to_string();
        a.push_back(Json{{"value", e.value}, {"exact", ex}, {"multiplicity", e.multiplicity}});
      }
      j["eigenvalues"] = a;
      j["integral"] = is_numerically_integral(numeric);
    } else {
      const std::vector<double> values = symmetric_eigenvalues(l);
      const std::vector<Surd> expected = exact->expanded();
      double worst = 0.0;
      for (std::size_t i = 0; i < values.size(); ++i)
        worst = std::max(worst, std::abs(values[i] - expected[i].to_double()));
      j["eigenvalues"] = exact_entries(*exact);
      j["integral"] = exact->non_integer_count() == 0;
      j["max_deviation"] = worst;
      j["agrees"] = worst <= g.tol;
      if (worst > g.tol) code = kNegative;
    }
  }
  emit(out, j, g);
  return code;
}

Json entries_json(const std::vector<ExactEntry>& side) {
  Json a = Json::array();
  for (const ExactEntry& e : side)
    a.push_back(Json{{"value", e.value.to_string()}, {"multiplicity", e.multiplicity}});
  return a;
}

Json verdict_json(const ZVerdict& v) {
  Json j{{"valid", v.valid}};
  j["s"] = v.params ? Json(v.params->s) : Json(nullptr);
  j["p"] = v.params ? Json(v.params->p) : Json(nullptr);
  j["failure"] = v.valid ? Json(nullptr) : Json(v.failure);
  if (v.split) {
    j["split"] = Json{{"side1", entries_json(v.split->side1)},
                      {"side2", entries_json(v.split->side2)},
                      {"lambda1", partition_json(v.split->lambda1)},
                      {"lambda2", partition_json(v.split->lambda2)}};
  }
  return j;
}

int cmd_zcheck(const std::string& text, const Globals& g, std::ostream& out) {
  const ZVerdict v = validate_z(parse_z(text));
  emit(out, verdict_json(v), g);
  return v.valid ? kOk : kNegative;
}

int cmd_zbuild(const std::string& text, const std::string& prefix, const Globals& g,
               std::ostream& out) {
  const ZMultiset z = parse_z(text);
  std::vector<SICore> cores;
  try {
    cores = reconstruct(z);
  } catch (const ZError& e) {
    emit(out, verdict_json(e.verdict()), g);
    return kNegative;
  }
  Json graphs = Json::array();
  for (std::size_t i = 0; i < cores.size(); ++i) {
    const std::string file = prefix + "_" + std::to_string(i + 1) + ".el";
    write_file(file, render_edge_list(realize(cores[i])));
    Json entry{{"file", file}};
    entry.update(core_json(cores[i]));
    graphs.push_back(entry);
  }
  Json manifest{{"spectrum", text}, {"count", cores.size()}, {"graphs", graphs}};
  write_file(prefix + "_manifest.json", manifest.dump(2) + "\n");
  emit(out, manifest, g);
  return kOk;
}

int cmd_selftest(bool quick, std::ostream& out) {
  AcceptanceConfig config;
  config.quick = quick;
  const AcceptanceReport report = run_acceptance(config);
  for (const CriterionResult& r : report.results) out << format_result(r) << '\n';
  out << (report.all_passed() ? "all criteria passed" : "some criteria FAILED") << '\n';
  return report.all_passed() ? kOk : kNegative;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Strictly interval graphs and SI-core spectra", "sigtool"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals globals;
  app.add_flag("--pretty", globals.pretty, "Indent JSON output");
  app.add_flag("--relabel", globals.relabel,
               "Accept arbitrary vertex labels and report them in the output");
  app.add_option("--tol", globals.tol, "Tolerance for numeric comparisons")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string file;
  std::function<int()> action;

  auto* recognize = app.add_subcommand("recognize", "Strictly interval recognition with witnesses");
  recognize->add_option("file", file, "Edge-list file")->required();
  recognize->callback([&] { action = [&] { return cmd_recognize(load(file, globals), globals, out); }; });

  auto* chordal = app.add_subcommand("chordal", "PEO, maximal cliques, clique tree, separators");
  chordal->add_option("file", file, "Edge-list file")->required();
  chordal->callback([&] { action = [&] { return cmd_chordal(load(file, globals), globals, out); }; });

  CcOptions cc;
  auto* ccgraph = app.add_subcommand("ccgraph", "Critical clique graph, or its derived graph");
  ccgraph->add_option("file", file, "Edge-list file")->required();
  ccgraph->add_flag("--derived", cc.derived, "Remove simplicial classes");
  ccgraph->add_option("-o,--output", cc.output, "Edge-list output file");
  ccgraph->add_option("--map", cc.map, "Class-map JSON file (default: <output>.map.json)");
  ccgraph->callback([&] { action = [&] { return cmd_ccgraph(load(file, globals), cc, globals, out); }; });

  GenOptions gen;
  auto* sicore_gen = app.add_subcommand("sicore-gen", "Build an SI-core graph");
  sicore_gen->add_option("--s", gen.s, "Separator size")->required();
  sicore_gen->add_option("--p", gen.p, "Simplicial vertices per separator")->required();
  sicore_gen->add_option("--lambda1", gen.lambda1, "Partition of p on S1")->delimiter(',');
  sicore_gen->add_option("--lambda2", gen.lambda2, "Partition of p on S2")->delimiter(',');
  auto* min_flag = sicore_gen->add_flag("--min", gen.min, "All twin classes singletons");
  sicore_gen->add_flag("--max", gen.max, "One twin class per side")->excludes(min_flag);
  sicore_gen->add_option("-o,--output", gen.output, "Edge-list output file");
  sicore_gen->callback([&] { action = [&] { return cmd_sicore_gen(gen, globals, out); }; });

  int enum_s = 0;
  int enum_p = 0;
  auto* sicore_enum = app.add_subcommand("sicore-enum", "List G(s,p) up to isomorphism");
  sicore_enum->add_option("--s", enum_s, "Separator size")->required();
  sicore_enum->add_option("--p", enum_p, "Simplicial vertices per separator")->required();
  sicore_enum->callback([&] { action = [&] { return cmd_sicore_enum(enum_s, enum_p, out); }; });

  SpectrumMode mode = SpectrumMode::numeric;
  bool closed = false;
  bool numeric = false;
  bool both = false;
  auto* spectrum = app.add_subcommand("spectrum", "Laplacian spectrum");
  spectrum->add_option("file", file, "Edge-list file")->required();
  auto* closed_flag = spectrum->add_flag("--closed-form", closed, "Exact closed form (SI-core graphs)");
  auto* numeric_flag = spectrum->add_flag("--numeric", numeric, "Jacobi eigenvalues (default)");
  spectrum->add_flag("--both", both, "Closed form checked against the numeric spectrum")
      ->excludes(closed_flag)
      ->excludes(numeric_flag);
  closed_flag->excludes(numeric_flag);
  spectrum->callback([&] {
    mode = both ? SpectrumMode::both : closed ? SpectrumMode::closed_form : SpectrumMode::numeric;
    action = [&] { return cmd_spectrum(load(file, globals), mode, globals, out); };
  });

  std::string z_text;
  auto* zcheck = app.add_subcommand("zcheck", "Is a multiset the spectrum of an SI-core graph?");
  zcheck->add_option("spectrum", z_text, "value:multiplicity,...")->required();
  zcheck->callback([&] { action = [&] { return cmd_zcheck(z_text, globals, out); }; });

  std::string prefix = "sicore";
  auto* zbuild = app.add_subcommand("zbuild", "Write every SI-core graph with a given spectrum");
  zbuild->add_option("spectrum", z_text, "value:multiplicity,...")->required();
  zbuild->add_option("-o,--output", prefix, "Output prefix")->capture_default_str();
  zbuild->callback([&] { action = [&] { return cmd_zbuild(z_text, prefix, globals, out); }; });

  bool quick = false;
  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
  selftest->add_flag("--quick", quick, "Smaller sweeps and corpus");
  selftest->callback([&] { action = [&] { return cmd_selftest(quick, out); }; });

  std::vector<std::string> argv_storage{"sigtool"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return action();
  } catch (const ParseError& e) {
    err << "sigtool: parse error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "sigtool: " << e.what() << '\n';
  }
  return kUsage;
}

}  // namespace sig::cli
