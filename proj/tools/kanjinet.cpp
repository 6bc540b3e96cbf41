// Copyright 2026 The kanjinet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// kanjinet: command-line front end for the character-network pipeline.
//
// Exit codes:
//   0  success
//   1  unexpected internal error
//   2  usage error (bad flags)
//   3  malformed input (corpus, charset, graph or CSV)
//   4  graph is disconnected where a connected one is required
//   5  arguments outside an operation's domain
//   6  file could not be read or written

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <omp.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "kanjinet/corpus.hpp"
#include "kanjinet/errors.hpp"
#include "kanjinet/generators.hpp"
#include "kanjinet/graph.hpp"
#include "kanjinet/graph_io.hpp"
#include "kanjinet/invasion.hpp"
#include "kanjinet/metrics.hpp"
#include "manifest.hpp"
#include "version.hpp"

namespace {

using namespace kanjinet;
using nlohmann::json;
namespace fs = std::filesystem;

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kUsage = 2,
  kBadInput = 3,
  kDisconnected = 4,
  kDomain = 5,
  kIo = 6,
};

struct Global {
  std::uint64_t seed = kDefaultSeed;
  int threads = 0;
  bool quiet = false;
};

Global global;

void info(const std::string& message) {
  if (!global.quiet) std::cerr << message << '\n';
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  return in;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << content)) throw std::ios_base::failure("cannot write " + path);
}

void write_json(const std::string& path, const json& doc) { write_file(path, doc.dump(2) + "\n"); }

SimpleGraph load_graph(const std::string& path) {
  auto in = open_input(path);
  return read_graph_json(in);
}

std::string graph_text(const SimpleGraph& g) {
  std::ostringstream out;
  write_graph_json(out, g);
  return out.str();
}

// Maximal component of `g` when requested, otherwise `g` itself (which must
// then be connected).
SimpleGraph connected_view(SimpleGraph g, bool maximal, const std::string& what) {
  if (maximal) return extract_maximal_component(g).graph;
  const ComponentPartition p = connected_components(g);
  if (p.count() > 1) {
    throw DisconnectedGraphError(what + " has " + std::to_string(p.count()) +
                                 " components; pass --maximal to use the largest");
  }
  return g;
}

json stat_json(const SummaryStat& s) { return {{"mean", s.mean}, {"std", s.std}}; }

json metrics_json(const NetworkMetrics& m) {
  json doc;
  doc["n_nodes"] = m.n_nodes;
  doc["n_edges"] = m.n_edges;
  doc["avg_degree"] = m.avg_degree;
  doc["mean_path_length"] = m.mean_path_length ? json(*m.mean_path_length) : json(nullptr);
  doc["diameter"] = m.diameter ? json(*m.diameter) : json(nullptr);
  doc["clustering"] = m.clustering;
  if (m.c_rand) {
    doc["c_rand"] = {{"mean", m.c_rand->mean},
                     {"std", m.c_rand->std},
                     {"samples", m.c_rand->samples},
                     {"seed", m.c_rand->seed}};
  } else {
    doc["c_rand"] = nullptr;
  }
  if (m.path_approximate) doc["path_sampling"] = {{"sources", m.path_sources}, {"approximate", true}};
  return doc;
}

std::string format_real(double v) {
  std::ostringstream out;
  out << json(v).dump();
  return out.str();
}

// ---------------------------------------------------------------------------

struct BuildArgs {
  std::string corpus;
  std::string policy = "strict";
  std::string format = "words";
  std::string out;
  std::string tsv;
  bool all_components = false;
};

cli::RunManifest run_build(const BuildArgs& a) {
  std::vector<Compound> compounds;
  ParseReport report;
  {
    auto in = open_input(a.corpus);
    if (a.format == "tsv") {
      compounds = read_edge_tsv(in);
      for (const Compound& c : compounds) report.accepted += c.multiplicity;
    } else {
      ParsedCorpus parsed =
          parse_compounds(in, a.policy == "skip" ? ParsePolicy::skip : ParsePolicy::strict);
      compounds = std::move(parsed.compounds);
      report = std::move(parsed.report);
    }
  }
  if (compounds.empty()) throw ParseError(0, "corpus contains no compounds");

  const SimpleGraph full = simplify(build_multigraph(compounds));
  const ComponentPartition p = connected_components(full);
  const SimpleGraph kept =
      a.all_components ? full : extract_component(full, p, p.maximal_id).graph;
  write_file(a.out, graph_text(kept));

  std::vector<std::size_t> sizes = p.sizes;
  std::sort(sizes.rbegin(), sizes.rend());
  json summary;
  summary["n_nodes"] = full.n_nodes();
  summary["n_edges"] = full.n_edges();
  summary["n_components"] = p.count();
  summary["component_sizes"] = sizes;
  summary["maximal_size"] = p.sizes[p.maximal_id];
  summary["maximal_fraction"] =
      static_cast<double>(p.sizes[p.maximal_id]) / static_cast<double>(full.n_nodes());
  summary["compounds"] = compounds.size();
  summary["accepted_lines"] = report.accepted;
  summary["skipped_lines"] = report.skipped;
  json warnings = json::array();
  for (const auto& w : report.warnings) warnings.push_back({{"line", w.line}, {"reason", w.reason}});
  summary["warnings"] = std::move(warnings);
  write_json(a.out + ".components.json", summary);

  cli::RunManifest m;
  m.inputs = {a.corpus};
  m.outputs = {a.out, a.out + ".components.json"};
  if (!a.tsv.empty()) {
    std::ostringstream tsv;
    write_edge_tsv(tsv, compounds);
    write_file(a.tsv, tsv.str());
    m.outputs.push_back(a.tsv);
  }
  info("build: " + std::to_string(full.n_nodes()) + " nodes, " + std::to_string(p.count()) +
       " clusters; maximal cluster " + std::to_string(kept.n_nodes()) + " nodes / " +
       std::to_string(kept.n_edges()) + " edges; " + std::to_string(report.skipped) +
       " lines skipped");
  return m;
}

struct MetricsArgs {
  std::string graph;
  std::string out;
  std::size_t crand_samples = 0;
  std::size_t sample_sources = 0;
  bool maximal = false;
  bool exclude_low_degree = false;
};

cli::RunManifest run_metrics(const MetricsArgs& a) {
  const SimpleGraph g = connected_view(load_graph(a.graph), a.maximal, a.graph);
  MetricsOptions opts;
  opts.path.sample_sources = a.sample_sources;
  opts.path.seed = global.seed;
  opts.crand_samples = a.crand_samples;
  opts.crand_seed = global.seed;
  opts.low_degree =
      a.exclude_low_degree ? LowDegreePolicy::exclude : LowDegreePolicy::count_as_zero;
  const NetworkMetrics m = compute_metrics(g, opts);
  write_json(a.out, metrics_json(m));
  info("metrics: <k>=" + format_real(m.avg_degree) + " C=" + format_real(m.clustering));
  cli::RunManifest manifest;
  manifest.inputs = {a.graph};
  manifest.outputs = {a.out};
  return manifest;
}

struct DegreeArgs {
  std::string graph;
  std::string out;
  bool maximal = false;
};

cli::RunManifest run_degree(const DegreeArgs& a) {
  SimpleGraph g = load_graph(a.graph);
  if (a.maximal) g = extract_maximal_component(g).graph;
  std::ostringstream csv;
  write_degree_csv(csv, degree_distribution(g));
  write_file(a.out, csv.str());
  cli::RunManifest m;
  m.inputs = {a.graph};
  m.outputs = {a.out};
  return m;
}

struct FitArgs {
  std::string graph;
  std::string degrees;
  std::string out;
  std::size_t k_min = 0;
  std::size_t k_max = 0;
  std::string binning = "log";
  double base = 2.0;
};

cli::RunManifest run_fit(const FitArgs& a) {
  DegreeDistribution d;
  cli::RunManifest m;
  if (!a.graph.empty()) {
    d = degree_distribution(load_graph(a.graph));
    m.inputs = {a.graph};
  } else {
    auto in = open_input(a.degrees);
    d = read_degree_csv(in);
    m.inputs = {a.degrees};
  }
  BinningSpec spec;
  spec.kind = a.binning == "raw" ? Binning::raw : Binning::log;
  spec.base = a.base;
  const PowerLawFit fit = fit_power_law(d, a.k_min, a.k_max, spec);
  json doc;
  doc["gamma"] = fit.gamma;
  doc["stderr"] = fit.stderr_gamma;
  doc["r_squared"] = fit.r_squared;
  doc["k_min"] = fit.k_min;
  doc["k_max"] = fit.k_max;
  doc["binning"] = binning_name(fit.binning);
  doc["bins"] = fit.bins;
  write_json(a.out, doc);
  info("fit: gamma=" + format_real(fit.gamma) + " r^2=" + format_real(fit.r_squared));
  m.outputs = {a.out};
  return m;
}

struct RestrictArgs {
  std::string graph;
  std::string charset;
  std::string label;
  std::string out;
  bool maximal = false;
};

cli::RunManifest run_restrict(const RestrictArgs& a) {
  const SimpleGraph g = load_graph(a.graph);
  LoadedCharSet set;
  {
    auto in = open_input(a.charset);
    set = load_charset(in, a.label.empty() ? fs::path(a.charset).stem().string() : a.label);
  }
  for (const auto& w : set.warnings) {
    info("restrict: charset line " + std::to_string(w.line) + ": " + w.reason);
  }
  const Restriction r = induced_subgraph(g, set.charset);
  if (r.warning) info("restrict: warning: " + *r.warning);
  const SimpleGraph kept = a.maximal ? extract_maximal_component(r.sub.graph).graph : r.sub.graph;
  write_file(a.out, graph_text(kept));

  json summary;
  summary["charset_label"] = set.charset.label;
  summary["charset_size"] = set.charset.size();
  summary["restricted_nodes"] = r.sub.graph.n_nodes();
  summary["restricted_edges"] = r.sub.graph.n_edges();
  summary["n_nodes"] = kept.n_nodes();
  summary["n_edges"] = kept.n_edges();
  std::string missing;
  for (Char c : r.missing) missing += to_utf8(c);
  summary["missing_characters"] = missing;
  summary["warning"] = r.warning ? json(*r.warning) : json(nullptr);
  write_json(a.out + ".restrict.json", summary);

  info("restrict: kept " + std::to_string(kept.n_nodes()) + " nodes / " +
       std::to_string(kept.n_edges()) + " edges; " + std::to_string(r.missing.size()) +
       " characters absent from the graph");
  cli::RunManifest m;
  m.inputs = {a.graph, a.charset};
  m.outputs = {a.out, a.out + ".restrict.json"};
  return m;
}

struct InvadeArgs {
  std::string graph;
  std::string out;
  double alpha = 1.3;
  std::size_t target_size = 0;
  std::size_t runs = 1;
  std::optional<NodeId> start_node;
  std::string metrics = "full";
  std::string induced_dir;
  bool record_order = false;
  bool maximal = false;
};

cli::RunManifest run_invade(const InvadeArgs& a) {
  const SimpleGraph host = connected_view(load_graph(a.graph), a.maximal, a.graph);
  InvasionOptions opts;
  opts.start_node = a.start_node;
  opts.metrics = a.metrics == "degree" ? RunMetrics::degree_only : RunMetrics::full;
  const EnsembleResult e = invade_ensemble(host, a.target_size, a.alpha, a.runs, global.seed, opts);

  json doc;
  doc["target_size"] = e.target_size;
  doc["alpha"] = e.alpha;
  doc["runs"] = e.runs.size();
  doc["seed"] = e.seed;
  doc["avg_degree"] = stat_json(e.avg_degree);
  doc["mean_path_length"] = e.mean_path_length ? stat_json(*e.mean_path_length) : json(nullptr);
  doc["clustering"] = stat_json(e.clustering);
  json per_run = json::array();
  cli::RunManifest m;
  if (!a.induced_dir.empty()) fs::create_directories(a.induced_dir);
  for (std::size_t r = 0; r < e.runs.size(); ++r) {
    const InvasionRun& run = e.runs[r];
    json item = metrics_json(run.metrics);
    item.erase("c_rand");
    item["run"] = r;
    item["seed"] = run.seed;
    if (a.record_order) item["invaded_nodes"] = run.invaded_nodes;
    per_run.push_back(std::move(item));
    if (!a.induced_dir.empty()) {
      char name[32];
      std::snprintf(name, sizeof name, "run_%04zu.json", r);
      const std::string path = (fs::path(a.induced_dir) / name).string();
      write_file(path, graph_text(run.induced.graph));
      m.outputs.push_back(path);
    }
  }
  doc["per_run"] = std::move(per_run);
  write_json(a.out, doc);
  m.outputs.insert(m.outputs.begin(), a.out);
  m.inputs = {a.graph};
  info("invade: <k> = " + format_real(e.avg_degree.mean) + " +- " + format_real(e.avg_degree.std) +
       " over " + std::to_string(e.runs.size()) + " runs");
  return m;
}

struct CalibrateArgs {
  std::string graph;
  std::string out;
  std::string curve;
  std::size_t target_size = 0;
  std::optional<double> target_k;
  std::optional<double> target_from_alpha;
  CalibrationOptions opts;
  double sweep_step = 0.0;
  bool maximal = false;
};

cli::RunManifest run_calibrate(CalibrateArgs a) {
  const SimpleGraph host = connected_view(load_graph(a.graph), a.maximal, a.graph);
  a.opts.seed = global.seed;
  double target = 0.0;
  if (a.target_k) {
    target = *a.target_k;
  } else {
    target = evaluate_alpha(host, a.target_size, *a.target_from_alpha, a.opts.runs, a.opts.seed).mean_k;
    info("calibrate: target <k> = " + format_real(target) + " generated at alpha = " +
         format_real(*a.target_from_alpha));
  }
  const CalibrationResult r = calibrate_alpha(host, a.target_size, target, a.opts);

  json doc;
  doc["alpha_star"] = r.alpha_star;
  doc["target_k"] = r.target_k;
  doc["target_size"] = r.target_size;
  doc["achieved_k"] = stat_json(r.achieved_k);
  doc["runs"] = r.runs;
  doc["tol"] = r.tol;
  doc["converged"] = r.converged;
  doc["seed"] = r.seed;
  doc["alpha_range"] = {a.opts.alpha_lo, a.opts.alpha_hi};
  if (a.target_from_alpha) doc["target_from_alpha"] = *a.target_from_alpha;
  json evals = json::array();
  for (const auto& e : r.evaluations) {
    evals.push_back({{"alpha", e.alpha}, {"mean_k", e.mean_k}, {"std_k", e.std_k}});
  }
  doc["evaluations"] = std::move(evals);
  write_json(a.out, doc);

  std::vector<AlphaEvaluation> curve = r.evaluations;
  if (a.sweep_step > 0.0) {
    std::vector<double> grid;
    const auto steps =
        static_cast<std::size_t>(std::floor((a.opts.alpha_hi - a.opts.alpha_lo) / a.sweep_step + 1e-9));
    for (std::size_t i = 0; i <= steps; ++i) grid.push_back(a.opts.alpha_lo + i * a.sweep_step);
    const auto swept = sweep_alpha(host, a.target_size, grid, a.opts.runs, a.opts.seed);
    curve.insert(curve.end(), swept.begin(), swept.end());
  }
  std::sort(curve.begin(), curve.end(),
            [](const AlphaEvaluation& x, const AlphaEvaluation& y) { return x.alpha < y.alpha; });
  curve.erase(std::unique(curve.begin(), curve.end(),
                          [](const AlphaEvaluation& x, const AlphaEvaluation& y) {
                            return x.alpha == y.alpha;
                          }),
              curve.end());
  std::ostringstream csv;
  csv << "alpha,mean_k,std_k\n";
  for (const auto& e : curve) {
    csv << format_real(e.alpha) << ',' << format_real(e.mean_k) << ',' << format_real(e.std_k)
        << '\n';
  }
  const std::string curve_path = a.curve.empty() ? a.out + ".curve.csv" : a.curve;
  write_file(curve_path, csv.str());

  info("calibrate: alpha* = " + format_real(r.alpha_star) + " (<k> = " +
       format_real(r.achieved_k.mean) + ", target " + format_real(r.target_k) + ")" +
       (r.converged ? "" : " [tolerance not reached]"));
  cli::RunManifest m;
  m.inputs = {a.graph};
  m.outputs = {a.out, curve_path};
  return m;
}

struct GenArgs {
  std::string out;
  std::string format = "json";
  std::size_t nodes = 0;
  double rate = 1.0;
  std::string rule = "threshold";
  std::optional<double> z;
  std::optional<std::uint64_t> edges;
  double c = 0.0;
  bool maximal = false;
};

void write_generated(SimpleGraph g, const std::string& format, const std::string& out) {
  const std::vector<Char> labels = cjk_labels(g.n_nodes());
  if (format == "corpus") {
    std::ostringstream text;
    write_corpus(text, graph_to_corpus(g, labels));
    write_file(out, text.str());
    return;
  }
  std::vector<double> fitness = g.fitness();
  SimpleGraph labeled(g.n_nodes(), g.edges(), labels);
  labeled.set_fitness(std::move(fitness));
  write_file(out, graph_text(labeled));
}

cli::RunManifest run_gen(const GenArgs& a) {
  FitnessConfig cfg;
  cfg.n = a.nodes;
  cfg.fitness.rate = a.rate;
  cfg.seed = global.seed;
  if (a.rule == "product") {
    cfg.link = ProductRule{a.c};
  } else if (a.z) {
    cfg.link = ThresholdRule{*a.z};
  } else {
    cfg.link = ThresholdRule{threshold_for_edge_count(draw_fitness(cfg), *a.edges)};
  }
  SimpleGraph g = fitness_network(cfg);
  if (a.maximal) g = extract_maximal_component(g).graph;
  write_generated(std::move(g), a.format, a.out);
  info("gen: fitness network with " + std::to_string(a.nodes) + " nodes written to " + a.out);
  cli::RunManifest m;
  m.outputs = {a.out};
  return m;
}

struct RandomArgs {
  std::string out;
  std::string format = "json";
  std::size_t nodes = 0;
  std::size_t edges = 0;
};

cli::RunManifest run_random(const RandomArgs& a) {
  write_generated(gnm_random(a.nodes, a.edges, global.seed), a.format, a.out);
  cli::RunManifest m;
  m.outputs = {a.out};
  return m;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Character co-occurrence network analysis and invasion-model calibration",
               "kanjinet"};
  app.set_version_flag("--version", kanjinet::cli::kVersion);
  app.require_subcommand(1);
  app.fallthrough();
  app.option_defaults()->always_capture_default();
  app.add_option("--seed", global.seed, "Master random seed");
  app.add_option("--threads", global.threads, "Worker threads (0 = OpenMP default)")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--quiet,-q", global.quiet, "Suppress progress messages on stderr");

  const auto policies = CLI::IsMember({"strict", "skip"});

  BuildArgs build;
  auto* build_cmd = app.add_subcommand("build", "Corpus -> maximal-cluster graph JSON");
  build_cmd->add_option("--corpus,-c", build.corpus, "Word list (or TSV edge list)")
      ->required()
      ->check(CLI::ExistingFile);
  build_cmd->add_option("--policy", build.policy, "Malformed-line policy")->check(policies);
  build_cmd->add_option("--input-format", build.format, "Input format")
      ->check(CLI::IsMember({"words", "tsv"}));
  build_cmd->add_option("--out,-o", build.out, "Graph JSON output")->required();
  build_cmd->add_option("--tsv", build.tsv, "Also export the compound edge list as TSV");
  build_cmd->add_flag("--all-components", build.all_components,
                      "Write every component instead of the maximal cluster");

  MetricsArgs metrics;
  auto* metrics_cmd = app.add_subcommand("metrics", "Small-world statistics of a graph");
  metrics_cmd->add_option("--graph,-g", metrics.graph)->required()->check(CLI::ExistingFile);
  metrics_cmd->add_option("--out,-o", metrics.out)->required();
  metrics_cmd->add_option("--crand-samples", metrics.crand_samples,
                          "Random G(n,m) graphs for the C_rand baseline");
  metrics_cmd->add_option("--sample-sources", metrics.sample_sources,
                          "Approximate path statistics from this many BFS sources");
  metrics_cmd->add_flag("--maximal", metrics.maximal, "Use the maximal component");
  metrics_cmd->add_flag("--exclude-low-degree", metrics.exclude_low_degree,
                        "Leave k < 2 nodes out of the clustering average");

  DegreeArgs degree;
  auto* degree_cmd = app.add_subcommand("degree", "Degree distribution CSV");
  degree_cmd->add_option("--graph,-g", degree.graph)->required()->check(CLI::ExistingFile);
  degree_cmd->add_option("--out,-o", degree.out)->required();
  degree_cmd->add_flag("--maximal", degree.maximal, "Use the maximal component");

  FitArgs fit;
  auto* fit_cmd = app.add_subcommand("fit", "Power-law fit of a degree distribution");
  auto* fit_graph = fit_cmd->add_option("--graph,-g", fit.graph)->check(CLI::ExistingFile);
  auto* fit_csv = fit_cmd->add_option("--degrees,-d", fit.degrees, "Degree CSV")
                      ->check(CLI::ExistingFile);
  fit_graph->excludes(fit_csv);
  fit_cmd->add_option("--k-min", fit.k_min)->required();
  fit_cmd->add_option("--k-max", fit.k_max)->required();
  fit_cmd->add_option("--binning", fit.binning)->check(CLI::IsMember({"raw", "log"}));
  fit_cmd->add_option("--base", fit.base, "Log-binning base");
  fit_cmd->add_option("--out,-o", fit.out)->required();

  RestrictArgs restrict_args;
  auto* restrict_cmd = app.add_subcommand("restrict", "Induced subgraph on a character set");
  restrict_cmd->add_option("--graph,-g", restrict_args.graph)->required()->check(CLI::ExistingFile);
  restrict_cmd->add_option("--charset", restrict_args.charset)->required()->check(CLI::ExistingFile);
  restrict_cmd->add_option("--label", restrict_args.label, "Charset label (default: file stem)");
  restrict_cmd->add_flag("--maximal", restrict_args.maximal,
                         "Keep only the maximal component of the restriction");
  restrict_cmd->add_option("--out,-o", restrict_args.out)->required();

  InvadeArgs invade_args;
  auto* invade_cmd = app.add_subcommand("invade", "Run the invasion model on a host graph");
  invade_cmd->add_option("--graph,-g", invade_args.graph, "Host graph")->required()->check(CLI::ExistingFile);
  invade_cmd->add_option("--alpha", invade_args.alpha)->check(CLI::NonNegativeNumber);
  invade_cmd->add_option("--target-size", invade_args.target_size)->required();
  invade_cmd->add_option("--runs", invade_args.runs);
  invade_cmd->add_option("--start-node", invade_args.start_node, "Fixed start node id");
  invade_cmd->add_option("--metrics", invade_args.metrics, "Per-run metrics")
      ->check(CLI::IsMember({"full", "degree"}));
  invade_cmd->add_option("--induced-dir", invade_args.induced_dir,
                         "Write each run's induced graph here");
  invade_cmd->add_flag("--record-order", invade_args.record_order,
                       "Include each run's invasion order");
  invade_cmd->add_flag("--maximal", invade_args.maximal, "Use the host's maximal component");
  invade_cmd->add_option("--out,-o", invade_args.out)->required();

  CalibrateArgs cal;
  auto* cal_cmd = app.add_subcommand("calibrate", "Fit alpha to a target average degree");
  cal_cmd->add_option("--graph,-g", cal.graph, "Host graph")->required()->check(CLI::ExistingFile);
  cal_cmd->add_option("--target-size", cal.target_size)->required();
  auto* tk = cal_cmd->add_option("--target-k", cal.target_k, "Target <k>");
  auto* tfa = cal_cmd->add_option("--target-from-alpha", cal.target_from_alpha,
                                  "Generate the target <k> at this alpha (round-trip check)");
  tk->excludes(tfa);
  cal_cmd->add_option("--alpha-min", cal.opts.alpha_lo);
  cal_cmd->add_option("--alpha-max", cal.opts.alpha_hi);
  cal_cmd->add_option("--tol", cal.opts.tol, "Tolerance on mean <k>");
  cal_cmd->add_option("--min-interval", cal.opts.min_interval, "Smallest alpha bracket");
  cal_cmd->add_option("--runs", cal.opts.runs, "Invasions per alpha");
  cal_cmd->add_option("--sweep-step", cal.sweep_step,
                      "Also evaluate a regular alpha grid for the curve CSV");
  cal_cmd->add_option("--curve", cal.curve, "Curve CSV (default: <out>.curve.csv)");
  cal_cmd->add_flag("--maximal", cal.maximal, "Use the host's maximal component");
  cal_cmd->add_option("--out,-o", cal.out)->required();

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Fitness-model network");
  gen_cmd->add_option("--nodes,-n", gen.nodes)->required();
  gen_cmd->add_option("--rate", gen.rate, "Exponential fitness rate");
  gen_cmd->add_option("--rule", gen.rule)->check(CLI::IsMember({"threshold", "product"}));
  auto* gen_z = gen_cmd->add_option("--z", gen.z, "Threshold");
  auto* gen_m = gen_cmd->add_option("--edges,-m", gen.edges, "Tune the threshold to this edge count");
  gen_z->excludes(gen_m);
  gen_cmd->add_option("--c", gen.c, "Product-rule constant");
  gen_cmd->add_option("--format", gen.format)->check(CLI::IsMember({"json", "corpus"}));
  gen_cmd->add_flag("--maximal", gen.maximal, "Keep only the maximal component");
  gen_cmd->add_option("--out,-o", gen.out)->required();

  RandomArgs random_args;
  auto* random_cmd = app.add_subcommand("random", "Uniform G(n, m) graph");
  random_cmd->add_option("--nodes,-n", random_args.nodes)->required();
  random_cmd->add_option("--edges,-m", random_args.edges)->required();
  random_cmd->add_option("--format", random_args.format)->check(CLI::IsMember({"json", "corpus"}));
  random_cmd->add_option("--out,-o", random_args.out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (global.threads > 0) omp_set_num_threads(global.threads);

  try {
    kanjinet::cli::RunManifest manifest;
    std::string primary;
    if (build_cmd->parsed()) {
      manifest = run_build(build);
      primary = build.out;
    } else if (metrics_cmd->parsed()) {
      manifest = run_metrics(metrics);
      primary = metrics.out;
    } else if (degree_cmd->parsed()) {
      manifest = run_degree(degree);
      primary = degree.out;
    } else if (fit_cmd->parsed()) {
      if (fit.graph.empty() && fit.degrees.empty()) {
        std::cerr << "fit: one of --graph or --degrees is required\n";
        return kUsage;
      }
      manifest = run_fit(fit);
      primary = fit.out;
    } else if (restrict_cmd->parsed()) {
      manifest = run_restrict(restrict_args);
      primary = restrict_args.out;
    } else if (invade_cmd->parsed()) {
      manifest = run_invade(invade_args);
      primary = invade_args.out;
    } else if (cal_cmd->parsed()) {
      if (!cal.target_k && !cal.target_from_alpha) {
        std::cerr << "calibrate: one of --target-k or --target-from-alpha is required\n";
        return kUsage;
      }
      manifest = run_calibrate(cal);
      primary = cal.out;
    } else if (gen_cmd->parsed()) {
      if (gen.rule == "threshold" && !gen.z && !gen.edges) {
        std::cerr << "gen: the threshold rule needs --z or --edges\n";
        return kUsage;
      }
      manifest = run_gen(gen);
      primary = gen.out;
    } else if (random_cmd->parsed()) {
      manifest = run_random(random_args);
      primary = random_args.out;
    }
    manifest.subcommand = app.get_subcommands().front()->get_name();
    manifest.args.assign(argv + 1, argv + argc);
    manifest.seed = global.seed;
    manifest.threads = omp_get_max_threads();
    manifest.write(primary);
    return kOk;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const DisconnectedGraphError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDisconnected;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}
