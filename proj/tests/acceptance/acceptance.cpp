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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "cli_runner.hpp"
#include "kanjinet/generators.hpp"
#include "kanjinet/graph.hpp"
#include "kanjinet/invasion.hpp"
#include "kanjinet/metrics.hpp"
#include "oracles.hpp"

using namespace kanjinet;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

// Synthetic host shared by the calibration and shape criteria: threshold
// fitness model, exponential fitness with rate 1, threshold tuned to 75000
// edges, maximal component.
const SimpleGraph& fitness_host() {
  static const SimpleGraph host = [] {
    FitnessConfig cfg;
    cfg.n = 5458;
    cfg.fitness.rate = 1.0;
    cfg.seed = 7;
    cfg.link = ThresholdRule{threshold_for_edge_count(draw_fitness(cfg), 75000)};
    return extract_maximal_component(fitness_network(cfg)).graph;
  }();
  return host;
}

// ---------------------------------------------------------------------------

void c_rand_reproduction(Outcome& out) {
  struct Row {
    std::size_t n, m;
    double expected;
  };
  const Row rows[] = {{5458, 74617, 0.00501}, {3904, 32150, 0.00424}, {3444, 28358, 0.00483}};
  for (const Row& r : rows) {
    const auto t0 = Clock::now();
    const BaselineStats s = c_rand_baseline(r.n, r.m, 50, kDefaultSeed);
    const double secs = seconds_since(t0);
    const double rel = std::abs(s.mean - r.expected) / r.expected;
    out.detail << " (" << r.n << "," << r.m << "): " << fixed(s.mean, 5) << " vs "
               << r.expected << " [" << fixed(100 * rel, 1) << "%, " << fixed(secs, 1) << "s]";
    out.require(rel <= 0.10, "C_rand within 10% for n=" + std::to_string(r.n));
    out.require(secs <= 120.0, "C_rand runtime for n=" + std::to_string(r.n));
  }
}

void average_degree_identities(Outcome& out) {
  struct Row {
    std::size_t nodes, edges;
    double printed;
  };
  const Row rows[] = {{5458, 74617, 27.3}, {3904, 32150, 16.5}, {3444, 28358, 16.5}, {1799, 9054, 10.1}};
  for (const Row& r : rows) {
    const double k = average_degree(gnm_random(r.nodes, r.edges, kDefaultSeed));
    const double rounded = std::round(k * 10.0) / 10.0;
    out.detail << " " << fixed(k, 3) << "->" << fixed(rounded, 1);
    out.require(std::abs(rounded - r.printed) < 1e-9,
                "2M/N for N=" + std::to_string(r.nodes) + " rounds to " + fixed(r.printed, 1));
  }
}

void metric_oracles(Outcome& out) {
  std::mt19937_64 gen(20260);
  std::size_t path_mismatch = 0, diameter_mismatch = 0, clustering_mismatch = 0;
  double worst_c = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + gen() % 49;  // 2..50
    const std::size_t extra = gen() % (2 * n + 1);
    const SimpleGraph g = oracle::random_graph(gen, n, extra, true);
    const oracle::AllPairs fw = oracle::floyd_warshall(g);
    const PathStatistics ps = path_statistics(g);
    if (ps.mean_path_length != fw.mean) ++path_mismatch;
    if (static_cast<long>(ps.diameter) != fw.diameter) ++diameter_mismatch;
    const double diff = std::abs(clustering_coefficient(g) - oracle::brute_force_clustering(g));
    worst_c = std::max(worst_c, diff);
    if (diff > 1e-12) ++clustering_mismatch;
  }
  out.detail << " 200 graphs: l mismatches " << path_mismatch << ", D mismatches "
             << diameter_mismatch << ", max |dC| " << worst_c;
  out.require(path_mismatch == 0, "mean path length equals Floyd-Warshall");
  out.require(diameter_mismatch == 0, "diameter equals Floyd-Warshall");
  out.require(clustering_mismatch == 0, "clustering within 1e-12 of triangle enumeration");
}

void power_law_recovery(Outcome& out) {
  struct Window {
    std::size_t lo, hi;
  };
  const Window windows[] = {{1, 100}, {1, 1000}, {2, 500}};
  for (double gamma : {1.04, 1.05, 2.0}) {
    for (const Window& w : windows) {
      // counts(k) = round(1e12 k^-gamma)
      DegreeDistribution d;
      for (std::size_t k = w.lo; k <= w.hi; ++k) {
        const auto c = static_cast<std::uint64_t>(std::llround(1e12 * std::pow(double(k), -gamma)));
        d.counts[k] = c;
        d.n_nodes += c;
      }
      for (Binning b : {Binning::log, Binning::raw}) {
        const PowerLawFit fit = fit_power_law(d, w.lo, w.hi, {b});
        const std::string tag = "gamma=" + fixed(gamma, 2) + " [" + std::to_string(w.lo) + "," +
                                std::to_string(w.hi) + "] " + binning_name({b});
        out.require(std::abs(fit.gamma - gamma) <= 0.02, tag + " within 0.02");
        out.require(fit.r_squared >= 0.999, tag + " r^2 >= 0.999");
        if (b == Binning::log && w.hi == 1000) {
          out.detail << " " << fixed(gamma, 2) << "->" << fixed(fit.gamma, 4) << " (r^2 "
                     << fixed(fit.r_squared, 5) << ")";
        }
      }
    }
  }
}

// Union-find connectivity of the invaded set, independent of the library.
bool invaded_set_connected(const SimpleGraph& host, const std::vector<NodeId>& members) {
  std::vector<std::size_t> parent(host.n_nodes());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  std::vector<bool> in(host.n_nodes(), false);
  for (NodeId v : members) in[v] = true;
  for (const auto& [u, v] : host.edges()) {
    if (in[u] && in[v]) parent[find(u)] = find(v);
  }
  for (NodeId v : members) {
    if (find(v) != find(members.front())) return false;
  }
  return true;
}

void invasion_invariants(Outcome& out) {
  std::mt19937_64 gen(515);
  const double alphas[] = {0.0, 0.5, 1.0, 1.3, 2.0};
  std::size_t disconnected = 0, bad_sum = 0, bad_frontier = 0, steps = 0;
  long double worst_sum = 0.0L;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + gen() % 199;  // 2..200
    const SimpleGraph host = oracle::random_graph(gen, n, gen() % (3 * n), true);
    const double alpha = alphas[trial % 5];
    InvasionProcess p(host, alpha, derive_seed(515, trial));
    while (!p.frontier_empty()) {
      const auto frontier = p.frontier();
      const auto probs = p.frontier_probabilities();
      long double sum = 0.0L;
      for (double q : probs) sum += q;
      worst_sum = std::max(worst_sum, std::abs(sum - 1.0L));
      if (std::abs(sum - 1.0L) > 1e-12L) ++bad_sum;
      // every frontier node is uninvaded and touches the invaded set
      for (NodeId v : frontier) {
        const auto nb = host.neighbors(v);
        if (p.is_invaded(v) ||
            std::none_of(nb.begin(), nb.end(), [&](NodeId w) { return p.is_invaded(w); })) {
          ++bad_frontier;
        }
      }
      p.step();
      ++steps;
      if (!invaded_set_connected(host, p.invaded())) ++disconnected;
    }
    if (p.invaded().size() != n) ++disconnected;
  }
  out.detail << " 1000 hosts, " << steps << " steps: disconnected " << disconnected
             << ", sum violations " << bad_sum << " (max |sum-1| "
             << static_cast<double>(worst_sum) << "), frontier errors " << bad_frontier << ";";
  out.require(disconnected == 0, "invaded set connected after every step");
  out.require(bad_sum == 0, "frontier probabilities sum to 1 within 1e-12");
  out.require(bad_frontier == 0, "frontier membership");

  // Fixed frontier of 8 candidates with degrees 1..8 around an invaded hub.
  std::vector<Edge> edges;
  NodeId next = 9;
  for (NodeId i = 1; i <= 8; ++i) {
    edges.emplace_back(0, i);
    for (NodeId j = 1; j < i; ++j) edges.emplace_back(i, next++);
  }
  const SimpleGraph host(next, edges);
  constexpr int kTrials = 20000;
  const auto uniformity_p = [&](std::uint64_t master) {
    std::vector<double> observed(8, 0.0);
    for (int t = 0; t < kTrials; ++t) {
      InvasionProcess p(host, 0.0, derive_seed(master, t), NodeId{0});
      observed[p.step() - 1] += 1.0;
    }
    double stat = 0.0;
    const double expected = kTrials / 8.0;
    for (double o : observed) stat += (o - expected) * (o - expected) / expected;
    return boost::math::cdf(boost::math::complement(boost::math::chi_squared(7.0), stat));
  };
  const double pvalue = uniformity_p(kDefaultSeed);
  out.detail << " alpha=0 chi-square p=" << fixed(pvalue, 3) << " (seed 0x5EED)";
  out.require(pvalue > 0.01, "alpha=0 uniformity p > 0.01");

  // Under a uniform sampler the p-values of independent repetitions are
  // themselves uniform; Kolmogorov-Smirnov over 100 master seeds.
  std::vector<double> ps;
  for (std::uint64_t m = 1; m <= 100; ++m) ps.push_back(uniformity_p(derive_seed(kDefaultSeed, m)));
  std::sort(ps.begin(), ps.end());
  double ks = 0.0;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    ks = std::max({ks, ps[i] - double(i) / ps.size(), double(i + 1) / ps.size() - ps[i]});
  }
  out.detail << "; KS over 100 seeds D=" << fixed(ks, 3) << " (1% critical 0.163)";
  out.require(ks < 0.163, "p-values over repeated seeds consistent with uniform");
}

void calibration_round_trip(Outcome& out) {
  const auto t0 = Clock::now();
  const SimpleGraph& host = fitness_host();
  constexpr std::size_t kTarget = 1940;
  constexpr std::uint64_t kSeed = 2026;
  const double target_k = evaluate_alpha(host, kTarget, 1.3, 50, kSeed).mean_k;
  CalibrationOptions opts;
  opts.seed = kSeed;
  const CalibrationResult r = calibrate_alpha(host, kTarget, target_k, opts);
  const double alphas[] = {0.0, 1.0, 2.0};
  const auto curve = sweep_alpha(host, kTarget, alphas, 50, derive_seed(kSeed, 1));
  const double secs = seconds_since(t0);
  out.detail << " host " << host.n_nodes() << " nodes / " << host.n_edges()
             << " edges; target <k> " << fixed(target_k, 3) << "; alpha* " << fixed(r.alpha_star, 4)
             << " (<k> " << fixed(r.achieved_k.mean, 3) << ", " << r.evaluations.size()
             << " evaluations); <k>(0,1,2) = " << fixed(curve[0].mean_k, 2) << ", "
             << fixed(curve[1].mean_k, 2) << ", " << fixed(curve[2].mean_k, 2) << " ["
             << fixed(secs, 1) << "s]";
  out.require(r.alpha_star >= 1.25 && r.alpha_star <= 1.35, "alpha* in [1.25, 1.35]");
  out.require(curve[0].mean_k < curve[1].mean_k && curve[1].mean_k < curve[2].mean_k,
              "<k>(alpha) strictly increasing");
  out.require(secs <= 600.0, "runtime <= 10 minutes");
}

void degree_shape(Outcome& out) {
  const SimpleGraph& host = fitness_host();
  const DegreeDistribution hd = degree_distribution(host);
  const std::size_t k_max = hd.counts.rbegin()->first;
  const PowerLawFit host_fit = fit_power_law(hd, 5, 1000);
  const double decades = std::log10(1000.0 / 5.0);
  const PowerLawFit host_small = fit_power_law(hd, 2, 10);

  InvasionOptions opts;
  opts.metrics = RunMetrics::degree_only;
  const EnsembleResult e = invade_ensemble(host, 1940, 1.3, 50, 31, opts);
  DegreeDistribution pooled;
  for (const InvasionRun& run : e.runs) {
    for (const auto& [k, c] : degree_distribution(run.induced.graph).counts) {
      pooled.counts[k] += c;
      pooled.n_nodes += c;
    }
  }
  const PowerLawFit invaded_small = fit_power_law(pooled, 2, 10);
  const double margin_power = host_fit.gamma - invaded_small.gamma;
  const double margin_small = host_small.gamma - invaded_small.gamma;
  out.detail << " host max degree " << k_max << "; host fit k in [5,1000] gamma "
             << fixed(host_fit.gamma, 3) << " r^2 " << fixed(host_fit.r_squared, 4) << " over "
             << fixed(decades, 2) << " decades; host k in [2,10] gamma "
             << fixed(host_small.gamma, 3) << "; invaded k in [2,10] gamma "
             << fixed(invaded_small.gamma, 3) << " (shallower by " << fixed(margin_power, 3)
             << " / " << fixed(margin_small, 3) << ")";
  out.require(k_max >= 1000, "host degrees reach the top of the fit window");
  out.require(decades >= 1.5, "fit spans >= 1.5 decades");
  out.require(host_fit.r_squared >= 0.98, "host power-law r^2 >= 0.98");
  out.require(margin_power >= 0.4, "invaded slope shallower than host power-law slope by 0.4");
  out.require(margin_small >= 0.4, "invaded slope shallower than host [2,10] slope by 0.4");
}

void cli_determinism(Outcome& out) {
  const std::string cli = KANJINET_CLI;
  clirun::ScratchDir dir("acceptance");
  if (clirun::run(cli, "--seed 7 gen -n 600 --edges 4000 --maximal -o " + (dir / "host.json")) != 0) {
    out.require(false, "host generation");
    return;
  }
  const std::string host = dir / "host.json";
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"random", "random -n 2000 -m 9000"},
      {"gen-threshold", "gen -n 2000 --edges 9000"},
      {"gen-product", "gen -n 2000 --rule product --c 0.01 --format corpus"},
      {"metrics", "metrics --crand-samples 6 --sample-sources 50 -g " + host},
      {"invade", "invade --alpha 1.3 --target-size 150 --runs 12 --record-order -g " + host},
      {"calibrate", "calibrate --target-size 150 --target-from-alpha 1.3 --runs 12 --sweep-step 0.5 -g " + host},
  };
  std::size_t identical = 0;
  for (const auto& [tag, cmd] : commands) {
    std::vector<std::string> outputs;
    const std::pair<int, int> variants[] = {{1, 0}, {1, 1}, {4, 2}, {3, 3}};
    bool ok = true;
    for (const auto& [threads, rep] : variants) {
      const std::string file = tag + "_" + std::to_string(rep);
      const int rc = clirun::run(cli, "--seed 123 --threads " + std::to_string(threads) + " " +
                                          cmd + " -o " + (dir / file));
      if (rc != 0) {
        out.require(false, tag + " exit code " + std::to_string(rc));
        ok = false;
        break;
      }
      outputs.push_back(clirun::slurp(dir.file(file)));
    }
    if (!ok) continue;
    const bool same = std::all_of(outputs.begin(), outputs.end(),
                                  [&](const std::string& s) { return s == outputs.front(); });
    out.require(same && !outputs.front().empty(), tag + " byte-identical across runs and threads");
    identical += same;
  }
  out.detail << " " << identical << "/" << commands.size()
             << " subcommands byte-identical over 4 runs (threads 1,1,4,3)";
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    void (*run)(Outcome&);
  };
  const Criterion criteria[] = {
      {"C_rand reproduction", c_rand_reproduction},
      {"average degree identities", average_degree_identities},
      {"metric oracle suite", metric_oracles},
      {"power-law fit recovery", power_law_recovery},
      {"invasion invariants", invasion_invariants},
      {"calibration round trip", calibration_round_trip},
      {"degree-distribution shape", degree_shape},
      {"CLI determinism", cli_determinism},
  };
  int failures = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    Outcome out;
    const auto t0 = Clock::now();
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    failures += out.pass ? 0 : 1;
    std::cout << (out.pass ? "PASS" : "FAIL") << "  criterion " << index << " (" << c.name
              << ", " << fixed(seconds_since(t0), 1) << "s):" << out.detail.str() << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
