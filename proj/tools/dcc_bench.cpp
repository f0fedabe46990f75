#include <algorithm>
#include <clocale>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dcc/baselines.hpp"
#include "dcc/dcc.hpp"
#include "dcc/extraction.hpp"
#include "dcc/graph.hpp"
#include "dcc/probes.hpp"
#include "dcc/rand.hpp"
#include "dcc/streams.hpp"

namespace {

using dcc::ClusterLabels;
using dcc::DccConfig;
using dcc::DynamicAgreement;
using dcc::DynamicGraph;
using dcc::NodeId;
using dcc::StreamEvent;

struct RunFlags {
  std::string source = "planted";
  std::string input;
  double tau = 1.0;
  std::string planted = "4,25,0.9,0.05";
  double epsilon = 0.2;
  std::string mode = "practical";
  double theory_scale = 1e-8;
  double p_delete = 0.2;
  std::string gaps = "single";
  std::uint64_t seed = 1;
  std::uint64_t checkpoint_every = 10;
  std::string algs = "da,pivot-dyn,singletons,agree-static";
  std::string out;
  bool exact_probes = false;
};

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  return parts;
}

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", x);
  return buf;
}

dcc::SourceGraph make_source(const RunFlags& f) {
  if (f.source == "edge-list") {
    return dcc::load_edge_list_file(f.input);
  }
  if (f.source == "points") {
    return dcc::threshold_graph(dcc::load_points_file(f.input), f.tau);
  }
  if (f.source == "planted") {
    unsigned long long k = 0;
    unsigned long long s = 0;
    double p_in = 0;
    double p_out = 0;
    if (std::sscanf(f.planted.c_str(), "%llu,%llu,%lf,%lf", &k, &s, &p_in,
                    &p_out) != 4 ||
        k == 0 || s == 0) {
      throw dcc::StreamError("bad --planted spec: " + f.planted);
    }
    return dcc::planted_partition(k, s, p_in, p_out, f.seed);
  }
  throw dcc::StreamError("unknown --source kind: " + f.source);
}

// One row per (checkpoint, algorithm). Counter columns are cumulative and
// monotone within a run; n, m, anchors, and sparse_edges are present-state
// snapshots.
const char* kCsvHeader =
    "t,alg,n,m,cross_positive,intra_negative,total_cost,"
    "relative_to_singletons,agreement_probes,heavy_probes,notify_t0,"
    "notify_t1,notify_t2,anchors,sparse_edges,touched,graph_queries,"
    "log_weighted_queries\n";

struct Checkpointer {
  std::string* out;
  std::uint64_t checkpoint_every = 10;
  std::uint64_t total_events = 0;

  bool due(std::uint64_t t) const {
    return t % checkpoint_every == 0 || t == total_events;
  }

  void row(std::uint64_t t, const std::string& alg, const DynamicGraph& g,
           const ClusterLabels& labels, std::uint64_t agree_probes,
           std::uint64_t heavy_probes, const std::uint64_t notify[3],
           std::uint64_t anchors, std::uint64_t sparse_edges,
           std::uint64_t touched) {
    const auto cost = dcc::clustering_cost(g, labels);
    const std::uint64_t m = g.edge_count();
    const double rel =
        m == 0 ? (cost.total() == 0 ? 1.0 : 0.0)
               : static_cast<double>(cost.total()) / static_cast<double>(m);
    char buf[512];
    std::snprintf(
        buf, sizeof(buf),
        "%llu,%s,%llu,%llu,%llu,%llu,%llu,%s,%llu,%llu,%llu,%llu,%llu,%llu,"
        "%llu,%llu,%llu,%llu\n",
        static_cast<unsigned long long>(t), alg.c_str(),
        static_cast<unsigned long long>(g.node_count()),
        static_cast<unsigned long long>(m),
        static_cast<unsigned long long>(cost.cross_positive),
        static_cast<unsigned long long>(cost.intra_negative),
        static_cast<unsigned long long>(cost.total()),
        fmt_double(rel).c_str(),
        static_cast<unsigned long long>(agree_probes),
        static_cast<unsigned long long>(heavy_probes),
        static_cast<unsigned long long>(notify[0]),
        static_cast<unsigned long long>(notify[1]),
        static_cast<unsigned long long>(notify[2]),
        static_cast<unsigned long long>(anchors),
        static_cast<unsigned long long>(sparse_edges),
        static_cast<unsigned long long>(touched),
        static_cast<unsigned long long>(g.counters().total()),
        static_cast<unsigned long long>(g.counters().log_weighted));
    *out += buf;
  }
};

void replay_event(DynamicGraph& g, const StreamEvent& ev) {
  if (ev.kind == StreamEvent::Kind::insert) {
    g.insert_node(ev.node, ev.neighbors);
  } else {
    g.delete_node(ev.node);
  }
}

void run_da(const std::vector<StreamEvent>& events, const RunFlags& f,
            const dcc::SourceGraph& src, Checkpointer& cp) {
  DccConfig cfg = f.mode == "theory"
                      ? DccConfig::theory(std::max<std::uint64_t>(src.n, 2),
                                          f.epsilon, f.theory_scale, f.seed)
                      : DccConfig::practical(f.epsilon, f.seed);
  cfg.exact_probes = f.exact_probes;
  DynamicAgreement da(cfg);
  std::uint64_t notify_total[3] = {0, 0, 0};
  std::uint64_t t = 0;
  for (const auto& ev : events) {
    const auto rep = da.apply(ev);
    for (int i = 0; i < 3; ++i) notify_total[i] += rep.notifications[i];
    ++t;
    if (cp.due(t)) {
      cp.row(t, "da", da.graph(), da.extract().labels,
             da.probe_counters().agreement_probes,
             da.probe_counters().heavy_probes, notify_total,
             da.solution().anchors().size(), da.solution().edge_count(), 0);
    }
  }
}

void run_pivot_dyn(const std::vector<StreamEvent>& events, const RunFlags& f,
                   Checkpointer& cp) {
  dcc::DynamicPivot dp(f.seed);
  const std::uint64_t zero3[3] = {0, 0, 0};
  std::uint64_t t = 0;
  for (const auto& ev : events) {
    dp.apply(ev);
    ++t;
    if (cp.due(t)) {
      cp.row(t, "pivot-dyn", dp.graph(), dp.labels(), 0, 0, zero3, 0, 0,
             dp.touched_total());
    }
  }
}

void run_singletons(const std::vector<StreamEvent>& events, Checkpointer& cp) {
  DynamicGraph g;
  const std::uint64_t zero3[3] = {0, 0, 0};
  std::uint64_t t = 0;
  for (const auto& ev : events) {
    replay_event(g, ev);
    ++t;
    if (cp.due(t)) cp.row(t, "singletons", g, dcc::singletons(g), 0, 0, zero3, 0, 0, 0);
  }
}

void run_agree_static(const std::vector<StreamEvent>& events,
                      const RunFlags& f, Checkpointer& cp) {
  DynamicGraph g;
  const std::uint64_t zero3[3] = {0, 0, 0};
  std::uint64_t t = 0;
  for (const auto& ev : events) {
    replay_event(g, ev);
    ++t;
    if (cp.due(t)) {
      cp.row(t, "agree-static", g, dcc::static_agreement(g, f.epsilon), 0, 0,
             zero3, 0, 0, 0);
    }
  }
}

int cmd_run(const RunFlags& f) {
  const dcc::SourceGraph src = make_source(f);
  dcc::StreamConfig scfg;
  scfg.p_delete = f.p_delete;
  scfg.seed = f.seed;
  scfg.gaps = f.gaps == "geometric" ? dcc::DeletionGaps::geometric
                                    : dcc::DeletionGaps::single_coin;
  const auto events = dcc::gen_stream(src, scfg);

  std::string csv = kCsvHeader;
  Checkpointer cp{&csv, f.checkpoint_every, events.size()};
  for (const std::string& alg : split_csv(f.algs)) {
    if (alg == "da") {
      run_da(events, f, src, cp);
    } else if (alg == "pivot-dyn") {
      run_pivot_dyn(events, f, cp);
    } else if (alg == "singletons") {
      run_singletons(events, cp);
    } else if (alg == "agree-static") {
      run_agree_static(events, f, cp);
    } else {
      std::cerr << "unknown algorithm: " << alg << "\n";
      return 2;
    }
  }
  if (f.out.empty()) {
    std::cout << csv;
  } else {
    std::ofstream file(f.out, std::ios::binary);
    if (!file) {
      std::cerr << "cannot open output: " << f.out << "\n";
      return 2;
    }
    file << csv;
  }
  return 0;
}

struct DensityFlags {
  std::uint64_t points = 2000;
  std::uint64_t dim = 8;
  std::string densities = "40,120,250";
  double epsilon = 0.2;
  double p_delete = 0.2;
  std::uint64_t seed = 1;
  std::string out;
};

std::vector<std::vector<double>> gaussian_points(std::uint64_t n,
                                                 std::uint64_t dim,
                                                 dcc::Rng& rng) {
  std::vector<std::vector<double>> pts(n, std::vector<double>(dim));
  for (auto& p : pts) {
    for (auto& c : p) {
      const double u1 = 1.0 - dcc::uniform01(rng);
      const double u2 = dcc::uniform01(rng);
      c = std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }
  }
  return pts;
}

double tau_for_degree(const std::vector<std::vector<double>>& pts,
                      double target_degree) {
  std::vector<double> dists;
  dists.reserve(pts.size() * (pts.size() - 1) / 2);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      double s = 0;
      for (std::size_t d = 0; d < pts[i].size(); ++d) {
        const double diff = pts[i][d] - pts[j][d];
        s += diff * diff;
      }
      dists.push_back(std::sqrt(s));
    }
  }
  const std::size_t want =
      std::min(dists.size() - 1,
               static_cast<std::size_t>(target_degree * pts.size() / 2));
  std::nth_element(dists.begin(), dists.begin() + want, dists.end());
  const double at = dists[want];
  std::nth_element(dists.begin(), dists.begin() + want + 1, dists.end());
  return (at + dists[want + 1]) / 2.0;
}

int cmd_density_bench(const DensityFlags& f) {
  dcc::Rng rng(dcc::mix_seed(f.seed, 0x3c6ef372fe94f82bull));
  const auto pts = gaussian_points(f.points, f.dim, rng);

  std::string csv =
      "target_degree,actual_degree,tau,alg,events,ops_per_update\n";
  for (const std::string& spec : split_csv(f.densities)) {
    const double target = std::stod(spec);
    const double tau = tau_for_degree(pts, target);
    const dcc::SourceGraph src = dcc::threshold_graph(pts, tau);
    const double actual =
        2.0 * static_cast<double>(src.edges.size()) / static_cast<double>(src.n);
    dcc::StreamConfig scfg;
    scfg.p_delete = f.p_delete;
    scfg.seed = f.seed;
    const auto events = dcc::gen_stream(src, scfg);

    DynamicAgreement da(DccConfig::practical(f.epsilon, f.seed));
    for (const auto& ev : events) da.apply(ev);
    const double da_ops =
        static_cast<double>(da.probe_counters().agreement_probes +
                            da.probe_counters().heavy_probes) /
        static_cast<double>(events.size());

    dcc::DynamicPivot dp(f.seed);
    for (const auto& ev : events) dp.apply(ev);
    const double dp_ops = static_cast<double>(dp.touched_total()) /
                          static_cast<double>(events.size());

    for (const auto& [alg, ops] : {std::pair<std::string, double>{"da", da_ops},
                                   {"pivot-dyn", dp_ops}}) {
      csv += fmt_double(target) + "," + fmt_double(actual) + "," +
             fmt_double(tau) + "," + alg + "," + std::to_string(events.size()) +
             "," + fmt_double(ops) + "\n";
    }
  }
  if (f.out.empty()) {
    std::cout << csv;
  } else {
    std::ofstream file(f.out, std::ios::binary);
    if (!file) {
      std::cerr << "cannot open output: " << f.out << "\n";
      return 2;
    }
    file << csv;
  }
  return 0;
}

struct SuiteResult {
  std::string name;
  std::uint64_t trials = 0;
  double rate = 0;
  bool pass = false;
};

SuiteResult suite_probe_sandwich() {
  // Reduced-sample theory configuration; the acceptance harness runs the
  // full-constant version.
  dcc::ProbeConfig cfg;
  cfg.epsilon = 0.2;
  cfg.mode = dcc::ProbeMode::theory;
  cfg.theory_agree_samples = 400;
  cfg.theory_heavy_samples = 300;

  DynamicGraph yes;
  for (NodeId v = 0; v < 254; ++v) {
    std::vector<NodeId> nbrs;
    for (NodeId w = 0; w < v; ++w) nbrs.push_back(w);
    yes.insert_node(v, nbrs);
  }
  yes.insert_node(254, {0});
  yes.insert_node(255, {1});

  DynamicGraph no;
  no.insert_node(0, {});
  for (NodeId v = 1; v < 100; ++v) {
    std::vector<NodeId> nbrs;
    for (NodeId w = 0; w < v; ++w) nbrs.push_back(w);
    no.insert_node(v, nbrs);
  }
  no.insert_node(100, {0});
  for (NodeId v = 101; v < 200; ++v) {
    std::vector<NodeId> nbrs;
    for (NodeId w = 100; w < v; ++w) nbrs.push_back(w);
    no.insert_node(v, nbrs);
  }
  for (NodeId v = 200; v < 256; ++v) no.insert_node(v, {});

  std::uint64_t good = 0;
  const std::uint64_t trials = 200;
  dcc::Rng rng(dcc::mix_seed(11, 0xa54ff53a5f1d36f1ull));
  for (std::uint64_t t = 0; t < trials / 2; ++t) {
    good += dcc::probabilistic_agreement(yes, 0, 1, cfg, rng, nullptr).answer;
    good += !dcc::probabilistic_agreement(no, 0, 100, cfg, rng, nullptr).answer;
  }
  const double rate = static_cast<double>(good) / trials;
  return {"probe-sandwich", trials, rate, rate >= 0.99};
}

SuiteResult suite_extraction(bool inject_failure) {
  dcc::Rng rng(0x51ab);
  std::uint64_t good = 0;
  const std::uint64_t trials = 200;
  for (std::uint64_t t = 0; t < trials; ++t) {
    dcc::SparseSolution sol;
    std::vector<NodeId> nodes;
    NodeId next = 0;
    const int groups = 1 + static_cast<int>(dcc::uniform_below(rng, 5));
    for (int gi = 0; gi < groups; ++gi) {
      const int anchors = 1 + static_cast<int>(dcc::uniform_below(rng, 3));
      std::vector<NodeId> phi;
      for (int a = 0; a < anchors; ++a) {
        phi.push_back(next);
        nodes.push_back(next++);
      }
      for (NodeId a : phi) sol.add_anchor(a);
      for (std::size_t i = 0; i < phi.size(); ++i) {
        for (std::size_t j = i + 1; j < phi.size(); ++j) {
          if (dcc::uniform_below(rng, 2) == 0) {
            sol.add_edge(phi[i], phi[j]);
          } else {
            const NodeId mid = next++;
            nodes.push_back(mid);
            sol.add_edge(phi[i], mid);
            sol.add_edge(phi[j], mid);
          }
        }
      }
      const int pendants = static_cast<int>(dcc::uniform_below(rng, 6));
      for (int p = 0; p < pendants; ++p) {
        const NodeId v = next++;
        nodes.push_back(v);
        sol.add_edge(v, phi[0]);
      }
    }
    const auto rep = dcc::compute_components(sol, nodes);
    const auto ref = dcc::components_bfs(sol, nodes);
    bool ok = dcc::same_partition(rep.labels, ref) &&
              rep.label_writes <= 3 * nodes.size();
    if (inject_failure) ok = !ok;
    good += ok;
  }
  const double rate = static_cast<double>(good) / trials;
  return {"extraction-vs-bfs", trials, rate, rate == 1.0};
}

SuiteResult suite_dynamic_pivot() {
  std::uint64_t checks = 0;
  std::uint64_t good = 0;
  for (std::uint64_t trial = 0; trial < 30; ++trial) {
    const auto src =
        dcc::planted_partition(1, 4 + trial % 20, 0.4, 0.0, 360 + trial);
    dcc::StreamConfig scfg;
    scfg.p_delete = 0.3;
    scfg.seed = 470 + trial;
    dcc::DynamicPivot dp(580 + trial);
    for (const auto& ev : dcc::gen_stream(src, scfg)) {
      dp.apply(ev);
      ++checks;
      good += dp.labels() ==
              dcc::pivot_with_priorities(dp.graph(), dp.priorities());
    }
  }
  const double rate = static_cast<double>(good) / static_cast<double>(checks);
  return {"dynamic-pivot-vs-offline", checks, rate, rate == 1.0};
}

bool is_clique_union(const DynamicGraph& g) {
  for (NodeId u : g.present_nodes()) {
    const std::vector<NodeId> nbrs = g.neighbors(u);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        if (!g.has_edge(nbrs[i], nbrs[j])) return false;
      }
    }
  }
  return true;
}

SuiteResult suite_da_vs_opt() {
  std::uint64_t good = 0;
  const std::uint64_t trials = 50;
  const double densities[3] = {0.3, 0.6, 0.9};
  for (std::uint64_t t = 0; t < trials; ++t) {
    const std::uint64_t n = 4 + t % 6;
    const auto src = dcc::planted_partition(1, n, densities[t % 3], 0.0, t);
    dcc::StreamConfig scfg;
    scfg.p_delete = 0.0;
    scfg.seed = 690 + t;
    // Exact checks isolate the pipeline wiring from sampling noise: with
    // two-sample probes a handful of missing edges in a near-clique zeroes
    // the miss tolerance and empties the sparse solution.
    DccConfig cfg = DccConfig::practical(0.2, 800 + t);
    cfg.exact_probes = true;
    DynamicAgreement da(cfg);
    for (const auto& ev : dcc::gen_stream(src, scfg)) da.apply(ev);
    const auto cost =
        dcc::clustering_cost(da.graph(), da.extract().labels).total();
    const auto opt = dcc::brute_force_opt(da.graph()).cost.total();
    if (opt > 0) {
      good += cost <= 5 * opt;
    } else {
      // A zero optimum means the graph is a disjoint union of cliques, the
      // one case where a zero-cost answer is demanded.
      good += is_clique_union(da.graph()) ? cost == 0 : 1;
    }
  }
  const double rate = static_cast<double>(good) / trials;
  return {"da-vs-opt", trials, rate, rate >= 0.9};
}

int cmd_oracle_check(bool inject_failure) {
  const SuiteResult suites[4] = {
      suite_probe_sandwich(),
      suite_extraction(inject_failure),
      suite_dynamic_pivot(),
      suite_da_vs_opt(),
  };
  bool all = true;
  for (const auto& s : suites) {
    std::printf("suite=%s trials=%llu rate=%s status=%s\n", s.name.c_str(),
                static_cast<unsigned long long>(s.trials),
                fmt_double(s.rate).c_str(), s.pass ? "PASS" : "FAIL");
    all = all && s.pass;
  }
  std::printf("overall %s\n", all ? "PASS" : "FAIL");
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  std::setlocale(LC_ALL, "C");
  CLI::App app{"dynamic agreement clustering benchmark driver"};
  app.require_subcommand(1);

  RunFlags rf;
  CLI::App* run = app.add_subcommand("run", "stream a source and emit CSV");
  run->add_option("--source", rf.source, "edge-list, points, or planted")
      ->check(CLI::IsMember({"edge-list", "points", "planted"}));
  run->add_option("--input", rf.input, "path for edge-list/points sources");
  run->add_option("--tau", rf.tau, "distance threshold for points sources");
  run->add_option("--planted", rf.planted, "k,s,p_in,p_out");
  run->add_option("--epsilon", rf.epsilon, "agreement parameter");
  run->add_option("--mode", rf.mode, "probe mode")
      ->check(CLI::IsMember({"theory", "practical"}));
  run->add_option("--theory-scale", rf.theory_scale,
                  "sample-count scale in theory mode");
  run->add_option("--p-delete", rf.p_delete, "deletion coin probability");
  run->add_option("--gaps", rf.gaps, "single or geometric deletion gaps")
      ->check(CLI::IsMember({"single", "geometric"}));
  run->add_option("--seed", rf.seed, "master seed");
  run->add_option("--checkpoint-every", rf.checkpoint_every, "row cadence")
      ->check(CLI::PositiveNumber);
  run->add_option("--algs", rf.algs, "comma list of algorithms");
  run->add_option("--out", rf.out, "output path (default stdout)");
  run->add_flag("--exact-probes", rf.exact_probes,
                "exact agreement/heaviness checks inside the pipeline");

  DensityFlags df;
  CLI::App* density =
      app.add_subcommand("density-bench", "sweep point-cloud densities");
  density->add_option("--points", df.points, "number of Gaussian points");
  density->add_option("--dim", df.dim, "point dimension");
  density->add_option("--densities", df.densities, "target average degrees");
  density->add_option("--epsilon", df.epsilon, "agreement parameter");
  density->add_option("--p-delete", df.p_delete, "deletion coin probability");
  density->add_option("--seed", df.seed, "master seed");
  density->add_option("--out", df.out, "output path (default stdout)");

  bool inject_failure = false;
  CLI::App* oracle =
      app.add_subcommand("oracle-check", "run the differential suites");
  oracle->add_flag("--inject-failure", inject_failure)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) return cmd_run(rf);
    if (density->parsed()) return cmd_density_bench(df);
    return cmd_oracle_check(inject_failure);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
