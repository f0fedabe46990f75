#pragma once

#include <cstdint>

#include "dcc/extraction.hpp"
#include "dcc/graph.hpp"
#include "dcc/notify.hpp"
#include "dcc/probes.hpp"
#include "dcc/rand.hpp"
#include "dcc/sparse_solution.hpp"
#include "dcc/streams.hpp"

namespace dcc {

struct DccConfig {
  ProbeConfig probe;
  NotifyConfig notify;
  // Anchoring coin: practical mode draws Bernoulli(min(numerator/degree, 1)),
  // theory mode replaces the numerator by scale * coeff * ln n / eps.
  double anchor_numerator = 20.0;
  double anchor_theory_coeff = 1e7;
  double connect_theory_coeff = 1e5;
  double theory_scale = 1.0;
  std::uint64_t connect_samples = 2;
  std::uint64_t seed = 1;
  // Differential-testing switch: answer every agreement / heaviness check
  // with the exact full-scan predicates instead of the sampling probes.
  bool exact_probes = false;

  static DccConfig practical(double epsilon = 0.2, std::uint64_t seed = 1);
  static DccConfig theory(std::uint64_t n, double epsilon, double scale,
                          std::uint64_t seed = 1);

  double anchor_probability(std::uint64_t degree, std::uint64_t n_now) const;
  std::uint64_t connect_draws(std::uint64_t n_now) const;
};

struct StepReport {
  std::uint64_t event_index = 0;
  std::uint64_t interesting = 0;
  std::uint64_t notifications[3] = {0, 0, 0};
  std::uint64_t resamples = 0;
  std::uint64_t agreement_probes = 0;
  std::uint64_t heavy_probes = 0;
  std::uint64_t edges_added = 0;
  std::uint64_t edges_removed = 0;
  std::uint64_t anchors_joined = 0;
  std::uint64_t anchors_dropped = 0;
  std::uint64_t anchors_evicted = 0;
};

// Streaming maintenance of the sparse clustering witness. Each event updates
// the graph, fans out notifications, and re-runs the clean / anchor / connect
// triple on every interesting node in ascending id order. Membership changes
// staged by anchoring take effect at the end of that node's triple, so later
// nodes in the same event observe them.
class DynamicAgreement {
 public:
  explicit DynamicAgreement(DccConfig cfg);

  StepReport apply(const StreamEvent& ev);

  const DynamicGraph& graph() const { return graph_; }
  const SparseSolution& solution() const { return solution_; }
  const Notifier& notifier() const { return notifier_; }
  const ProbeCounters& probe_counters() const { return probes_; }
  const DccConfig& config() const { return cfg_; }

  ExtractionReport extract() const;

 private:
  enum class PhiAction { none, join, drop };

  void clean(NodeId u, StepReport& rep);
  PhiAction anchor(NodeId u, StepReport& rep);
  void connect(NodeId u, StepReport& rep);
  void evict(NodeId w, StepReport& rep);
  bool agree_check(NodeId a, NodeId b);
  bool heavy_check(NodeId a);

  DccConfig cfg_;
  DynamicGraph graph_;
  Notifier notifier_;
  SparseSolution solution_;
  ProbeCounters probes_;
  Rng rng_;
  std::uint64_t events_seen_ = 0;
};

}  // namespace dcc
