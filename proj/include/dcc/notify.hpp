#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "dcc/graph.hpp"
#include "dcc/probes.hpp"
#include "dcc/rand.hpp"

namespace dcc {

struct NotifyConfig {
  ProbeMode mode = ProbeMode::practical;
  double epsilon = 0.2;
  std::uint64_t practical_samples = 2;
  // theory-mode sample size is min(ceil(scale * coeff * ln n / eps), degree).
  // The nominal coefficient is far beyond anything runnable, so tests pin
  // `theory_scale` to a documented small value instead of redefining the rule.
  double theory_coeff = 1e10;
  double theory_scale = 1.0;
  // n used in the ln n above; 0 means "current node count".
  std::uint64_t ambient_n = 0;

  std::uint64_t draws_for(std::uint64_t degree, std::uint64_t n_now) const;
};

struct Notification {
  NodeId target;
  int type;  // 0, 1 or 2
};

struct NotificationBatch {
  std::vector<Notification> sent;   // send order, duplicates kept
  std::vector<NodeId> interesting;  // arrival + type-0/1 recipients, ascending
  std::uint64_t type_counts[3] = {0, 0, 0};
  std::uint64_t resamples = 0;
};

// Per-node leveled samples with reverse indices. A node keeps a sample of its
// neighborhood at level floor(log2 degree); every sampled neighbor records the
// sampler as a watcher at that level, so a deletion can reach exactly the
// nodes whose samples mention it. Three rounds of typed notifications fan the
// news outward; type-0/1 recipients are the "interesting" nodes the caller
// must reprocess.
class Notifier {
 public:
  explicit Notifier(NotifyConfig cfg) : cfg_(cfg) {}

  // pre: the event is already applied to g (the node is present / absent).
  NotificationBatch on_insert(const DynamicGraph& g, NodeId u, Rng& rng);
  NotificationBatch on_delete(const DynamicGraph& g, NodeId u, Rng& rng);

  // Drops the old sample (deregistering watchers) and draws a fresh one at
  // the node's current level. Exposed for tests.
  void resample(const DynamicGraph& g, NodeId u, Rng& rng);

  int sample_level(NodeId u) const;
  const std::vector<NodeId>& sample_of(NodeId u) const;
  const std::map<int, std::set<NodeId>>& watchers_of(NodeId u) const;
  std::uint64_t resample_count() const { return resamples_; }
  const NotifyConfig& config() const { return cfg_; }

  // Empty string when every sample entry points at a present node and sample
  // and watcher sets mirror each other exactly; otherwise a description of
  // the first violation found.
  std::string check_consistency(const DynamicGraph& g) const;

 private:
  struct NodeState {
    int level = -1;
    std::vector<NodeId> sample;  // sorted, deduplicated
    std::map<int, std::set<NodeId>> watchers;
  };

  void run_rounds(const DynamicGraph& g, const std::set<NodeId>& type0,
                  Rng& rng, NotificationBatch& batch);

  NotifyConfig cfg_;
  std::map<NodeId, NodeState> states_;
  std::uint64_t resamples_ = 0;
};

}  // namespace dcc
