#pragma once

#include <cstdint>
#include <map>

#include "dcc/extraction.hpp"
#include "dcc/graph.hpp"
#include "dcc/probes.hpp"
#include "dcc/rand.hpp"
#include "dcc/streams.hpp"

namespace dcc {

struct CostBreakdown {
  std::uint64_t cross_positive = 0;   // edges cut by the clustering
  std::uint64_t intra_negative = 0;   // absent pairs inside clusters
  std::uint64_t total() const { return cross_positive + intra_negative; }
};

// Disagreement cost of a clustering; labels must cover every present node.
CostBreakdown clustering_cost(const DynamicGraph& g, const ClusterLabels& labels);

// Offline agreement decomposition: keep the edges whose endpoints are in
// exact eps-agreement, drop kept edges between two non-heavy nodes, return
// the connected components of what is left.
ClusterLabels static_agreement(const DynamicGraph& g, double epsilon,
                               Convention convention = Convention::closed);

// Classic pivot over a uniformly random order.
ClusterLabels pivot(const DynamicGraph& g, Rng& rng);
// Same greedy with an externally fixed order; ties broken by node id.
ClusterLabels pivot_with_priorities(
    const DynamicGraph& g, const std::map<NodeId, std::uint64_t>& priority);

ClusterLabels singletons(const DynamicGraph& g);

struct OptResult {
  CostBreakdown cost;
  ClusterLabels labels;
};

// Exact optimum by partition enumeration; rejects graphs above 10 nodes.
OptResult brute_force_opt(const DynamicGraph& g);

// Incremental pivot baseline: every node draws a random priority on arrival
// and the greedy clustering over ascending priority is kept current by local
// recomputation around each event. Cluster ids are center ids. The touched
// counter records worklist pops, the operation-count analogue of update time.
class DynamicPivot {
 public:
  explicit DynamicPivot(std::uint64_t seed);

  void apply(const StreamEvent& ev);

  ClusterLabels labels() const;
  const DynamicGraph& graph() const { return graph_; }
  const std::map<NodeId, std::uint64_t>& priorities() const { return pi_; }
  std::uint64_t touched_total() const { return touched_; }

 private:
  using Key = std::pair<std::uint64_t, NodeId>;
  Key key_of(NodeId v) const { return {pi_.at(v), v}; }
  bool is_center(NodeId v) const;
  void settle(const std::vector<NodeId>& seeds);

  DynamicGraph graph_;
  std::map<NodeId, std::uint64_t> pi_;
  std::map<NodeId, NodeId> center_;
  std::uint64_t touched_ = 0;
  Rng rng_;
};

}  // namespace dcc
