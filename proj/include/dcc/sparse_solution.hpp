#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>

#include "dcc/graph.hpp"

namespace dcc {

struct AnchorRecord {
  std::uint64_t entry_degree = 0;  // sparse-graph degree when anchored
  std::uint64_t lost_edges = 0;    // incident removals since anchoring
};

// Sparse clustering witness: an edge subset whose connected components are
// the output clustering, plus the anchor set that owns it. Every stored edge
// is expected to keep at least one anchor endpoint and to exist in the input
// graph; both are event-boundary invariants checked by check_invariants, not
// enforced mid-pipeline. Ordered containers throughout: iteration order is
// part of the deterministic behavior.
class SparseSolution {
 public:
  // Returns false when the edge was already present. Rejects a == b.
  bool add_edge(NodeId a, NodeId b);
  // Returns false when absent. Charges one lost edge to each endpoint that is
  // currently an anchor.
  bool remove_edge(NodeId a, NodeId b);
  void remove_node(NodeId u);

  bool has_edge(NodeId a, NodeId b) const;
  std::uint64_t degree(NodeId u) const;
  const std::set<NodeId>& neighbors(NodeId u) const;
  std::uint64_t edge_count() const { return edge_count_; }

  // (Re)anchoring resets the record: entry degree is the node's current
  // sparse degree, losses restart at zero.
  void add_anchor(NodeId u);
  void remove_anchor(NodeId u);
  bool is_anchor(NodeId u) const { return records_.count(u) != 0; }
  const std::set<NodeId>& anchors() const { return anchors_; }
  const AnchorRecord& record(NodeId u) const;

  // Anchors adjacent to u in the sparse graph.
  const std::set<NodeId>& anchored_neighbors(NodeId u) const;

  // Empty string when adjacency symmetry, the anchor-endpoint rule, the
  // anchored-neighbor index and edge containment in g all hold.
  std::string check_invariants(const DynamicGraph& g) const;

 private:
  std::map<NodeId, std::set<NodeId>> adj_;
  std::map<NodeId, std::set<NodeId>> anchored_nbrs_;
  std::set<NodeId> anchors_;
  std::map<NodeId, AnchorRecord> records_;
  std::uint64_t edge_count_ = 0;
};

}  // namespace dcc
