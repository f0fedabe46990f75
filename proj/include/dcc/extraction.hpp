#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "dcc/sparse_solution.hpp"

namespace dcc {

using ClusterLabels = std::map<NodeId, std::uint64_t>;

struct ExtractionReport {
  ClusterLabels labels;
  // Number of label writes performed; bounded by 3 * |present| because each
  // node's label changes at most twice during flooding plus one final fill.
  std::uint64_t label_writes = 0;
  // Nodes that no anchor neighborhood covers; they are emitted as singletons.
  // Nonzero means the coverage precondition did not hold.
  std::uint64_t uncovered = 0;
};

// Labels connected components of the sparse solution by flooding anchor
// neighborhoods: each anchor floods unlabeled neighbors with a fresh id and
// merges into the first already-labeled neighbor it meets, then leftover
// nodes copy the label of an adjacent anchor. Runs in O(|present|) given the
// anchor coverage preconditions. Anchors are processed in ascending id order
// so labels are deterministic.
ExtractionReport compute_components(const SparseSolution& sol,
                                    const std::vector<NodeId>& present);

// Breadth-first reference implementation over the same sparse edges.
ClusterLabels components_bfs(const SparseSolution& sol,
                             const std::vector<NodeId>& present);

// True when the two labelings induce the same partition (labels may differ).
bool same_partition(const ClusterLabels& a, const ClusterLabels& b);

}  // namespace dcc
