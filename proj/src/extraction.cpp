#include "dcc/extraction.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace dcc {

ExtractionReport compute_components(const SparseSolution& sol,
                                    const std::vector<NodeId>& present) {
  ExtractionReport report;
  ClusterLabels& f = report.labels;
  constexpr std::uint64_t kUnset = ~std::uint64_t{0};
  for (NodeId v : present) f[v] = kUnset;
  auto assign = [&](NodeId v, std::uint64_t id) {
    f[v] = id;
    ++report.label_writes;
  };

  std::uint64_t next_id = 0;
  std::set<NodeId> pending(sol.anchors().begin(), sol.anchors().end());
  while (!pending.empty()) {
    const NodeId u = *pending.begin();
    std::vector<NodeId> absorbed;
    assign(u, next_id);
    absorbed.push_back(u);
    for (NodeId v : sol.neighbors(u)) {
      if (f[v] == kUnset) {
        assign(v, next_id);
        absorbed.push_back(v);
      } else {
        // Ran into an earlier component: relabel everything absorbed so far
        // and stop expanding this anchor.
        const std::uint64_t merged = f[v];
        for (NodeId w : absorbed) assign(w, merged);
        break;
      }
    }
    ++next_id;
    for (NodeId w : absorbed) pending.erase(w);
  }

  for (auto& [v, label] : f) {
    if (label != kUnset) continue;
    const std::set<NodeId>& anchors_nearby = sol.anchored_neighbors(v);
    if (!anchors_nearby.empty()) {
      assign(v, f[*anchors_nearby.begin()]);
    } else {
      ++report.uncovered;
      assign(v, next_id++);
    }
  }
  return report;
}

ClusterLabels components_bfs(const SparseSolution& sol,
                             const std::vector<NodeId>& present) {
  std::vector<NodeId> order = present;
  std::sort(order.begin(), order.end());
  ClusterLabels labels;
  std::uint64_t next_id = 0;
  for (NodeId start : order) {
    if (labels.count(start)) continue;
    const std::uint64_t id = next_id++;
    std::deque<NodeId> queue{start};
    labels[start] = id;
    while (!queue.empty()) {
      const NodeId u = queue.front();
      queue.pop_front();
      for (NodeId v : sol.neighbors(u)) {
        if (labels.count(v)) continue;
        labels[v] = id;
        queue.push_back(v);
      }
    }
  }
  return labels;
}

bool same_partition(const ClusterLabels& a, const ClusterLabels& b) {
  if (a.size() != b.size()) return false;
  std::map<std::uint64_t, std::uint64_t> a_to_b;
  std::map<std::uint64_t, std::uint64_t> b_to_a;
  for (const auto& [node, la] : a) {
    auto it = b.find(node);
    if (it == b.end()) return false;
    const std::uint64_t lb = it->second;
    auto [fwd, fresh_f] = a_to_b.emplace(la, lb);
    if (!fresh_f && fwd->second != lb) return false;
    auto [bwd, fresh_b] = b_to_a.emplace(lb, la);
    if (!fresh_b && bwd->second != la) return false;
  }
  return true;
}

}  // namespace dcc
