#include "dcc/sparse_solution.hpp"

#include <stdexcept>

namespace dcc {

namespace {
const std::set<NodeId> kEmpty;
}

bool SparseSolution::add_edge(NodeId a, NodeId b) {
  if (a == b) throw std::invalid_argument("self-loop in sparse solution");
  if (adj_[a].count(b)) return false;
  adj_[a].insert(b);
  adj_[b].insert(a);
  if (is_anchor(a)) anchored_nbrs_[b].insert(a);
  if (is_anchor(b)) anchored_nbrs_[a].insert(b);
  ++edge_count_;
  return true;
}

bool SparseSolution::remove_edge(NodeId a, NodeId b) {
  auto it = adj_.find(a);
  if (it == adj_.end() || !it->second.count(b)) return false;
  it->second.erase(b);
  if (it->second.empty()) adj_.erase(it);
  adj_[b].erase(a);
  if (adj_[b].empty()) adj_.erase(b);
  auto drop_anchored = [this](NodeId at, NodeId anchor) {
    auto ait = anchored_nbrs_.find(at);
    if (ait == anchored_nbrs_.end()) return;
    ait->second.erase(anchor);
    if (ait->second.empty()) anchored_nbrs_.erase(ait);
  };
  if (is_anchor(a)) {
    drop_anchored(b, a);
    ++records_[a].lost_edges;
  }
  if (is_anchor(b)) {
    drop_anchored(a, b);
    ++records_[b].lost_edges;
  }
  --edge_count_;
  return true;
}

void SparseSolution::remove_node(NodeId u) {
  const std::set<NodeId> nbrs = neighbors(u);
  for (NodeId v : nbrs) remove_edge(u, v);
  if (is_anchor(u)) remove_anchor(u);
  anchored_nbrs_.erase(u);
}

bool SparseSolution::has_edge(NodeId a, NodeId b) const {
  auto it = adj_.find(a);
  return it != adj_.end() && it->second.count(b) != 0;
}

std::uint64_t SparseSolution::degree(NodeId u) const {
  auto it = adj_.find(u);
  return it == adj_.end() ? 0 : it->second.size();
}

const std::set<NodeId>& SparseSolution::neighbors(NodeId u) const {
  auto it = adj_.find(u);
  return it == adj_.end() ? kEmpty : it->second;
}

void SparseSolution::add_anchor(NodeId u) {
  anchors_.insert(u);
  records_[u] = AnchorRecord{degree(u), 0};
  for (NodeId v : neighbors(u)) anchored_nbrs_[v].insert(u);
}

void SparseSolution::remove_anchor(NodeId u) {
  anchors_.erase(u);
  records_.erase(u);
  for (NodeId v : neighbors(u)) {
    auto it = anchored_nbrs_.find(v);
    if (it == anchored_nbrs_.end()) continue;
    it->second.erase(u);
    if (it->second.empty()) anchored_nbrs_.erase(it);
  }
}

const AnchorRecord& SparseSolution::record(NodeId u) const {
  auto it = records_.find(u);
  if (it == records_.end()) {
    throw std::invalid_argument("node " + std::to_string(u) +
                                " is not an anchor");
  }
  return it->second;
}

const std::set<NodeId>& SparseSolution::anchored_neighbors(NodeId u) const {
  auto it = anchored_nbrs_.find(u);
  return it == anchored_nbrs_.end() ? kEmpty : it->second;
}

std::string SparseSolution::check_invariants(const DynamicGraph& g) const {
  std::uint64_t seen = 0;
  for (const auto& [u, nbrs] : adj_) {
    for (NodeId v : nbrs) {
      if (!has_edge(v, u)) {
        return "asymmetric edge " + std::to_string(u) + "-" + std::to_string(v);
      }
      if (u < v) {
        ++seen;
        if (!is_anchor(u) && !is_anchor(v)) {
          return "edge " + std::to_string(u) + "-" + std::to_string(v) +
                 " has no anchor endpoint";
        }
        if (!g.is_present(u) || !g.is_present(v) || !g.has_edge(u, v)) {
          return "edge " + std::to_string(u) + "-" + std::to_string(v) +
                 " not in the input graph";
        }
      }
      const bool recorded = anchored_neighbors(u).count(v) != 0;
      if (recorded != is_anchor(v)) {
        return "anchored-neighbor index wrong at " + std::to_string(u) +
               " for " + std::to_string(v);
      }
    }
  }
  if (seen != edge_count_) return "edge count drifted";
  for (NodeId a : anchors_) {
    if (!records_.count(a)) return "anchor without record";
    if (!g.is_present(a)) {
      return "anchor " + std::to_string(a) + " not present in the graph";
    }
  }
  if (records_.size() != anchors_.size()) return "anchor record leak";
  for (const auto& [u, anbrs] : anchored_nbrs_) {
    for (NodeId a : anbrs) {
      if (!is_anchor(a) || !has_edge(u, a)) {
        return "dangling anchored-neighbor entry at " + std::to_string(u);
      }
    }
  }
  return std::string();
}

}  // namespace dcc
