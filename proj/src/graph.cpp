#include "dcc/graph.hpp"

#include <bit>
#include <algorithm>
#include <unordered_set>

namespace dcc {

namespace {
std::uint64_t log2_ceil(std::uint64_t n) {
  if (n < 2) return 1;
  return std::bit_width(n - 1);
}
}  // namespace

void DynamicGraph::charge() const {
  counters_.log_weighted += log2_ceil(std::max<std::uint64_t>(node_count(), 2));
}

const DynamicGraph::Adjacency& DynamicGraph::require(NodeId id) const {
  auto it = adj_.find(id);
  if (it == adj_.end()) {
    throw GraphError(GraphErrc::unknown_node,
                     "unknown node " + std::to_string(id));
  }
  return it->second;
}

void DynamicGraph::insert_node(NodeId id, const std::vector<NodeId>& neighbors) {
  if (adj_.count(id)) {
    throw GraphError(GraphErrc::duplicate_node,
                     "node " + std::to_string(id) + " already present");
  }
  std::unordered_set<NodeId> seen;
  for (NodeId v : neighbors) {
    if (v == id) {
      throw GraphError(GraphErrc::self_loop,
                       "self-loop on node " + std::to_string(id));
    }
    if (!adj_.count(v)) {
      throw GraphError(GraphErrc::unknown_neighbor,
                       "neighbor " + std::to_string(v) + " not present");
    }
    if (!seen.insert(v).second) {
      throw GraphError(GraphErrc::duplicate_neighbor,
                       "neighbor " + std::to_string(v) + " listed twice");
    }
  }
  Adjacency& a = adj_[id];
  for (NodeId v : neighbors) {
    a.pos.emplace(v, static_cast<std::uint32_t>(a.list.size()));
    a.list.push_back(v);
    Adjacency& b = adj_[v];
    b.pos.emplace(id, static_cast<std::uint32_t>(b.list.size()));
    b.list.push_back(id);
    ++edge_count_;
  }
  present_pos_.emplace(id, static_cast<std::uint32_t>(present_.size()));
  present_.push_back(id);
}

void DynamicGraph::remove_directed(NodeId from, NodeId to) {
  Adjacency& a = adj_[from];
  auto it = a.pos.find(to);
  const std::uint32_t i = it->second;
  const NodeId last = a.list.back();
  a.list[i] = last;
  a.pos[last] = i;
  a.list.pop_back();
  a.pos.erase(it);
}

std::vector<NodeId> DynamicGraph::delete_node(NodeId id) {
  auto it = adj_.find(id);
  if (it == adj_.end()) {
    throw GraphError(GraphErrc::unknown_node,
                     "unknown node " + std::to_string(id));
  }
  std::vector<NodeId> former = it->second.list;
  for (NodeId v : former) {
    remove_directed(v, id);
    --edge_count_;
  }
  adj_.erase(it);
  const std::uint32_t i = present_pos_[id];
  const NodeId last = present_.back();
  present_[i] = last;
  present_pos_[last] = i;
  present_.pop_back();
  present_pos_.erase(id);
  return former;
}

std::uint64_t DynamicGraph::degree(NodeId id) const {
  ++counters_.degree_queries;
  charge();
  return require(id).list.size();
}

bool DynamicGraph::has_edge(NodeId a, NodeId b) const {
  ++counters_.edge_queries;
  charge();
  const Adjacency& x = require(a);
  require(b);
  return x.pos.count(b) != 0;
}

NodeId DynamicGraph::sample_neighbor(NodeId id, Rng& rng) const {
  ++counters_.sample_queries;
  charge();
  const Adjacency& a = require(id);
  if (a.list.empty()) {
    throw GraphError(GraphErrc::zero_degree,
                     "node " + std::to_string(id) + " has no neighbors");
  }
  return a.list[uniform_below(rng, a.list.size())];
}

const std::vector<NodeId>& DynamicGraph::neighbors(NodeId id) const {
  ++counters_.neighborhood_queries;
  charge();
  return require(id).list;
}

}  // namespace dcc
