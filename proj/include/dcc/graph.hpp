#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "dcc/rand.hpp"

namespace dcc {

using NodeId = std::uint64_t;

enum class GraphErrc {
  duplicate_node,
  duplicate_neighbor,
  unknown_node,
  unknown_neighbor,
  self_loop,
  zero_degree,
};

class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  GraphErrc code() const { return code_; }

 private:
  GraphErrc code_;
};

// Query accounting. Every degree / edge / sample / neighborhood call is one
// query; log_weighted re-charges the same call at ceil(log2 |V|) to cover the
// stricter cost model for the underlying dictionary. Both are reported by the
// benchmark tool so neither interpretation is lost.
struct QueryCounters {
  std::uint64_t degree_queries = 0;
  std::uint64_t edge_queries = 0;
  std::uint64_t sample_queries = 0;
  std::uint64_t neighborhood_queries = 0;
  std::uint64_t log_weighted = 0;

  std::uint64_t total() const {
    return degree_queries + edge_queries + sample_queries +
           neighborhood_queries;
  }
};

// Adjacency-list dynamic graph over node arrivals/removals. A node arrives
// together with the edges to its already-present neighbors; deleting a node
// removes all incident edges. Neighbor lists are dense arrays with a position
// map so membership, uniform sampling and removal are O(1) expected.
// Single-writer: no internal synchronization.
class DynamicGraph {
 public:
  void insert_node(NodeId id, const std::vector<NodeId>& neighbors);
  // Returns the former neighbor list (in adjacency order).
  std::vector<NodeId> delete_node(NodeId id);

  bool is_present(NodeId id) const { return adj_.count(id) != 0; }
  std::uint64_t degree(NodeId id) const;
  bool has_edge(NodeId a, NodeId b) const;
  NodeId sample_neighbor(NodeId id, Rng& rng) const;
  const std::vector<NodeId>& neighbors(NodeId id) const;

  std::uint64_t node_count() const { return present_.size(); }
  std::uint64_t edge_count() const { return edge_count_; }
  // Present nodes in arrival order perturbed by swap-removal; deterministic
  // for a fixed event sequence. Not a counted query.
  const std::vector<NodeId>& present_nodes() const { return present_; }

  const QueryCounters& counters() const { return counters_; }
  void reset_counters() { counters_ = QueryCounters{}; }

 private:
  struct Adjacency {
    std::vector<NodeId> list;
    std::unordered_map<NodeId, std::uint32_t> pos;
  };

  const Adjacency& require(NodeId id) const;
  void remove_directed(NodeId from, NodeId to);
  void charge() const;

  std::unordered_map<NodeId, Adjacency> adj_;
  std::vector<NodeId> present_;
  std::unordered_map<NodeId, std::uint32_t> present_pos_;
  std::uint64_t edge_count_ = 0;
  mutable QueryCounters counters_;
};

}  // namespace dcc
