#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "dcc/graph.hpp"
#include "dcc/rand.hpp"

namespace dcc {

class StreamError : public std::runtime_error {
 public:
  explicit StreamError(const std::string& what) : std::runtime_error(what) {}
};

struct StreamEvent {
  enum class Kind { insert, remove };
  Kind kind = Kind::insert;
  NodeId node = 0;
  // For insertions: neighbors among already-present nodes, ascending.
  std::vector<NodeId> neighbors;

  bool operator==(const StreamEvent&) const = default;
};

// Static source graph with nodes 0..n-1 and deduplicated undirected edges.
struct SourceGraph {
  std::uint64_t n = 0;
  std::vector<std::pair<NodeId, NodeId>> edges;  // first < second, sorted
};

// Whitespace-separated "u v" pairs, '#' starts a comment line. Edges are
// symmetrized and deduplicated, self-loops dropped (their endpoint still
// counts as a node), ids compacted to 0..n-1 by first appearance.
SourceGraph load_edge_list(std::istream& in);
SourceGraph load_edge_list_file(const std::string& path);

// One point per line, whitespace-separated coordinates; every line must have
// the same dimension.
std::vector<std::vector<double>> load_points(std::istream& in);
std::vector<std::vector<double>> load_points_file(const std::string& path);

// Edge between two points iff their Euclidean distance is strictly below tau.
SourceGraph threshold_graph(const std::vector<std::vector<double>>& points,
                            double tau);

// k blocks of s nodes; intra-block edge probability p_in, inter-block p_out.
SourceGraph planted_partition(std::uint64_t k, std::uint64_t s, double p_in,
                              double p_out, std::uint64_t seed);

enum class DeletionGaps {
  single_coin,  // one Bernoulli(p) trial between consecutive arrivals
  geometric,    // keep deleting while the coin comes up heads
};

struct StreamConfig {
  double p_delete = 0.2;
  std::uint64_t seed = 1;
  DeletionGaps gaps = DeletionGaps::single_coin;
};

// Random node-arrival permutation with random deletions in between: before
// each arrival after the first, the deletion coin may remove uniformly random
// present nodes; with p_delete > 0 the stream ends by deleting everything in
// random order. p_delete == 0 yields a pure insertion stream. Deterministic
// for a fixed (source, config).
std::vector<StreamEvent> gen_stream(const SourceGraph& source,
                                    const StreamConfig& cfg);

// Text form: "I <id> <nbr>..." / "D <id>", one event per line.
void write_stream(std::ostream& out, const std::vector<StreamEvent>& events);
std::vector<StreamEvent> read_stream(std::istream& in);

}  // namespace dcc
