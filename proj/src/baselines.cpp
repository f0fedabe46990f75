#include "dcc/baselines.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace dcc {

CostBreakdown clustering_cost(const DynamicGraph& g,
                              const ClusterLabels& labels) {
  CostBreakdown cost;
  std::map<std::uint64_t, std::uint64_t> sizes;
  for (NodeId u : g.present_nodes()) {
    auto it = labels.find(u);
    if (it == labels.end()) {
      throw std::invalid_argument("clustering misses node " +
                                  std::to_string(u));
    }
    ++sizes[it->second];
  }
  std::uint64_t internal = 0;
  for (NodeId u : g.present_nodes()) {
    const std::uint64_t lu = labels.at(u);
    for (NodeId v : g.neighbors(u)) {
      if (v < u) continue;
      if (labels.at(v) == lu) {
        ++internal;
      } else {
        ++cost.cross_positive;
      }
    }
  }
  std::uint64_t pairs = 0;
  for (const auto& [label, size] : sizes) pairs += size * (size - 1) / 2;
  cost.intra_negative = pairs - internal;
  return cost;
}

ClusterLabels static_agreement(const DynamicGraph& g, double epsilon,
                               Convention convention) {
  std::vector<NodeId> nodes = g.present_nodes();
  std::sort(nodes.begin(), nodes.end());
  std::map<std::pair<NodeId, NodeId>, bool> agree;
  auto agrees = [&](NodeId u, NodeId v) {
    const std::pair<NodeId, NodeId> key{std::min(u, v), std::max(u, v)};
    auto it = agree.find(key);
    if (it == agree.end()) {
      it = agree.emplace(key, exact_agreement(g, u, v, epsilon, convention))
               .first;
    }
    return it->second;
  };
  std::map<NodeId, bool> heavy;
  for (NodeId u : nodes) {
    const std::vector<NodeId>& nbrs = g.neighbors(u);
    std::uint64_t agreeing = 0;
    for (NodeId v : nbrs) {
      if (agrees(u, v)) ++agreeing;
    }
    heavy[u] = static_cast<double>(agreeing) >
               (1.0 - epsilon) * static_cast<double>(nbrs.size());
  }
  std::map<NodeId, std::vector<NodeId>> kept;
  for (NodeId u : nodes) {
    for (NodeId v : g.neighbors(u)) {
      if (v < u) continue;
      if (!agrees(u, v)) continue;
      if (!heavy[u] && !heavy[v]) continue;
      kept[u].push_back(v);
      kept[v].push_back(u);
    }
  }
  ClusterLabels labels;
  std::uint64_t next = 0;
  for (NodeId start : nodes) {
    if (labels.count(start)) continue;
    const std::uint64_t id = next++;
    std::deque<NodeId> queue{start};
    labels[start] = id;
    while (!queue.empty()) {
      const NodeId u = queue.front();
      queue.pop_front();
      auto it = kept.find(u);
      if (it == kept.end()) continue;
      for (NodeId v : it->second) {
        if (labels.count(v)) continue;
        labels[v] = id;
        queue.push_back(v);
      }
    }
  }
  return labels;
}

namespace {
ClusterLabels greedy_pivot(const DynamicGraph& g,
                           const std::vector<NodeId>& order) {
  ClusterLabels labels;
  for (NodeId c : order) {
    if (labels.count(c)) continue;
    labels[c] = c;
    for (NodeId v : g.neighbors(c)) {
      if (!labels.count(v)) labels[v] = c;
    }
  }
  return labels;
}
}  // namespace

ClusterLabels pivot(const DynamicGraph& g, Rng& rng) {
  std::vector<NodeId> order = g.present_nodes();
  std::sort(order.begin(), order.end());
  shuffle_in_place(order, rng);
  return greedy_pivot(g, order);
}

ClusterLabels pivot_with_priorities(
    const DynamicGraph& g, const std::map<NodeId, std::uint64_t>& priority) {
  std::vector<std::pair<std::uint64_t, NodeId>> order;
  for (NodeId u : g.present_nodes()) order.emplace_back(priority.at(u), u);
  std::sort(order.begin(), order.end());
  std::vector<NodeId> nodes;
  nodes.reserve(order.size());
  for (const auto& [p, u] : order) nodes.push_back(u);
  return greedy_pivot(g, nodes);
}

ClusterLabels singletons(const DynamicGraph& g) {
  ClusterLabels labels;
  for (NodeId u : g.present_nodes()) labels[u] = u;
  return labels;
}

OptResult brute_force_opt(const DynamicGraph& g) {
  std::vector<NodeId> nodes = g.present_nodes();
  std::sort(nodes.begin(), nodes.end());
  const std::size_t n = nodes.size();
  if (n > 10) {
    throw std::invalid_argument("exact optimum limited to 10 nodes");
  }
  std::vector<std::uint16_t> adj(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (g.has_edge(nodes[i], nodes[j])) {
        adj[i] |= static_cast<std::uint16_t>(1u << j);
        adj[j] |= static_cast<std::uint16_t>(1u << i);
      }
    }
  }
  std::vector<std::uint8_t> part(n, 0);
  std::vector<std::uint8_t> best = part;
  std::uint64_t best_cost = ~std::uint64_t{0};
  auto evaluate = [&]() {
    std::uint64_t cost = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const bool edge = adj[i] & (1u << j);
        const bool together = part[i] == part[j];
        if (together != edge) ++cost;
      }
    }
    if (cost < best_cost) {
      best_cost = cost;
      best = part;
    }
  };
  // Restricted growth strings enumerate each set partition exactly once.
  auto rec = [&](auto&& self, std::size_t i, std::uint8_t blocks) -> void {
    if (i == n) {
      evaluate();
      return;
    }
    for (std::uint8_t b = 0; b <= blocks; ++b) {
      part[i] = b;
      self(self, i + 1, std::max<std::uint8_t>(blocks, b + 1));
    }
  };
  if (n == 0) {
    best_cost = 0;
  } else {
    rec(rec, 0, 0);
  }
  OptResult result;
  for (std::size_t i = 0; i < n; ++i) result.labels[nodes[i]] = best[i];
  if (n > 0) result.cost = clustering_cost(g, result.labels);
  return result;
}

DynamicPivot::DynamicPivot(std::uint64_t seed)
    : rng_(mix_seed(seed, 0xbb67ae8584caa73bull)) {}

bool DynamicPivot::is_center(NodeId v) const {
  auto it = center_.find(v);
  return it != center_.end() && it->second == v;
}

void DynamicPivot::settle(const std::vector<NodeId>& seeds) {
  std::set<Key> work;
  for (NodeId v : seeds) {
    if (graph_.is_present(v)) work.insert(key_of(v));
  }
  while (!work.empty()) {
    const auto [p, v] = *work.begin();
    work.erase(work.begin());
    ++touched_;
    const Key self{p, v};
    bool blocked = false;
    NodeId best_center = v;
    Key best_key = self;
    for (NodeId w : graph_.neighbors(v)) {
      if (!is_center(w)) continue;
      const Key kw = key_of(w);
      if (kw < self && (!blocked || kw < best_key)) {
        blocked = true;
        best_center = w;
        best_key = kw;
      }
    }
    const NodeId new_center = blocked ? best_center : v;
    const bool was_center = is_center(v);
    auto it = center_.find(v);
    if (it != center_.end() && it->second == new_center) continue;
    center_[v] = new_center;
    if (was_center != (new_center == v)) {
      for (NodeId w : graph_.neighbors(v)) {
        if (self < key_of(w)) work.insert(key_of(w));
      }
    }
  }
}

void DynamicPivot::apply(const StreamEvent& ev) {
  if (ev.kind == StreamEvent::Kind::insert) {
    graph_.insert_node(ev.node, ev.neighbors);
    pi_[ev.node] = rng_();
    std::vector<NodeId> seeds = ev.neighbors;
    seeds.push_back(ev.node);
    settle(seeds);
  } else {
    const std::vector<NodeId> former = graph_.delete_node(ev.node);
    pi_.erase(ev.node);
    center_.erase(ev.node);
    settle(former);
  }
}

ClusterLabels DynamicPivot::labels() const {
  ClusterLabels out;
  for (NodeId u : graph_.present_nodes()) out[u] = center_.at(u);
  return out;
}

}  // namespace dcc
