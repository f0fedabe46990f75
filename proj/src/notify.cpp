#include "dcc/notify.hpp"

#include <bit>
#include <cmath>

namespace dcc {

namespace {
int level_of(std::uint64_t degree) {
  return static_cast<int>(std::bit_width(degree)) - 1;
}
}  // namespace

std::uint64_t NotifyConfig::draws_for(std::uint64_t degree,
                                      std::uint64_t n_now) const {
  if (mode == ProbeMode::practical) return practical_samples;
  const std::uint64_t n = ambient_n ? ambient_n : (n_now < 2 ? 2 : n_now);
  const double raw =
      std::ceil(theory_scale * theory_coeff * std::log(static_cast<double>(n)) /
                epsilon);
  if (raw >= static_cast<double>(degree)) return degree;
  return static_cast<std::uint64_t>(raw);
}

void Notifier::resample(const DynamicGraph& g, NodeId u, Rng& rng) {
  NodeState& st = states_[u];
  if (st.level >= 0) {
    for (NodeId v : st.sample) {
      auto it = states_.find(v);
      if (it == states_.end()) continue;  // v already deleted
      auto wit = it->second.watchers.find(st.level);
      if (wit == it->second.watchers.end()) continue;
      wit->second.erase(u);
      if (wit->second.empty()) it->second.watchers.erase(wit);
    }
    st.sample.clear();
    st.level = -1;
  }
  ++resamples_;
  const std::uint64_t d = g.degree(u);
  if (d == 0) return;
  const int level = level_of(d);
  const std::uint64_t draws = cfg_.draws_for(d, g.node_count());
  std::set<NodeId> picked;
  for (std::uint64_t i = 0; i < draws; ++i) {
    picked.insert(g.sample_neighbor(u, rng));
  }
  st.sample.assign(picked.begin(), picked.end());
  st.level = level;
  for (NodeId v : st.sample) {
    states_[v].watchers[level].insert(u);
  }
}

void Notifier::run_rounds(const DynamicGraph& g, const std::set<NodeId>& type0,
                          Rng& rng, NotificationBatch& batch) {
  std::set<NodeId> interesting(batch.interesting.begin(),
                               batch.interesting.end());
  std::set<NodeId> current = type0;
  for (int type = 0; type < 3; ++type) {
    if (type < 2) {
      for (NodeId w : current) interesting.insert(w);
    }
    std::set<NodeId> next;
    for (NodeId w : current) {
      resample(g, w, rng);
      ++batch.resamples;
      if (type < 2) {
        for (NodeId v : states_[w].sample) {
          batch.sent.push_back({v, type + 1});
          ++batch.type_counts[type + 1];
          next.insert(v);
        }
      }
    }
    current.swap(next);
  }
  batch.interesting.assign(interesting.begin(), interesting.end());
}

NotificationBatch Notifier::on_insert(const DynamicGraph& g, NodeId u,
                                      Rng& rng) {
  NotificationBatch batch;
  batch.interesting.push_back(u);
  resample(g, u, rng);
  ++batch.resamples;
  std::set<NodeId> type0;
  for (NodeId v : states_[u].sample) {
    batch.sent.push_back({v, 0});
    ++batch.type_counts[0];
    type0.insert(v);
  }
  run_rounds(g, type0, rng, batch);
  return batch;
}

NotificationBatch Notifier::on_delete(const DynamicGraph& g, NodeId u,
                                      Rng& rng) {
  NotificationBatch batch;
  std::set<NodeId> type0;
  auto it = states_.find(u);
  if (it != states_.end()) {
    for (const auto& [level, watchers] : it->second.watchers) {
      for (NodeId w : watchers) type0.insert(w);
    }
    // Deregister u from its sampled neighbors before dropping its state.
    if (it->second.level >= 0) {
      for (NodeId v : it->second.sample) {
        auto vit = states_.find(v);
        if (vit == states_.end()) continue;
        auto wit = vit->second.watchers.find(it->second.level);
        if (wit == vit->second.watchers.end()) continue;
        wit->second.erase(u);
        if (wit->second.empty()) vit->second.watchers.erase(wit);
      }
    }
    states_.erase(it);
  }
  for (NodeId w : type0) {
    batch.sent.push_back({w, 0});
    ++batch.type_counts[0];
  }
  run_rounds(g, type0, rng, batch);
  return batch;
}

int Notifier::sample_level(NodeId u) const {
  auto it = states_.find(u);
  return it == states_.end() ? -1 : it->second.level;
}

const std::vector<NodeId>& Notifier::sample_of(NodeId u) const {
  static const std::vector<NodeId> empty;
  auto it = states_.find(u);
  return it == states_.end() ? empty : it->second.sample;
}

const std::map<int, std::set<NodeId>>& Notifier::watchers_of(NodeId u) const {
  static const std::map<int, std::set<NodeId>> empty;
  auto it = states_.find(u);
  return it == states_.end() ? empty : it->second.watchers;
}

std::string Notifier::check_consistency(const DynamicGraph& g) const {
  for (const auto& [u, st] : states_) {
    if (!g.is_present(u)) {
      return "state kept for absent node " + std::to_string(u);
    }
    if (st.level < 0 && !st.sample.empty()) {
      return "node " + std::to_string(u) + " has a sample but no level";
    }
    for (NodeId v : st.sample) {
      if (!g.is_present(v)) {
        return "sample of " + std::to_string(u) + " references absent node " +
               std::to_string(v);
      }
      auto it = states_.find(v);
      if (it == states_.end()) {
        return "sample of " + std::to_string(u) + " not mirrored at " +
               std::to_string(v);
      }
      auto wit = it->second.watchers.find(st.level);
      if (wit == it->second.watchers.end() || !wit->second.count(u)) {
        return "watcher entry missing: " + std::to_string(u) + " -> " +
               std::to_string(v) + " at level " + std::to_string(st.level);
      }
    }
    for (const auto& [level, watchers] : st.watchers) {
      for (NodeId w : watchers) {
        auto it = states_.find(w);
        if (it == states_.end() || it->second.level != level) {
          return "stale watcher " + std::to_string(w) + " at " +
                 std::to_string(u);
        }
        bool found = false;
        for (NodeId v : it->second.sample) {
          if (v == u) {
            found = true;
            break;
          }
        }
        if (!found) {
          return "watcher " + std::to_string(w) + " at " + std::to_string(u) +
                 " has no matching sample entry";
        }
      }
    }
  }
  return std::string();
}

}  // namespace dcc
