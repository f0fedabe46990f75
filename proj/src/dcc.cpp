#include "dcc/dcc.hpp"

#include <cmath>
#include <vector>

namespace dcc {

DccConfig DccConfig::practical(double epsilon, std::uint64_t seed) {
  DccConfig cfg;
  cfg.probe = ProbeConfig::practical(epsilon);
  cfg.notify.mode = ProbeMode::practical;
  cfg.notify.epsilon = epsilon;
  cfg.seed = seed;
  return cfg;
}

DccConfig DccConfig::theory(std::uint64_t n, double epsilon, double scale,
                            std::uint64_t seed) {
  DccConfig cfg;
  cfg.probe = ProbeConfig::theory(n, epsilon);
  cfg.notify.mode = ProbeMode::theory;
  cfg.notify.epsilon = epsilon;
  cfg.notify.theory_scale = scale;
  cfg.notify.ambient_n = n;
  cfg.theory_scale = scale;
  cfg.seed = seed;
  return cfg;
}

double DccConfig::anchor_probability(std::uint64_t degree,
                                     std::uint64_t n_now) const {
  if (degree == 0) return 0.0;
  double numerator = anchor_numerator;
  if (probe.mode == ProbeMode::theory) {
    const double n = static_cast<double>(n_now < 2 ? 2 : n_now);
    numerator = theory_scale * anchor_theory_coeff * std::log(n) / probe.epsilon;
  }
  const double p = numerator / static_cast<double>(degree);
  return p < 1.0 ? p : 1.0;
}

std::uint64_t DccConfig::connect_draws(std::uint64_t n_now) const {
  if (probe.mode == ProbeMode::practical) return connect_samples;
  const double n = static_cast<double>(n_now < 2 ? 2 : n_now);
  return static_cast<std::uint64_t>(
      std::ceil(theory_scale * connect_theory_coeff * std::log(n) /
                probe.epsilon));
}

DynamicAgreement::DynamicAgreement(DccConfig cfg)
    : cfg_(cfg),
      notifier_(cfg.notify),
      rng_(mix_seed(cfg.seed, 0x6a09e667f3bcc908ull)) {}

void DynamicAgreement::evict(NodeId w, StepReport& rep) {
  const std::set<NodeId> nbrs = solution_.neighbors(w);
  for (NodeId v : nbrs) {
    solution_.remove_edge(w, v);
    ++rep.edges_removed;
  }
  solution_.remove_anchor(w);
  ++rep.anchors_evicted;
}

bool DynamicAgreement::agree_check(NodeId a, NodeId b) {
  if (cfg_.exact_probes) {
    ++probes_.agreement_probes;
    return exact_agreement(graph_, a, b, cfg_.probe.epsilon,
                           cfg_.probe.convention);
  }
  return probabilistic_agreement(graph_, a, b, cfg_.probe, rng_, &probes_)
      .answer;
}

bool DynamicAgreement::heavy_check(NodeId a) {
  if (cfg_.exact_probes) {
    ++probes_.heavy_probes;
    return exact_heavy(graph_, a, cfg_.probe.epsilon, cfg_.probe.convention);
  }
  return heavy_probe(graph_, a, cfg_.probe, rng_, &probes_).answer;
}

void DynamicAgreement::clean(NodeId u, StepReport& rep) {
  const std::set<NodeId> snapshot = solution_.anchored_neighbors(u);
  for (NodeId w : snapshot) {
    if (!solution_.is_anchor(w) || !solution_.has_edge(u, w)) continue;
    const bool agree = agree_check(w, u);
    const bool heavy = agree && heavy_check(w);
    if (!agree || !heavy) {
      solution_.remove_edge(u, w);
      ++rep.edges_removed;
    }
    if (solution_.is_anchor(w)) {
      const AnchorRecord& rec = solution_.record(w);
      if (static_cast<double>(rec.lost_edges) >
          cfg_.probe.epsilon * static_cast<double>(rec.entry_degree)) {
        evict(w, rep);
      }
    }
  }
}

DynamicAgreement::PhiAction DynamicAgreement::anchor(NodeId u,
                                                     StepReport& rep) {
  const bool was_anchor = solution_.is_anchor(u);
  const double p = cfg_.anchor_probability(graph_.degree(u),
                                           graph_.node_count());
  const bool coin = uniform01(rng_) < p;
  if (was_anchor) {
    const std::set<NodeId> nbrs = solution_.neighbors(u);
    for (NodeId v : nbrs) {
      if (solution_.is_anchor(v)) continue;
      solution_.remove_edge(u, v);
      ++rep.edges_removed;
    }
  }
  if (coin) {
    if (heavy_check(u)) {
      const std::vector<NodeId> nbrs = graph_.neighbors(u);
      for (NodeId v : nbrs) {
        if (agree_check(u, v)) {
          if (solution_.add_edge(u, v)) ++rep.edges_added;
        }
      }
    }
    return PhiAction::join;
  }
  return was_anchor ? PhiAction::drop : PhiAction::none;
}

void DynamicAgreement::connect(NodeId u, StepReport& rep) {
  const std::uint64_t draws = cfg_.connect_draws(graph_.node_count());
  for (std::uint64_t i = 0; i < draws; ++i) {
    const NodeId w = graph_.sample_neighbor(u, rng_);
    const std::set<NodeId> targets = solution_.anchored_neighbors(w);
    for (NodeId r : targets) {
      if (r == u) continue;
      if (!graph_.has_edge(u, r)) continue;
      if (!heavy_check(r)) continue;
      if (!agree_check(r, u)) continue;
      if (solution_.add_edge(u, r)) ++rep.edges_added;
    }
  }
}

StepReport DynamicAgreement::apply(const StreamEvent& ev) {
  StepReport rep;
  rep.event_index = ++events_seen_;
  const ProbeCounters before = probes_;
  NotificationBatch batch;
  if (ev.kind == StreamEvent::Kind::insert) {
    graph_.insert_node(ev.node, ev.neighbors);
    batch = notifier_.on_insert(graph_, ev.node, rng_);
  } else {
    graph_.delete_node(ev.node);
    batch = notifier_.on_delete(graph_, ev.node, rng_);
    rep.edges_removed += solution_.degree(ev.node);
    solution_.remove_node(ev.node);
  }
  for (int t = 0; t < 3; ++t) rep.notifications[t] = batch.type_counts[t];
  rep.resamples = batch.resamples;
  rep.interesting = batch.interesting.size();

  for (NodeId u : batch.interesting) {
    if (!graph_.is_present(u)) continue;
    clean(u, rep);
    if (graph_.degree(u) == 0) continue;
    const PhiAction action = anchor(u, rep);
    connect(u, rep);
    if (action == PhiAction::join) {
      solution_.add_anchor(u);
      ++rep.anchors_joined;
    } else if (action == PhiAction::drop) {
      solution_.remove_anchor(u);
      ++rep.anchors_dropped;
      const std::set<NodeId> nbrs = solution_.neighbors(u);
      for (NodeId v : nbrs) {
        if (solution_.is_anchor(v)) continue;
        solution_.remove_edge(u, v);
        ++rep.edges_removed;
      }
    }
  }
  rep.agreement_probes = probes_.agreement_probes - before.agreement_probes;
  rep.heavy_probes = probes_.heavy_probes - before.heavy_probes;
  return rep;
}

ExtractionReport DynamicAgreement::extract() const {
  return compute_components(solution_, graph_.present_nodes());
}

}  // namespace dcc
