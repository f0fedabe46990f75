#include "dcc/probes.hpp"

#include <cmath>
#include <stdexcept>

namespace dcc {

ProbeConfig ProbeConfig::theory(std::uint64_t n, double epsilon) {
  ProbeConfig cfg;
  cfg.epsilon = epsilon;
  cfg.mode = ProbeMode::theory;
  const double ln_n = std::log(static_cast<double>(n < 2 ? 2 : n));
  cfg.theory_agree_samples =
      static_cast<std::uint64_t>(std::ceil(300.0 * ln_n / epsilon));
  cfg.theory_heavy_samples =
      static_cast<std::uint64_t>(std::ceil(1200.0 * ln_n / epsilon));
  return cfg;
}

ProbeConfig ProbeConfig::practical(double epsilon, std::uint64_t samples) {
  ProbeConfig cfg;
  cfg.epsilon = epsilon;
  cfg.mode = ProbeMode::practical;
  cfg.practical_samples = samples;
  return cfg;
}

bool exact_agreement(const DynamicGraph& g, NodeId u, NodeId v, double epsilon,
                     Convention convention) {
  if (u == v) return true;
  const std::vector<NodeId>& nu = g.neighbors(u);
  const std::vector<NodeId>& nv = g.neighbors(v);
  const std::vector<NodeId>& small = nu.size() <= nv.size() ? nu : nv;
  const NodeId large_owner = nu.size() <= nv.size() ? v : u;
  std::uint64_t common = 0;
  for (NodeId w : small) {
    if (w != large_owner && g.has_edge(large_owner, w)) ++common;
  }
  std::uint64_t du = nu.size();
  std::uint64_t dv = nv.size();
  std::uint64_t sym;
  double bound;
  if (convention == Convention::closed) {
    const bool adjacent = g.has_edge(u, v);
    const std::uint64_t closed_common = common + (adjacent ? 2 : 0);
    sym = (du + 1) + (dv + 1) - 2 * closed_common;
    bound = epsilon * static_cast<double>(std::max(du, dv) + 1);
  } else {
    sym = du + dv - 2 * common;
    bound = epsilon * static_cast<double>(std::max(du, dv));
  }
  return static_cast<double>(sym) < bound;
}

bool exact_heavy(const DynamicGraph& g, NodeId u, double epsilon,
                 Convention convention) {
  const std::vector<NodeId> nbrs = g.neighbors(u);
  std::uint64_t agreeing = 0;
  for (NodeId v : nbrs) {
    if (exact_agreement(g, u, v, epsilon, convention)) ++agreeing;
  }
  return static_cast<double>(agreeing) >
         (1.0 - epsilon) * static_cast<double>(nbrs.size());
}

ProbeVerdict probabilistic_agreement(const DynamicGraph& g, NodeId u, NodeId v,
                                     const ProbeConfig& cfg, Rng& rng,
                                     ProbeCounters* counters) {
  if (counters) ++counters->agreement_probes;
  const std::uint64_t k = cfg.agree_samples();
  if (k == 0) throw std::invalid_argument("probe sample count is zero");
  const bool closed = cfg.convention == Convention::closed;
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  for (std::uint64_t i = 0; i < k; ++i) {
    const NodeId r = g.sample_neighbor(u, rng);
    const NodeId s = g.sample_neighbor(v, rng);
    const bool r_in_v = g.has_edge(r, v) || (closed && r == v);
    const bool s_in_u = g.has_edge(s, u) || (closed && s == u);
    if (!r_in_v) ++x;
    if (!s_in_u) ++y;
  }
  ProbeVerdict verdict;
  verdict.stat_x = static_cast<double>(x) / static_cast<double>(k);
  verdict.stat_y = static_cast<double>(y) / static_cast<double>(k);
  const double threshold = 0.4 * cfg.epsilon;
  verdict.answer = verdict.stat_x < threshold && verdict.stat_y < threshold;
  return verdict;
}

ProbeVerdict heavy_probe(const DynamicGraph& g, NodeId u,
                         const ProbeConfig& cfg, Rng& rng,
                         ProbeCounters* counters) {
  if (counters) ++counters->heavy_probes;
  const std::uint64_t k = cfg.heavy_samples();
  if (k == 0) throw std::invalid_argument("probe sample count is zero");
  std::uint64_t no_count = 0;
  for (std::uint64_t i = 0; i < k; ++i) {
    const NodeId v = g.sample_neighbor(u, rng);
    if (!probabilistic_agreement(g, u, v, cfg, rng, counters).answer) {
      ++no_count;
    }
  }
  ProbeVerdict verdict;
  verdict.stat_x = static_cast<double>(no_count) / static_cast<double>(k);
  verdict.answer = verdict.stat_x < 1.2 * cfg.epsilon;
  return verdict;
}

}  // namespace dcc
