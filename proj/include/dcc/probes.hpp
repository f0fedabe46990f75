#pragma once

#include <cstdint>

#include "dcc/graph.hpp"
#include "dcc/rand.hpp"

namespace dcc {

// closed: a node belongs to its own neighborhood when neighborhoods are
// compared. This keeps adjacent clique pairs at symmetric difference zero.
enum class Convention { open, closed };

enum class ProbeMode { theory, practical };

struct ProbeConfig {
  double epsilon = 0.2;
  ProbeMode mode = ProbeMode::practical;
  std::uint64_t theory_agree_samples = 0;
  std::uint64_t theory_heavy_samples = 0;
  std::uint64_t practical_samples = 2;
  Convention convention = Convention::closed;

  // theory-mode sample counts: ceil(300 ln n / eps) for pairwise agreement,
  // ceil(1200 ln n / eps) for heaviness.
  static ProbeConfig theory(std::uint64_t n, double epsilon);
  static ProbeConfig practical(double epsilon = 0.2, std::uint64_t samples = 2);

  std::uint64_t agree_samples() const {
    return mode == ProbeMode::theory ? theory_agree_samples : practical_samples;
  }
  std::uint64_t heavy_samples() const {
    return mode == ProbeMode::theory ? theory_heavy_samples : practical_samples;
  }
};

struct ProbeVerdict {
  bool answer = false;
  double stat_x = 0.0;
  double stat_y = 0.0;
};

struct ProbeCounters {
  std::uint64_t agreement_probes = 0;
  std::uint64_t heavy_probes = 0;
};

// Exact predicates (full neighborhood scans). u and v are in eps-agreement
// when |N(u) symdiff N(v)| < eps * max(|N(u)|, |N(v)|), neighborhoods taken
// per the convention.
bool exact_agreement(const DynamicGraph& g, NodeId u, NodeId v, double epsilon,
                     Convention convention = Convention::closed);

// u is eps-heavy when it is in eps-agreement with more than a (1 - eps)
// fraction of its neighbors.
bool exact_heavy(const DynamicGraph& g, NodeId u, double epsilon,
                 Convention convention = Convention::closed);

// Sampling estimate of eps-agreement: k sample pairs (one side each), answer
// yes iff both miss-frequencies stay below 0.4 * eps. Each sample charges two
// edge queries and two neighbor samples to the graph counters.
ProbeVerdict probabilistic_agreement(const DynamicGraph& g, NodeId u, NodeId v,
                                     const ProbeConfig& cfg, Rng& rng,
                                     ProbeCounters* counters = nullptr);

// Sampling estimate of heaviness: k sampled neighbors, answer yes iff the
// fraction of no-verdicts from the pairwise probe stays below 1.2 * eps.
ProbeVerdict heavy_probe(const DynamicGraph& g, NodeId u,
                         const ProbeConfig& cfg, Rng& rng,
                         ProbeCounters* counters = nullptr);

}  // namespace dcc
