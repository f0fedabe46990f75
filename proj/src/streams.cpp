#include "dcc/streams.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace dcc {

namespace {

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StreamError("cannot open " + path);
  return in;
}

}  // namespace

SourceGraph load_edge_list(std::istream& in) {
  SourceGraph g;
  std::map<std::uint64_t, NodeId> compact;
  std::set<std::pair<NodeId, NodeId>> edges;
  auto id_of = [&](std::uint64_t raw) {
    auto [it, fresh] = compact.emplace(raw, compact.size());
    (void)fresh;
    return it->second;
  };
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank
    if (first[0] == '#') continue;
    std::uint64_t a, b;
    std::istringstream pa(first);
    std::string rest;
    if (!(pa >> a) || (pa >> rest) || !(ls >> b) || (ls >> rest)) {
      throw StreamError("malformed edge list at line " +
                        std::to_string(line_no));
    }
    const NodeId ia = id_of(a);
    const NodeId ib = id_of(b);
    if (ia == ib) continue;  // self-loop: node recorded, edge dropped
    edges.emplace(std::min(ia, ib), std::max(ia, ib));
  }
  g.n = compact.size();
  g.edges.assign(edges.begin(), edges.end());
  return g;
}

SourceGraph load_edge_list_file(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  return load_edge_list(in);
}

std::vector<std::vector<double>> load_points(std::istream& in) {
  std::vector<std::vector<double>> points;
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first[0] == '#') continue;
    ls.clear();
    ls.seekg(0);
    std::vector<double> p;
    double x;
    while (ls >> x) p.push_back(x);
    if (!ls.eof()) {
      throw StreamError("malformed point at line " + std::to_string(line_no));
    }
    if (!points.empty() && points.back().size() != p.size()) {
      throw StreamError("dimension mismatch at line " +
                        std::to_string(line_no));
    }
    points.push_back(std::move(p));
  }
  return points;
}

std::vector<std::vector<double>> load_points_file(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  return load_points(in);
}

SourceGraph threshold_graph(const std::vector<std::vector<double>>& points,
                            double tau) {
  SourceGraph g;
  g.n = points.size();
  for (const auto& p : points) {
    if (p.size() != points[0].size()) {
      throw StreamError("dimension mismatch in point set");
    }
  }
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      double d2 = 0.0;
      for (std::size_t c = 0; c < points[i].size(); ++c) {
        const double d = points[i][c] - points[j][c];
        d2 += d * d;
      }
      if (d2 < tau * tau) g.edges.emplace_back(i, j);
    }
  }
  return g;
}

SourceGraph planted_partition(std::uint64_t k, std::uint64_t s, double p_in,
                              double p_out, std::uint64_t seed) {
  SourceGraph g;
  g.n = k * s;
  Rng rng(seed);
  for (NodeId i = 0; i + 1 < g.n; ++i) {
    for (NodeId j = i + 1; j < g.n; ++j) {
      const double p = (i / s == j / s) ? p_in : p_out;
      if (uniform01(rng) < p) g.edges.emplace_back(i, j);
    }
  }
  return g;
}

std::vector<StreamEvent> gen_stream(const SourceGraph& source,
                                    const StreamConfig& cfg) {
  Rng rng(cfg.seed);
  std::vector<NodeId> order(source.n);
  for (std::uint64_t i = 0; i < source.n; ++i) order[i] = i;
  shuffle_in_place(order, rng);

  std::vector<std::vector<NodeId>> adj(source.n);
  for (const auto& [a, b] : source.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }

  std::vector<StreamEvent> events;
  std::vector<NodeId> present;
  std::vector<char> here(source.n, 0);
  auto delete_random = [&]() {
    const std::size_t i =
        static_cast<std::size_t>(uniform_below(rng, present.size()));
    const NodeId u = present[i];
    present[i] = present.back();
    present.pop_back();
    here[u] = 0;
    events.push_back({StreamEvent::Kind::remove, u, {}});
  };

  bool first = true;
  for (NodeId u : order) {
    if (!first && cfg.p_delete > 0.0) {
      if (cfg.gaps == DeletionGaps::single_coin) {
        if (uniform01(rng) < cfg.p_delete && !present.empty()) delete_random();
      } else {
        while (uniform01(rng) < cfg.p_delete && !present.empty()) {
          delete_random();
        }
      }
    }
    first = false;
    StreamEvent ev{StreamEvent::Kind::insert, u, {}};
    for (NodeId v : adj[u]) {
      if (here[v]) ev.neighbors.push_back(v);
    }
    std::sort(ev.neighbors.begin(), ev.neighbors.end());
    events.push_back(std::move(ev));
    here[u] = 1;
    present.push_back(u);
  }
  if (cfg.p_delete > 0.0) {
    while (!present.empty()) delete_random();
  }
  return events;
}

void write_stream(std::ostream& out, const std::vector<StreamEvent>& events) {
  for (const StreamEvent& ev : events) {
    if (ev.kind == StreamEvent::Kind::insert) {
      out << 'I' << ' ' << ev.node;
      for (NodeId v : ev.neighbors) out << ' ' << v;
    } else {
      out << 'D' << ' ' << ev.node;
    }
    out << '\n';
  }
}

std::vector<StreamEvent> read_stream(std::istream& in) {
  std::vector<StreamEvent> events;
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag[0] == '#') continue;
    StreamEvent ev;
    if (tag == "I") {
      ev.kind = StreamEvent::Kind::insert;
    } else if (tag == "D") {
      ev.kind = StreamEvent::Kind::remove;
    } else {
      throw StreamError("unknown event tag at line " + std::to_string(line_no));
    }
    if (!(ls >> ev.node)) {
      throw StreamError("missing node id at line " + std::to_string(line_no));
    }
    NodeId v;
    while (ls >> v) ev.neighbors.push_back(v);
    if (!ls.eof()) {
      throw StreamError("malformed event at line " + std::to_string(line_no));
    }
    if (ev.kind == StreamEvent::Kind::remove && !ev.neighbors.empty()) {
      throw StreamError("deletion with neighbor list at line " +
                        std::to_string(line_no));
    }
    events.push_back(std::move(ev));
  }
  return events;
}

}  // namespace dcc
