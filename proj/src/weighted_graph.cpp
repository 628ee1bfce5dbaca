#include "hirschlab/weighted_graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace hirschlab {

namespace {

// Dinic max-flow; the graphs here have at most a few hundred nodes.
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t n) : adj_(n), level_(n), next_(n) {}

  void add_edge(std::size_t from, std::size_t to, std::int64_t capacity) {
    adj_[from].push_back(arcs_.size());
    arcs_.push_back({to, capacity});
    adj_[to].push_back(arcs_.size());
    arcs_.push_back({from, 0});
  }

  std::int64_t max_flow(std::size_t source, std::size_t sink) {
    std::int64_t flow = 0;
    while (build_levels(source, sink)) {
      std::fill(next_.begin(), next_.end(), 0);
      while (std::int64_t pushed = augment(source, sink, std::numeric_limits<std::int64_t>::max())) {
        flow += pushed;
      }
    }
    return flow;
  }

 private:
  struct Arc {
    std::size_t to;
    std::int64_t residual;
  };

  bool build_levels(std::size_t source, std::size_t sink) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::size_t> q;
    level_[source] = 0;
    q.push(source);
    while (!q.empty()) {
      auto v = q.front();
      q.pop();
      for (auto id : adj_[v]) {
        const auto& a = arcs_[id];
        if (a.residual > 0 && level_[a.to] < 0) {
          level_[a.to] = level_[v] + 1;
          q.push(a.to);
        }
      }
    }
    return level_[sink] >= 0;
  }

  std::int64_t augment(std::size_t v, std::size_t sink, std::int64_t limit) {
    if (v == sink) return limit;
    for (auto& i = next_[v]; i < adj_[v].size(); ++i) {
      auto id = adj_[v][i];
      auto& a = arcs_[id];
      if (a.residual <= 0 || level_[a.to] != level_[v] + 1) continue;
      if (std::int64_t got = augment(a.to, sink, std::min(limit, a.residual))) {
        a.residual -= got;
        arcs_[id ^ 1].residual += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

// Minimum over nonadjacent pairs of the separator weight; infinity when every
// pair is adjacent.
ExtendedNat min_separator_over_pairs(const WeightedGraph& g, std::span<const std::int64_t> weights) {
  if (!is_connected(g)) return 0;
  std::optional<std::int64_t> best;
  const auto s = g.size();
  for (std::size_t u = 0; u < s; ++u) {
    for (std::size_t v = u + 1; v < s; ++v) {
      if (g.adjacent(u, v)) continue;
      auto cut = min_vertex_separator(g, u, v, weights);
      if (!best || cut < *best) best = cut;
    }
  }
  return best ? ExtendedNat(*best) : ExtendedNat::infinity();
}

}  // namespace

WeightedGraph::WeightedGraph(std::size_t s, std::span<const Edge> edges,
                             std::vector<std::int64_t> weights)
    : adj_(s), weights_(std::move(weights)) {
  if (s == 0) throw std::invalid_argument("a graph needs at least one vertex");
  if (weights_.empty()) weights_.assign(s, 1);
  if (weights_.size() != s) throw std::invalid_argument("weight count does not match vertex count");
  for (auto w : weights_) {
    if (w < 1) throw std::invalid_argument("vertex weights must be positive");
  }
  for (auto [u, v] : edges) {
    if (u >= s || v >= s) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    if (adjacent(u, v)) continue;
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& n : adj_) std::sort(n.begin(), n.end());
}

std::int64_t WeightedGraph::total_weight() const {
  return std::accumulate(weights_.begin(), weights_.end(), std::int64_t{0});
}

bool WeightedGraph::adjacent(std::size_t u, std::size_t v) const {
  const auto& n = adj_.at(u);
  return std::find(n.begin(), n.end(), v) != n.end();
}

std::vector<WeightedGraph::Edge> WeightedGraph::edges() const {
  std::vector<Edge> out;
  for (std::size_t u = 0; u < adj_.size(); ++u) {
    for (auto v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t WeightedGraph::edge_count() const {
  std::size_t deg = 0;
  for (const auto& n : adj_) deg += n.size();
  return deg / 2;
}

bool WeightedGraph::is_complete() const {
  const auto s = size();
  return edge_count() == s * (s - 1) / 2;
}

WeightedGraph WeightedGraph::with_weights(std::vector<std::int64_t> weights) const {
  auto e = edges();
  return WeightedGraph(size(), e, std::move(weights));
}

std::vector<std::optional<std::size_t>> bfs_distances(const WeightedGraph& g, std::size_t source) {
  std::vector<std::optional<std::size_t>> dist(g.size());
  std::queue<std::size_t> q;
  dist.at(source) = 0;
  q.push(source);
  while (!q.empty()) {
    auto v = q.front();
    q.pop();
    for (auto u : g.neighbors(v)) {
      if (!dist[u]) {
        dist[u] = *dist[v] + 1;
        q.push(u);
      }
    }
  }
  return dist;
}

ExtendedNat diameter(const WeightedGraph& g) {
  std::int64_t best = 0;
  for (std::size_t v = 0; v < g.size(); ++v) {
    for (const auto& d : bfs_distances(g, v)) {
      if (!d) return ExtendedNat::infinity();
      best = std::max<std::int64_t>(best, static_cast<std::int64_t>(*d));
    }
  }
  return best;
}

bool is_connected(const WeightedGraph& g) {
  auto d = bfs_distances(g, 0);
  return std::all_of(d.begin(), d.end(), [](const auto& x) { return x.has_value(); });
}

std::int64_t min_vertex_separator(const WeightedGraph& g, std::size_t u, std::size_t v,
                                  std::span<const std::int64_t> weights) {
  if (u == v || g.adjacent(u, v)) throw std::invalid_argument("separator needs distinct nonadjacent vertices");
  const auto s = g.size();
  // Node x splits into x_in = 2x and x_out = 2x+1. The total weight plus one
  // exceeds any finite cut and stands in for unbounded capacity.
  std::int64_t unbounded = std::accumulate(weights.begin(), weights.end(), std::int64_t{1});
  FlowNetwork net(2 * s);
  for (std::size_t x = 0; x < s; ++x) {
    bool terminal = x == u || x == v;
    net.add_edge(2 * x, 2 * x + 1, terminal ? unbounded : weights[x]);
    for (auto y : g.neighbors(x)) net.add_edge(2 * x + 1, 2 * y, unbounded);
  }
  return net.max_flow(2 * u + 1, 2 * v);
}

ExtendedNat vertex_connectivity(const WeightedGraph& g) {
  std::vector<std::int64_t> ones(g.size(), 1);
  return min_separator_over_pairs(g, ones);
}

ExtendedNat weighted_connectivity(const WeightedGraph& g) {
  return min_separator_over_pairs(g, g.weights());
}

ConnectivityProfile connectivity_profile(const WeightedGraph& g) {
  return {is_connected(g), vertex_connectivity(g), weighted_connectivity(g)};
}

bool is_l_connected(const WeightedGraph& g, std::int64_t l) {
  if (l < 1) throw std::invalid_argument("l must be positive");
  if (static_cast<std::int64_t>(g.size()) < l) return false;
  return vertex_connectivity(g) >= ExtendedNat(l);
}

bool is_rw_connected(const WeightedGraph& g, std::int64_t r) {
  if (r < 1) throw std::invalid_argument("r must be positive");
  return is_connected(g) && weighted_connectivity(g) >= ExtendedNat(r);
}

std::int64_t finite_vertex_connectivity(const WeightedGraph& g) {
  auto k = vertex_connectivity(g);
  return k.is_finite() ? k.value() : static_cast<std::int64_t>(g.size());
}

}  // namespace hirschlab
