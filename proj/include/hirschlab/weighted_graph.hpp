#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hirschlab/extended.hpp"

namespace hirschlab {

/// Finite simple graph on vertices 0..s-1 with positive integer weights.
class WeightedGraph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  /// Unit weights when `weights` is empty. Throws std::invalid_argument on
  /// loops, out-of-range endpoints, s == 0 or nonpositive weights. Duplicate
  /// edges collapse.
  WeightedGraph(std::size_t s, std::span<const Edge> edges, std::vector<std::int64_t> weights = {});

  std::size_t size() const noexcept { return adj_.size(); }
  std::span<const std::int64_t> weights() const noexcept { return weights_; }
  std::int64_t weight(std::size_t v) const { return weights_.at(v); }
  std::int64_t total_weight() const;
  bool adjacent(std::size_t u, std::size_t v) const;
  std::span<const std::size_t> neighbors(std::size_t v) const { return adj_.at(v); }
  /// Sorted (u < v) edge list.
  std::vector<Edge> edges() const;
  std::size_t edge_count() const;
  bool is_complete() const;

  WeightedGraph with_weights(std::vector<std::int64_t> weights) const;

 private:
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::int64_t> weights_;
};

/// vertex_connectivity and weighted_connectivity are infinite exactly when
/// no separating set exists (complete graphs); both are 0 when disconnected.
struct ConnectivityProfile {
  bool connected = false;
  ExtendedNat vertex_connectivity;
  ExtendedNat weighted_connectivity;
};

/// BFS distances from `source`; std::nullopt for unreachable vertices.
std::vector<std::optional<std::size_t>> bfs_distances(const WeightedGraph& g, std::size_t source);
ExtendedNat diameter(const WeightedGraph& g);
bool is_connected(const WeightedGraph& g);

/// Minimum total weight of a vertex set (avoiding u and v) separating the
/// nonadjacent vertices u and v, by max-flow on the node-split digraph.
std::int64_t min_vertex_separator(const WeightedGraph& g, std::size_t u, std::size_t v,
                                  std::span<const std::int64_t> weights);

ExtendedNat vertex_connectivity(const WeightedGraph& g);
/// Largest r such that g is (r,w)-connected.
ExtendedNat weighted_connectivity(const WeightedGraph& g);
ConnectivityProfile connectivity_profile(const WeightedGraph& g);

bool is_l_connected(const WeightedGraph& g, std::int64_t l);
bool is_rw_connected(const WeightedGraph& g, std::int64_t r);

/// Largest l for which g is l-connected (s for complete graphs, 0 when
/// disconnected).
std::int64_t finite_vertex_connectivity(const WeightedGraph& g);

}  // namespace hirschlab
