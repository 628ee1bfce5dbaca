#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hirschlab/weighted_graph.hpp"

namespace hirschlab {

/// floor((s - 2) / l) + 1 for an l-connected graph on s vertices.
std::int64_t menger_bound(std::int64_t s, std::int64_t l);
/// floor((e - 2) / r) + 1 for an (r,w)-connected graph of total weight e.
std::int64_t rw_bound(std::int64_t e, std::int64_t r);

struct PrefixLevel {
  std::int64_t i = 0;
  /// |A_i|: length of the longest sorted prefix whose i-1 largest weights
  /// sum to at most r-1. Zero when A_i is empty.
  std::size_t prefix_length = 0;
  /// s - |A_i|
  std::size_t deficiency = 0;
};

struct PrefixProfile {
  std::int64_t l = 0;
  std::int64_t r = 0;
  std::vector<std::int64_t> sorted_weights;
  /// Levels i = l+1 .. h (empty when h is absent).
  std::vector<PrefixLevel> levels;
  std::optional<std::int64_t> h;

  std::size_t deficiency_sum() const;
  /// Deficiency b_i; throws std::out_of_range outside l+1..h.
  std::size_t b(std::int64_t i) const;
};

/// Throws std::invalid_argument if r < l, l < 1 or a weight is nonpositive.
PrefixProfile prefix_profile(std::span<const std::int64_t> weights, std::int64_t r, std::int64_t l);

struct RefinedBound {
  std::int64_t value = 0;
  /// True when h was absent and the Menger bound was used instead.
  bool fallback = false;
};

RefinedBound refined_bound(std::int64_t s, const PrefixProfile& profile);

/// Layered graph on e unit-weight vertices: x, then floor((e-2)/r) layers of
/// size r or r+1 joined completely between consecutive layers, then y. It is
/// r-connected and its diameter meets rw_bound(e, r).
WeightedGraph layered_tight_graph(std::int64_t e, std::int64_t r);

}  // namespace hirschlab
