#include "hirschlab/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hirschlab {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

std::int64_t menger_bound(std::int64_t s, std::int64_t l) {
  if (s < 2) throw std::invalid_argument("Menger bound needs at least two vertices");
  if (l < 1) throw std::invalid_argument("l must be positive");
  return floor_div(s - 2, l) + 1;
}

std::int64_t rw_bound(std::int64_t e, std::int64_t r) {
  if (e < 2) throw std::invalid_argument("weighted bound needs total weight at least 2");
  if (r < 1) throw std::invalid_argument("r must be positive");
  return floor_div(e - 2, r) + 1;
}

std::size_t PrefixProfile::deficiency_sum() const {
  std::size_t sum = 0;
  for (const auto& lv : levels) sum += lv.deficiency;
  return sum;
}

std::size_t PrefixProfile::b(std::int64_t i) const {
  for (const auto& lv : levels) {
    if (lv.i == i) return lv.deficiency;
  }
  throw std::out_of_range("no deficiency b_" + std::to_string(i));
}

PrefixProfile prefix_profile(std::span<const std::int64_t> weights, std::int64_t r, std::int64_t l) {
  if (l < 1) throw std::invalid_argument("l must be positive");
  if (r < l) throw std::invalid_argument("prefix profile requires r >= l");
  for (auto w : weights) {
    if (w < 1) throw std::invalid_argument("weights must be positive");
  }
  PrefixProfile p;
  p.l = l;
  p.r = r;
  p.sorted_weights.assign(weights.begin(), weights.end());
  std::sort(p.sorted_weights.begin(), p.sorted_weights.end());
  const auto& w = p.sorted_weights;
  const auto s = static_cast<std::int64_t>(w.size());

  // prefix[k] = w_1 + ... + w_k (1-based weights).
  std::vector<std::int64_t> prefix(w.size() + 1, 0);
  std::partial_sum(w.begin(), w.end(), prefix.begin() + 1);

  for (std::int64_t i = l + 1; i <= s; ++i) {
    const std::int64_t window = i - 1;
    // The window sum w_{k-i+2} + ... + w_k grows with k on sorted weights,
    // so the admissible k form a prefix of [i-1, s].
    std::size_t best = 0;
    for (std::int64_t k = window; k <= s; ++k) {
      if (prefix[k] - prefix[k - window] <= r - 1) best = static_cast<std::size_t>(k);
      else break;
    }
    if (best == 0) break;
    p.levels.push_back({i, best, static_cast<std::size_t>(s) - best});
    p.h = i;
  }
  return p;
}

RefinedBound refined_bound(std::int64_t s, const PrefixProfile& profile) {
  if (s < 2) throw std::invalid_argument("refined bound needs at least two vertices");
  if (!profile.h) return {menger_bound(s, profile.l), true};
  auto num = s - 2 + static_cast<std::int64_t>(profile.deficiency_sum());
  return {floor_div(num, *profile.h) + 1, false};
}

WeightedGraph layered_tight_graph(std::int64_t e, std::int64_t r) {
  if (r < 1 || e - 2 < r) throw std::invalid_argument("layered graph needs e - 2 >= r >= 1");
  const auto layers = (e - 2) / r;
  std::vector<std::int64_t> layer_size(static_cast<std::size_t>(layers), r);
  for (std::int64_t extra = (e - 2) % r, j = 0; extra > 0; --extra, j = (j + 1) % layers) {
    ++layer_size[static_cast<std::size_t>(j)];
  }
  // Vertex 0 is x, vertex e-1 is y, layers fill the middle in order.
  std::vector<std::vector<std::size_t>> members;
  std::size_t next = 1;
  for (auto sz : layer_size) {
    std::vector<std::size_t> layer;
    for (std::int64_t k = 0; k < sz; ++k) layer.push_back(next++);
    members.push_back(std::move(layer));
  }
  const auto y = static_cast<std::size_t>(e - 1);
  std::vector<WeightedGraph::Edge> edges;
  for (auto v : members.front()) edges.emplace_back(0, v);
  for (auto v : members.back()) edges.emplace_back(v, y);
  for (std::size_t j = 0; j + 1 < members.size(); ++j) {
    for (auto a : members[j]) {
      for (auto b : members[j + 1]) edges.emplace_back(a, b);
    }
  }
  return WeightedGraph(static_cast<std::size_t>(e), edges);
}

}  // namespace hirschlab
