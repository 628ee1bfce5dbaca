#include <doctest.h>

#include "hirschlab/bounds.hpp"
#include "hirschlab/weighted_graph.hpp"
#include "support.hpp"

using namespace hirschlab;
using namespace testsupport;

namespace {

WeightedGraph star() {
  std::vector<WeightedGraph::Edge> edges;
  for (std::size_t v = 1; v <= 6; ++v) edges.emplace_back(0, v);
  return WeightedGraph(7, edges, {5, 2, 2, 2, 2, 2, 2});
}

WeightedGraph path(std::size_t s, std::vector<std::int64_t> w = {}) {
  std::vector<WeightedGraph::Edge> edges;
  for (std::size_t v = 0; v + 1 < s; ++v) edges.emplace_back(v, v + 1);
  return WeightedGraph(s, edges, std::move(w));
}

WeightedGraph complete(std::size_t s, std::vector<std::int64_t> w = {}) {
  std::vector<WeightedGraph::Edge> edges;
  for (std::size_t u = 0; u < s; ++u)
    for (std::size_t v = u + 1; v < s; ++v) edges.emplace_back(u, v);
  return WeightedGraph(s, edges, std::move(w));
}

}  // namespace

TEST_CASE("graph construction") {
  std::vector<WeightedGraph::Edge> loop{{0, 0}};
  CHECK_THROWS_AS(WeightedGraph(2, loop), std::invalid_argument);
  std::vector<WeightedGraph::Edge> far{{0, 5}};
  CHECK_THROWS_AS(WeightedGraph(2, far), std::invalid_argument);
  CHECK_THROWS_AS(WeightedGraph(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(WeightedGraph(2, {}, {1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(WeightedGraph(2, {}, {1}), std::invalid_argument);
  std::vector<WeightedGraph::Edge> dup{{0, 1}, {1, 0}};
  WeightedGraph g(2, dup);
  CHECK(g.edge_count() == 1);
  CHECK(g.total_weight() == 2);
  CHECK(g.is_complete());
  CHECK(g.with_weights({3, 4}).total_weight() == 7);
}

TEST_CASE("diameter") {
  for (std::size_t m = 1; m <= 6; ++m) CHECK(diameter(path(m + 1)) == ExtendedNat(static_cast<std::int64_t>(m)));
  CHECK(diameter(WeightedGraph(1, {})) == ExtendedNat(0));
  CHECK(diameter(WeightedGraph(2, {})).is_infinite());
  CHECK(diameter(star()) == ExtendedNat(2));
  auto d = bfs_distances(path(3), 0);
  CHECK(d[2] == 2u);
}

TEST_CASE("vertex connectivity") {
  auto g = star();
  CHECK(is_l_connected(g, 1));
  CHECK_FALSE(is_l_connected(g, 2));
  CHECK(is_l_connected(complete(4), 4));
  CHECK_FALSE(is_l_connected(complete(4), 5));
  CHECK_FALSE(is_l_connected(path(3), 2));
  CHECK(vertex_connectivity(g) == ExtendedNat(1));
  CHECK(vertex_connectivity(complete(5)).is_infinite());
  CHECK(finite_vertex_connectivity(complete(5)) == 5);
  CHECK(finite_vertex_connectivity(path(4)) == 1);
  CHECK(vertex_connectivity(WeightedGraph(3, {})) == ExtendedNat(0));
}

TEST_CASE("weighted connectivity") {
  auto g = star();
  CHECK(weighted_connectivity(g) == ExtendedNat(5));
  CHECK(is_rw_connected(g, 5));
  CHECK_FALSE(is_rw_connected(g, 6));
  CHECK(weighted_connectivity(complete(5, {1, 2, 3, 4, 5})).is_infinite());
  CHECK(weighted_connectivity(path(3, {1, 3, 1})) == ExtendedNat(3));
  CHECK_FALSE(is_rw_connected(WeightedGraph(2, {}), 1));
  CHECK(is_rw_connected(path(5), 1));
  CHECK(min_vertex_separator(path(3, {1, 3, 1}), 0, 2, std::vector<std::int64_t>{1, 3, 1}) == 3);
  auto p = connectivity_profile(g);
  CHECK(p.connected);
  CHECK(p.vertex_connectivity == ExtendedNat(1));
  CHECK(p.weighted_connectivity == ExtendedNat(5));
}

TEST_CASE("connectivity agrees with exhaustive subsets") {
  Rng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto s = static_cast<std::size_t>(uniform(rng, 1, 9));
    auto g = random_graph(rng, s, std::uniform_real_distribution<double>(0.2, 0.95)(rng), 5);
    auto brute = brute_connectivity(g);
    auto prof = connectivity_profile(g);
    REQUIRE(prof.connected == brute.connected);
    CHECK(prof.vertex_connectivity == brute.vertex);
    CHECK(prof.weighted_connectivity == brute.weighted);
    CHECK(diameter(g) == brute_diameter(g));
    if (prof.connected) CHECK(prof.weighted_connectivity >= prof.vertex_connectivity);
    for (std::int64_t l = 1; l <= static_cast<std::int64_t>(s) + 1; ++l) {
      bool expect = brute.connected && static_cast<std::int64_t>(s) >= l && brute.vertex >= ExtendedNat(l);
      CHECK(is_l_connected(g, l) == expect);
    }
  }
}

TEST_CASE("unit weights: weighted connectivity equals vertex connectivity") {
  Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = random_graph(rng, static_cast<std::size_t>(uniform(rng, 2, 8)), 0.6, 1);
    CHECK(weighted_connectivity(g) == vertex_connectivity(g));
    auto l = vertex_connectivity(g);
    if (l.is_finite() && l.value() >= 1) {
      CHECK(rw_bound(static_cast<std::int64_t>(g.size()), l.value()) ==
            menger_bound(static_cast<std::int64_t>(g.size()), l.value()));
    }
  }
}

TEST_CASE("(r,w)-connectivity is monotone in r") {
  Rng rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = random_graph(rng, static_cast<std::size_t>(uniform(rng, 2, 8)), 0.6, 4);
    for (std::int64_t r = 2; r <= 12; ++r)
      if (is_rw_connected(g, r)) CHECK(is_rw_connected(g, r - 1));
  }
}

TEST_CASE("bound formulas") {
  CHECK(menger_bound(7, 1) == 6);
  CHECK(menger_bound(9, 8) == 1);
  CHECK(menger_bound(17, 5) == 4);
  CHECK_THROWS(menger_bound(1, 1));
  CHECK(rw_bound(17, 5) == 4);
  CHECK(rw_bound(8, 3) == 3);
  CHECK(rw_bound(2, 1) == 1);
  CHECK_THROWS(rw_bound(1, 1));
}

TEST_CASE("prefix profiles") {
  std::vector<std::int64_t> w1{2, 2, 2, 2, 2, 2, 5};
  auto p = prefix_profile(w1, 5, 1);
  REQUIRE(p.h);
  CHECK(*p.h == 3);
  CHECK(p.b(2) == 1);
  CHECK(p.b(3) == 1);
  CHECK(p.deficiency_sum() == 2);
  CHECK_THROWS_AS(p.b(4), std::out_of_range);
  CHECK(refined_bound(7, p).value == 3);
  CHECK_FALSE(refined_bound(7, p).fallback);

  std::vector<std::int64_t> w2{1, 1, 1, 1, 4};
  auto q = prefix_profile(w2, 3, 1);
  REQUIRE(q.h);
  CHECK(*q.h == 3);
  CHECK(q.b(2) == 1);
  CHECK(q.b(3) == 1);
  CHECK(refined_bound(5, q).value == 2);

  std::vector<std::int64_t> ones(6, 1);
  auto e = prefix_profile(ones, 3, 3);
  CHECK_FALSE(e.h.has_value());
  CHECK(refined_bound(6, e).fallback);
  CHECK(refined_bound(6, e).value == menger_bound(6, 3));

  std::vector<std::int64_t> two{1, 1};
  auto t = prefix_profile(two, 1, 1);
  CHECK_FALSE(t.h.has_value());
  CHECK(refined_bound(2, t).value == 1);
  CHECK_THROWS_AS(prefix_profile(two, 1, 2), std::invalid_argument);
}

TEST_CASE("prefix profiles are nested") {
  Rng rng(10);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::int64_t> w(static_cast<std::size_t>(uniform(rng, 2, 9)));
    for (auto& x : w) x = uniform(rng, 1, 5);
    const std::int64_t l = uniform(rng, 1, 3);
    const std::int64_t r = uniform(rng, static_cast<int>(l), 12);
    auto p = prefix_profile(w, r, l);
    for (std::size_t k = 1; k < p.levels.size(); ++k) {
      CHECK(p.levels[k].prefix_length <= p.levels[k - 1].prefix_length);
      CHECK(p.levels[k].deficiency >= p.levels[k - 1].deficiency);
    }
    CHECK(std::is_sorted(p.sorted_weights.begin(), p.sorted_weights.end()));
  }
}

TEST_CASE("bounds hold on random connected graphs") {
  Rng rng(12);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    auto g = random_graph(rng, static_cast<std::size_t>(uniform(rng, 2, 9)), 0.5, 5);
    if (!is_connected(g) || g.is_complete()) continue;
    ++checked;
    const auto s = static_cast<std::int64_t>(g.size());
    const auto d = diameter(g).value();
    const auto l = vertex_connectivity(g).value();
    const auto r = weighted_connectivity(g).value();
    CHECK(d <= menger_bound(s, l));
    CHECK(d <= rw_bound(g.total_weight(), r));
    auto p = prefix_profile(g.weights(), r, l);
    if (p.h) CHECK(d <= refined_bound(s, p).value);
  }
  CHECK(checked > 100);
}

TEST_CASE("layered graphs meet the weighted bound") {
  for (auto [e, r] : {std::pair<std::int64_t, std::int64_t>{10, 2}, {11, 3}, {14, 4}}) {
    auto g = layered_tight_graph(e, r);
    CHECK(static_cast<std::int64_t>(g.size()) == e);
    CHECK(g.total_weight() == e);
    CHECK(is_rw_connected(g, r));
    CHECK(diameter(g) == ExtendedNat(rw_bound(e, r)));
  }
  CHECK_THROWS_AS(layered_tight_graph(4, 3), std::invalid_argument);
}

TEST_CASE("star example end to end") {
  auto g = star();
  CHECK(diameter(g) == ExtendedNat(2));
  auto p = prefix_profile(g.weights(), 5, 1);
  CHECK(menger_bound(7, 1) == 6);
  CHECK(rw_bound(g.total_weight(), 5) == 4);
  CHECK(refined_bound(7, p).value == 3);
}
