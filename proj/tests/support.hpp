#pragma once

// Random generators and brute-force oracles shared by the unit, property and
// acceptance tests. The oracles deliberately avoid the library's algorithms.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <queue>
#include <random>
#include <string>
#include <vector>

#include "hirschlab/extended.hpp"
#include "hirschlab/groebner.hpp"
#include "hirschlab/monomial_ideal.hpp"
#include "hirschlab/polynomial.hpp"
#include "hirschlab/weighted_graph.hpp"

namespace testsupport {

using namespace hirschlab;

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Polynomial var(const RingPtr& ring, std::size_t i) { return Polynomial::variable(ring, i); }
inline Polynomial cst(const RingPtr& ring, const Rational& c) { return Polynomial::constant(ring, c); }

inline Monomial mono(std::vector<int> exps) { return Monomial(std::move(exps)); }

inline Polynomial random_poly(Rng& rng, const RingPtr& ring, int terms, int max_deg, int coeff = 5) {
  std::vector<Term> ts;
  for (int k = 0; k < terms; ++k) {
    std::vector<int> e(ring->nvars(), 0);
    int budget = uniform(rng, 0, max_deg);
    for (int d = 0; d < budget; ++d) ++e[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(ring->nvars()) - 1))];
    Rational c(uniform(rng, -coeff, coeff), uniform(rng, 1, 3));
    c.canonicalize();
    ts.push_back({Monomial(e), c});
  }
  return Polynomial::from_terms(ring, std::move(ts));
}

inline Polynomial random_nonzero_poly(Rng& rng, const RingPtr& ring, int terms, int max_deg) {
  for (;;) {
    auto p = random_poly(rng, ring, terms, max_deg);
    if (!p.is_zero()) return p;
  }
}

/// Random graph with s vertices, edge probability p, weights in [1, max_w].
inline WeightedGraph random_graph(Rng& rng, std::size_t s, double p, int max_w) {
  std::bernoulli_distribution coin(p);
  std::vector<WeightedGraph::Edge> edges;
  for (std::size_t u = 0; u < s; ++u)
    for (std::size_t v = u + 1; v < s; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  std::vector<std::int64_t> w(s);
  for (auto& x : w) x = uniform(rng, 1, max_w);
  return WeightedGraph(s, edges, w);
}

/// Components of g after deleting `removed` (bitmask); counts surviving vertices.
inline bool disconnected_after(const WeightedGraph& g, std::uint32_t removed) {
  const std::size_t s = g.size();
  std::vector<bool> seen(s, false);
  std::size_t start = s, alive = 0;
  for (std::size_t v = 0; v < s; ++v) {
    if (removed >> v & 1u) continue;
    ++alive;
    if (start == s) start = v;
  }
  if (alive < 2) return false;
  std::queue<std::size_t> q;
  q.push(start);
  seen[start] = true;
  std::size_t reached = 1;
  while (!q.empty()) {
    auto u = q.front();
    q.pop();
    for (auto v : g.neighbors(u)) {
      if ((removed >> v & 1u) || seen[v]) continue;
      seen[v] = true;
      ++reached;
      q.push(v);
    }
  }
  return reached < alive;
}

struct BruteConnectivity {
  bool connected = false;
  ExtendedNat vertex = ExtendedNat::infinity();
  ExtendedNat weighted = ExtendedNat::infinity();
};

/// Minimum cardinality and minimum weight over all disconnecting vertex sets.
inline BruteConnectivity brute_connectivity(const WeightedGraph& g) {
  BruteConnectivity out;
  out.connected = !disconnected_after(g, 0);
  if (!out.connected) {
    out.vertex = 0;
    out.weighted = 0;
    return out;
  }
  const std::uint32_t full = 1u << g.size();
  for (std::uint32_t m = 1; m < full; ++m) {
    if (!disconnected_after(g, m)) continue;
    std::int64_t card = 0, weight = 0;
    for (std::size_t v = 0; v < g.size(); ++v)
      if (m >> v & 1u) {
        ++card;
        weight += g.weight(v);
      }
    if (ExtendedNat(card) < out.vertex) out.vertex = card;
    if (ExtendedNat(weight) < out.weighted) out.weighted = weight;
  }
  return out;
}

/// Floyd-Warshall diameter.
inline ExtendedNat brute_diameter(const WeightedGraph& g) {
  const std::size_t s = g.size();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(s, std::vector<int>(s, inf));
  for (std::size_t v = 0; v < s; ++v) d[v][v] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (std::size_t k = 0; k < s; ++k)
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  int best = 0;
  for (auto& row : d)
    for (int x : row) best = std::max(best, x);
  return best >= inf ? ExtendedNat::infinity() : ExtendedNat(best);
}

/// Random monomial ideal with `gens` generators in n variables.
inline MonomialIdeal random_monomial_ideal(Rng& rng, const RingPtr& ring, int gens, int max_exp,
                                           int max_support) {
  const int n = static_cast<int>(ring->nvars());
  std::vector<Monomial> ms;
  for (int g = 0; g < gens; ++g) {
    std::vector<int> e(ring->nvars(), 0);
    int k = uniform(rng, 1, std::min(n, max_support));
    for (int t = 0; t < k; ++t) e[static_cast<std::size_t>(uniform(rng, 0, n - 1))] = uniform(rng, 1, max_exp);
    ms.emplace_back(e);
  }
  return MonomialIdeal(ring, ms);
}

/// All inclusion-minimal variable subsets meeting every generator's support,
/// by enumeration of all 2^n subsets.
inline std::vector<MonomialPrime> brute_minimal_primes(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.ring()->nvars();
  std::vector<std::uint32_t> supports;
  for (const auto& g : ideal.gens()) {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (g[i] > 0) m |= 1u << i;
    supports.push_back(m);
  }
  std::vector<std::uint32_t> hits;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    bool ok = std::all_of(supports.begin(), supports.end(), [&](std::uint32_t s) { return (s & m) != 0; });
    if (ok) hits.push_back(m);
  }
  std::vector<MonomialPrime> out;
  for (auto m : hits) {
    bool minimal = std::none_of(hits.begin(), hits.end(), [&](std::uint32_t o) { return o != m && (o & m) == o; });
    if (!minimal) continue;
    MonomialPrime p;
    for (std::size_t i = 0; i < n; ++i)
      if (m >> i & 1u) p.vars.push_back(i);
    out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool in_ideal(const MonomialIdeal& ideal, const std::vector<int>& e) {
  Monomial m(e);
  return std::any_of(ideal.gens().begin(), ideal.gens().end(), [&](const Monomial& g) { return g.divides(m); });
}

/// Number of monomials of degree d not in the ideal.
inline std::int64_t standard_monomials(const MonomialIdeal& ideal, int d) {
  const std::size_t n = ideal.ring()->nvars();
  std::vector<int> e(n, 0);
  std::int64_t count = 0;
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      if (!in_ideal(ideal, e)) ++count;
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, d);
  return count;
}

inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Coefficient of t^k in h(t) / (1 - t)^dim.
inline std::int64_t series_coefficient(const HilbertData& h, int k) {
  std::int64_t sum = 0;
  for (std::size_t j = 0; j < h.numerator.size() && static_cast<int>(j) <= k; ++j) {
    const auto rest = k - static_cast<std::int64_t>(j);
    const auto c = h.dim == 0 ? (rest == 0 ? 1 : 0)
                              : binomial(rest + static_cast<std::int64_t>(h.dim) - 1,
                                         static_cast<std::int64_t>(h.dim) - 1);
    sum += h.numerator[j] * c;
  }
  return sum;
}

/// Random antichain of `count` variable subsets (square-free monomial primes).
/// `count` is clamped to the largest antichain size, C(n, n/2).
inline std::vector<std::vector<std::size_t>> random_prime_family(Rng& rng, std::size_t n, std::size_t count) {
  count = std::min<std::size_t>(count, static_cast<std::size_t>(binomial(static_cast<std::int64_t>(n),
                                                                         static_cast<std::int64_t>(n / 2))));
  for (;;) {
    std::vector<std::uint32_t> masks;
    int attempts = 0;
    while (masks.size() < count && attempts++ < 200) {
      std::uint32_t m = 0;
      int k = uniform(rng, 1, std::max(1, static_cast<int>(n) - 1));
      while (std::popcount(m) < k) m |= 1u << uniform(rng, 0, static_cast<int>(n) - 1);
      bool ok = std::none_of(masks.begin(), masks.end(),
                             [&](std::uint32_t o) { return (o & m) == o || (o & m) == m; });
      if (ok) masks.push_back(m);
    }
    if (masks.size() < count) continue;
    std::vector<std::vector<std::size_t>> out;
    for (auto m : masks) {
      std::vector<std::size_t> vars;
      for (std::size_t i = 0; i < n; ++i)
        if (m >> i & 1u) vars.push_back(i);
      out.push_back(vars);
    }
    return out;
  }
}

inline IdealPresentation variable_prime(const RingPtr& ring, const std::vector<std::size_t>& vars) {
  std::vector<Polynomial> gens;
  for (auto v : vars) gens.push_back(var(ring, v));
  return IdealPresentation(ring, gens);
}

inline IdealPresentation from_strings_monomial(const RingPtr& ring, const MonomialIdeal& ideal) {
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.gens()) gens.push_back(Polynomial::from_monomial(ring, g));
  return IdealPresentation(ring, gens);
}

/// 2-minors x_i x_{m+j} - x_j x_{m+i} of a generic 2 x m matrix.
inline IdealPresentation two_minors(const RingPtr& ring, std::size_t m) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      gens.push_back(var(ring, i) * var(ring, m + j) - var(ring, j) * var(ring, m + i));
  return IdealPresentation(ring, gens);
}

/// True iff the edge sets agree after some vertex relabeling (s <= 9).
inline bool isomorphic(const WeightedGraph& a, const WeightedGraph& b) {
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
  std::vector<std::size_t> perm(a.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  do {
    bool ok = true;
    for (auto [u, v] : a.edges()) {
      if (!b.adjacent(perm[u], perm[v])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace testsupport
