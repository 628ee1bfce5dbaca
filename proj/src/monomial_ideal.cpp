#include "hirschlab/monomial_ideal.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "hirschlab/errors.hpp"
#include "hirschlab/term_order.hpp"

namespace hirschlab {

namespace {

using Mask = std::uint64_t;
using IntPoly = std::vector<std::int64_t>;

Mask support_mask(const Monomial& m) {
  Mask s = 0;
  for (auto i : m.support()) s |= Mask{1} << i;
  return s;
}

void sort_degrevlex_desc(std::vector<Monomial>& gens) {
  const auto ord = TermOrder::degrevlex();
  std::sort(gens.begin(), gens.end(),
            [&](const Monomial& a, const Monomial& b) { return ord.greater(a, b); });
}

std::vector<Monomial> minimal_subset(std::vector<Monomial> ms) {
  std::sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) {
    return a.degree() != b.degree() ? a.degree() < b.degree() : a < b;
  });
  std::vector<Monomial> kept;
  for (auto& m : ms) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(m); });
    if (!redundant) kept.push_back(std::move(m));
  }
  sort_degrevlex_desc(kept);
  return kept;
}

void trim(IntPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

IntPoly sub(IntPoly a, const IntPoly& b, int shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= b[i];
  trim(a);
  return a;
}

IntPoly times_one_minus_t_pow(const IntPoly& p, int d) {
  IntPoly out(p.size() + d, 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i] += p[i];
    out[i + d] -= p[i];
  }
  trim(out);
  return out;
}

// K(t) for S/(gens), gens minimal and sorted by decreasing degrevlex.
IntPoly raw_numerator(const std::vector<Monomial>& gens) {
  if (gens.empty()) return {1};
  if (gens.front().is_one()) return {0};
  bool coprime = true;
  for (std::size_t i = 0; i < gens.size() && coprime; ++i) {
    for (std::size_t j = i + 1; j < gens.size() && coprime; ++j) coprime = gens[i].coprime(gens[j]);
  }
  if (coprime) {
    IntPoly k{1};
    for (const auto& g : gens) k = times_one_minus_t_pow(k, g.degree());
    return k;
  }
  // Pivot on the highest-degree generator (first under decreasing degrevlex):
  // K(I) = K(J) - t^deg(m) K(J : m), J = I without m.
  const Monomial& pivot = gens.front();
  std::vector<Monomial> rest(gens.begin() + 1, gens.end());
  std::vector<Monomial> quotients;
  quotients.reserve(rest.size());
  for (const auto& g : rest) quotients.push_back(g / gcd(g, pivot));
  return sub(raw_numerator(rest), raw_numerator(minimal_subset(std::move(quotients))), pivot.degree());
}

}  // namespace

MonomialIdeal::MonomialIdeal(RingPtr ring, std::span<const Monomial> monomials) : ring_(std::move(ring)) {
  for (const auto& m : monomials) {
    if (m.size() != ring_->nvars()) throw std::invalid_argument("monomial does not match ring");
  }
  gens_ = minimal_subset({monomials.begin(), monomials.end()});
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

std::string MonomialIdeal::to_string() const {
  if (gens_.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gens_[i].to_string(*ring_);
  }
  return out + ")";
}

std::string MonomialPrime::to_string(const PolyRing& ring) const {
  std::string out = "(";
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) out += ", ";
    out += ring.name(vars[i]);
  }
  return out + ")";
}

MonomialIdeal minimalize(RingPtr ring, std::span<const Monomial> monomials) {
  return MonomialIdeal(std::move(ring), monomials);
}

bool is_squarefree(const MonomialIdeal& ideal) {
  return std::all_of(ideal.gens().begin(), ideal.gens().end(),
                     [](const Monomial& g) { return g.is_squarefree(); });
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
  std::vector<Monomial> r;
  for (const auto& g : ideal.gens()) r.push_back(g.radical());
  return MonomialIdeal(ideal.ring(), r);
}

std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& ideal, std::size_t cap) {
  if (ideal.is_unit()) throw ImproperIdeal();
  if (ideal.is_zero()) throw std::invalid_argument("the zero ideal has no nonzero minimal prime");
  if (ideal.ring()->nvars() > 64) throw std::invalid_argument("minimal primes support at most 64 variables");

  std::vector<Mask> edges;
  const auto rad = radical(ideal);
  for (const auto& g : rad.gens()) edges.push_back(support_mask(g));

  std::vector<Mask> found;
  // Every chosen variable must keep a generator that it alone hits;
  // supersets cannot restore that, so failing branches are cut.
  auto all_private = [&](Mask chosen) {
    for (Mask rest = chosen; rest; rest &= rest - 1) {
      Mask v = rest & -rest;
      bool has_private = std::any_of(edges.begin(), edges.end(), [&](Mask e) { return (e & chosen) == v; });
      if (!has_private) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, Mask chosen, Mask excluded) -> void {
    auto unhit = std::find_if(edges.begin(), edges.end(), [&](Mask e) { return (e & chosen) == 0; });
    if (unhit == edges.end()) {
      if (found.size() >= cap) {
        throw CapExceeded("more than " + std::to_string(cap) + " minimal primes");
      }
      found.push_back(chosen);
      return;
    }
    // Branch on each variable of the first unhit support; a branch excludes
    // the variables taken by earlier branches so each transversal appears once.
    for (Mask rest = *unhit & ~excluded; rest; rest &= rest - 1) {
      Mask v = rest & -rest;
      Mask next = chosen | v;
      if (all_private(next)) self(self, next, excluded);
      excluded |= v;
    }
  };
  search(search, 0, 0);

  std::vector<MonomialPrime> primes;
  primes.reserve(found.size());
  for (Mask m : found) {
    MonomialPrime p;
    for (Mask rest = m; rest; rest &= rest - 1) p.vars.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
    primes.push_back(std::move(p));
  }
  std::sort(primes.begin(), primes.end());
  return primes;
}

std::size_t height(const MonomialIdeal& ideal, std::size_t cap) {
  if (ideal.is_zero()) return 0;
  auto primes = minimal_primes(ideal, cap);
  return primes.front().height();
}

MonomialIdeal monomial_intersection(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch();
  std::vector<Monomial> lcms;
  for (const auto& f : a.gens()) {
    for (const auto& g : b.gens()) lcms.push_back(lcm(f, g));
  }
  return MonomialIdeal(a.ring(), lcms);
}

MonomialIdeal monomial_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch();
  std::vector<Monomial> all(a.gens().begin(), a.gens().end());
  all.insert(all.end(), b.gens().begin(), b.gens().end());
  return MonomialIdeal(a.ring(), all);
}

MonomialIdeal colon_by_monomial(const MonomialIdeal& ideal, const Monomial& m) {
  std::vector<Monomial> q;
  for (const auto& g : ideal.gens()) q.push_back(g / gcd(g, m));
  return MonomialIdeal(ideal.ring(), q);
}

MonomialIdeal prime_ideal(RingPtr ring, const MonomialPrime& prime) {
  std::vector<Monomial> vars;
  for (auto v : prime.vars) vars.push_back(Monomial::variable(ring->nvars(), v));
  return MonomialIdeal(std::move(ring), vars);
}

HilbertData hilbert(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) throw ImproperIdeal();
  const auto n = ideal.ring()->nvars();
  HilbertData data;
  data.raw_numerator = raw_numerator({ideal.gens().begin(), ideal.gens().end()});
  const auto codim = height(ideal);
  data.dim = n - codim;

  // h = K / (1 - t)^codim, one synthetic division at a time.
  IntPoly h = data.raw_numerator;
  for (std::size_t step = 0; step < codim; ++step) {
    IntPoly q(h.size() > 1 ? h.size() - 1 : 1, 0);
    std::int64_t running = 0;
    for (std::size_t i = 0; i + 1 < h.size(); ++i) {
      running += h[i];
      q[i] = running;
    }
    if (running + h.back() != 0 || h.size() < 2) {
      throw InvariantViolation("Hilbert numerator not divisible by (1-t)^codim for " + ideal.to_string());
    }
    trim(q);
    h = std::move(q);
  }
  data.numerator = h;
  for (auto c : h) data.multiplicity += c;
  return data;
}

WeightedGraph facets_to_dual_graph(std::span<const std::vector<std::size_t>> facets) {
  if (facets.empty()) throw std::invalid_argument("no facets");
  const auto d = facets.front().size();
  std::vector<std::set<std::size_t>> sets;
  for (const auto& f : facets) {
    std::set<std::size_t> s(f.begin(), f.end());
    if (s.size() != d || f.size() != d) throw std::invalid_argument("complex is not pure");
    sets.push_back(std::move(s));
  }
  std::vector<WeightedGraph::Edge> edges;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      std::size_t common = 0;
      for (auto v : sets[i]) common += sets[j].count(v);
      if (common + 1 == d) edges.emplace_back(i, j);
    }
  }
  return WeightedGraph(sets.size(), edges);
}

MonomialIdeal stanley_reisner_ideal(RingPtr ring, std::span<const std::vector<std::size_t>> facets) {
  if (facets.empty()) throw std::invalid_argument("no facets");
  const auto n = ring->nvars();
  std::optional<MonomialIdeal> acc;
  for (const auto& f : facets) {
    MonomialPrime complement;
    for (std::size_t v = 0; v < n; ++v) {
      if (std::find(f.begin(), f.end(), v) == f.end()) complement.vars.push_back(v);
    }
    if (complement.vars.empty()) return MonomialIdeal(ring);
    auto p = prime_ideal(ring, complement);
    acc = acc ? monomial_intersection(*acc, p) : p;
  }
  return *acc;
}

}  // namespace hirschlab
