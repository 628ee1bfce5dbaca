#include "hirschlab/dual_graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

#include "hirschlab/errors.hpp"
#include "hirschlab/parallel.hpp"

namespace hirschlab {

namespace {

const char* kPrimesAsserted = "primes as asserted: primality of the supplied ideals is not verified";

std::vector<std::string> generator_strings(const IdealPresentation& p, const TermOrder& ord) {
  std::vector<std::string> out;
  for (const auto& g : p.generators()) out.push_back(g.to_string(ord));
  return out;
}

DualGraphReport assemble(std::vector<DualVertex> vertices, WeightedGraph graph, std::size_t c) {
  bool unmixed = std::all_of(vertices.begin(), vertices.end(), [&](const DualVertex& v) { return v.height == c; });
  auto diam = diameter(graph);
  auto bounds = graph_bounds(graph);
  return DualGraphReport{
      .vertices = std::move(vertices),
      .graph = std::move(graph),
      .height = c,
      .unmixed = unmixed,
      .diameter = diam,
      .hirsch = hirsch_verdict(diam, c),
      .bounds = std::move(bounds),
      .warnings = {},
      .disclaimers = {},
  };
}

}  // namespace

std::string to_string(HirschVerdict verdict) {
  switch (verdict) {
    case HirschVerdict::yes: return "yes";
    case HirschVerdict::no: return "no";
    case HirschVerdict::undefined_disconnected: return "undefined-disconnected";
  }
  return "?";
}

HirschVerdict hirsch_verdict(const ExtendedNat& diameter, std::size_t height) {
  if (diameter.is_infinite()) return HirschVerdict::undefined_disconnected;
  return diameter.value() <= static_cast<std::int64_t>(height) ? HirschVerdict::yes : HirschVerdict::no;
}

PrimeList prime_list_from_monomial(const MonomialIdeal& ideal, const TermOrder& order, std::size_t cap) {
  PrimeList list{ideal.ring(), {}, order};
  for (const auto& p : minimal_primes(ideal, cap)) {
    std::vector<Polynomial> gens;
    for (auto v : p.vars) gens.push_back(Polynomial::variable(ideal.ring(), v));
    list.primes.emplace_back(ideal.ring(), std::move(gens));
  }
  return list;
}

std::vector<BoundEntry> graph_bounds(const WeightedGraph& g) {
  std::vector<BoundEntry> out;
  const auto s = static_cast<std::int64_t>(g.size());
  const bool connected = is_connected(g);
  if (!connected || s < 2) {
    std::string why = connected ? "single vertex" : "graph is disconnected";
    out.push_back({"menger", std::nullopt, false, why});
    out.push_back({"rw", std::nullopt, false, why});
    out.push_back({"refined", std::nullopt, false, why});
    return out;
  }
  const auto l = finite_vertex_connectivity(g);
  out.push_back({"menger", menger_bound(s, l), true, "l=" + std::to_string(l)});

  const auto r = weighted_connectivity(g);
  if (r.is_infinite()) {
    out.push_back({"rw", std::nullopt, false, "complete graph: no separating set"});
    out.push_back({"refined", std::nullopt, false, "complete graph: no separating set"});
    return out;
  }
  const auto e = g.total_weight();
  out.push_back({"rw", rw_bound(e, r.value()), true, "e=" + std::to_string(e) + " r=" + r.to_string()});
  auto profile = prefix_profile(g.weights(), r.value(), std::min(l, r.value()));
  auto refined = refined_bound(s, profile);
  std::string detail = "l=" + std::to_string(profile.l) + " r=" + r.to_string();
  detail += profile.h ? " h=" + std::to_string(*profile.h) + " sum_b=" + std::to_string(profile.deficiency_sum())
                      : " h absent, Menger fallback";
  out.push_back({"refined", refined.value, true, detail});
  return out;
}

DualGraphReport dual_graph_monomial(const MonomialIdeal& ideal, std::size_t prime_cap) {
  auto primes = minimal_primes(ideal, prime_cap);
  const auto c = primes.front().height();
  std::vector<DualVertex> vertices;
  for (const auto& p : primes) {
    std::vector<std::string> gens;
    for (auto v : p.vars) gens.push_back(ideal.ring()->name(v));
    vertices.push_back({std::move(gens), p.height()});
  }
  std::vector<WeightedGraph::Edge> edges;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    for (std::size_t j = i + 1; j < primes.size(); ++j) {
      std::vector<std::size_t> u;
      std::set_union(primes[i].vars.begin(), primes[i].vars.end(), primes[j].vars.begin(), primes[j].vars.end(),
                     std::back_inserter(u));
      if (u.size() == c + 1) edges.emplace_back(i, j);
    }
  }
  return assemble(std::move(vertices), WeightedGraph(primes.size(), edges), c);
}

DualGraphReport dual_graph_from_primes(const PrimeList& list, bool use_multiplicity_weights) {
  const auto s = list.primes.size();
  if (s == 0) throw std::invalid_argument("empty prime list");
  const auto& ord = list.order;

  std::vector<std::optional<GroebnerBasis>> bases(s);
  std::vector<std::size_t> heights(s);
  parallel_for(s, [&](std::size_t i) {
    bases[i] = buchberger(list.primes[i], ord);
    heights[i] = height_via_initial(*bases[i], list.ring);
  });
  const auto c = *std::min_element(heights.begin(), heights.end());

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = i + 1; j < s; ++j) pairs.emplace_back(i, j);
  }
  // 0 = improper sum.
  std::vector<std::size_t> sum_heights(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t k) {
    auto [i, j] = pairs[k];
    std::vector<Polynomial> gens = bases[i]->elements;
    gens.insert(gens.end(), bases[j]->elements.begin(), bases[j]->elements.end());
    auto gb = buchberger(IdealPresentation(list.ring, std::move(gens)), ord);
    sum_heights[k] = gb.contains_unit() ? 0 : height(initial_ideal(gb, list.ring));
  });

  std::vector<WeightedGraph::Edge> edges;
  std::vector<std::string> warnings;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto [i, j] = pairs[k];
    if (sum_heights[k] == 0) {
      if (list.primes[i].is_homogeneous() && list.primes[j].is_homogeneous()) {
        warnings.push_back("sum of primes " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                           " is the unit ideal although both are homogeneous");
      }
      continue;
    }
    if (sum_heights[k] == c + 1) edges.emplace_back(i, j);
  }

  std::vector<std::int64_t> weights;
  if (use_multiplicity_weights) {
    weights.resize(s);
    parallel_for(s, [&](std::size_t i) { weights[i] = hilbert(initial_ideal(*bases[i], list.ring)).multiplicity; });
  }
  std::vector<DualVertex> vertices;
  for (std::size_t i = 0; i < s; ++i) vertices.push_back({generator_strings(list.primes[i], ord), heights[i]});
  auto report = assemble(std::move(vertices), WeightedGraph(s, edges, std::move(weights)), c);
  report.warnings = std::move(warnings);
  report.disclaimers.push_back(kPrimesAsserted);
  return report;
}

std::vector<std::int64_t> multiplicity_weights(const PrimeList& list) {
  std::vector<std::int64_t> weights(list.primes.size());
  parallel_for(list.primes.size(), [&](std::size_t i) {
    weights[i] = hilbert(initial_ideal(list.primes[i], list.order)).multiplicity;
  });
  return weights;
}

DegReport theorem_deg_report(const WeightedGraph& g, std::int64_t reg) {
  if (reg < 1) throw std::invalid_argument("regularity must be positive");
  DegReport rep;
  rep.reg = reg;
  rep.weights.assign(g.weights().begin(), g.weights().end());
  rep.multiplicity = g.total_weight();
  rep.diameter = diameter(g);
  rep.weighted_connectivity = weighted_connectivity(g);
  rep.rw_connected = is_rw_connected(g, reg);
  rep.disclaimers = {"S/I reduced and Gorenstein: asserted, not verified",
                     "regularity " + std::to_string(reg) + ": supplied, not computed"};
  const auto s = static_cast<std::int64_t>(g.size());
  if (s < 2) {
    rep.l = 1;
    rep.deg_bound = rep.multiplicity >= 2 ? rw_bound(rep.multiplicity, reg) : 1;
    rep.refined = RefinedBound{1, true};
    rep.consistent = rep.rw_connected;
    return rep;
  }
  rep.deg_bound = rw_bound(rep.multiplicity, reg);
  rep.l = finite_vertex_connectivity(g);
  if (rep.l >= 1 && reg >= rep.l) {
    rep.profile = prefix_profile(g.weights(), reg, rep.l);
    rep.refined = refined_bound(s, *rep.profile);
  }
  rep.consistent = rep.rw_connected && rep.diameter <= ExtendedNat(rep.deg_bound) &&
                   (!rep.refined || rep.diameter <= ExtendedNat(rep.refined->value));
  return rep;
}

DegReport theorem_deg_report(const PrimeList& primes, std::int64_t reg) {
  return theorem_deg_report(dual_graph_from_primes(primes, true).graph, reg);
}

std::int64_t ci_regularity(std::span<const std::int64_t> degrees) {
  if (degrees.empty()) throw std::invalid_argument("no degrees");
  std::int64_t sum = 0;
  for (auto d : degrees) {
    if (d < 1) throw std::invalid_argument("degrees must be positive");
    sum += d;
  }
  return sum - static_cast<std::int64_t>(degrees.size());
}

std::int64_t ci_multiplicity(std::span<const std::int64_t> degrees) {
  if (degrees.empty()) throw std::invalid_argument("no degrees");
  std::int64_t prod = 1;
  for (auto d : degrees) {
    if (d < 1) throw std::invalid_argument("degrees must be positive");
    prod *= d;
  }
  return prod;
}

std::int64_t gorenstein_hvec_bound(std::span<const std::int64_t> hvec) {
  if (hvec.empty() || hvec.front() != 1) throw std::invalid_argument("h-vector must start with 1");
  if (!std::equal(hvec.begin(), hvec.end(), hvec.rbegin())) {
    throw std::invalid_argument("h-vector of a Gorenstein algebra must be symmetric");
  }
  if (std::any_of(hvec.begin(), hvec.end(), [](auto h) { return h < 0; })) {
    throw std::invalid_argument("h-vector entries must be nonnegative");
  }
  const auto r = static_cast<std::int64_t>(hvec.size()) - 1;
  if (r <= 0) return 1;
  return rw_bound(std::accumulate(hvec.begin(), hvec.end(), std::int64_t{0}), r);
}

CompRecord verify_comp(const PrimeList& list, std::size_t subset_cap) {
  const auto s = list.primes.size();
  if (s == 0) throw std::invalid_argument("empty prime list");
  if (s > subset_cap) {
    throw CapExceeded(std::to_string(s) + " primes exceed the subset cap of " + std::to_string(subset_cap));
  }
  const auto& ord = list.order;
  const std::size_t full = (std::size_t{1} << s) - 1;

  // Intersections by subset mask, built level by level (popcount) so that
  // each mask extends an already computed one.
  std::vector<std::optional<IdealPresentation>> inter(full + 1);
  std::vector<std::optional<MonomialIdeal>> initial(full + 1);
  std::vector<std::vector<std::size_t>> levels(s + 1);
  for (std::size_t m = 1; m <= full; ++m) levels[std::popcount(m)].push_back(m);
  for (std::size_t k = 1; k <= s; ++k) {
    parallel_for(levels[k].size(), [&](std::size_t idx) {
      auto m = levels[k][idx];
      auto low = static_cast<std::size_t>(std::countr_zero(m));
      auto rest = m & (m - 1);
      inter[m] = rest == 0 ? list.primes[low] : ideal_intersection(*inter[rest], list.primes[low]);
      initial[m] = initial_ideal(*inter[m], ord);
    });
  }

  CompRecord rec{.initial_of_intersection = *initial[full]};
  rec.subsets_checked = full;
  for (std::size_t m = 1; m <= full; ++m) {
    if (is_squarefree(*initial[m])) continue;
    rec.hypothesis_holds = false;
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < s; ++i) {
      if (m >> i & 1) subset.push_back(i + 1);
    }
    rec.failing_subsets.push_back(std::move(subset));
  }

  rec.initial_commutes_with_intersection = true;
  for (std::size_t m = 1; m <= full; ++m) {
    std::optional<MonomialIdeal> acc;
    for (std::size_t i = 0; i < s; ++i) {
      if (!(m >> i & 1)) continue;
      const auto& single = *initial[std::size_t{1} << i];
      acc = acc ? monomial_intersection(*acc, single) : single;
    }
    if (!(*acc == *initial[m])) rec.initial_commutes_with_intersection = false;
  }
  rec.initial_commutes_with_sum = true;
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = i + 1; j < s; ++j) {
      auto lhs = initial_ideal(list.primes[i] + list.primes[j], ord);
      auto rhs = monomial_sum(*initial[std::size_t{1} << i], *initial[std::size_t{1} << j]);
      if (!(lhs == rhs)) rec.initial_commutes_with_sum = false;
    }
  }

  rec.diam_ideal = dual_graph_from_primes(list).diameter;
  rec.diam_initial = rec.initial_of_intersection.is_unit()
                         ? ExtendedNat::infinity()
                         : dual_graph_monomial(rec.initial_of_intersection).diameter;
  rec.inequality_holds = rec.diam_ideal <= rec.diam_initial;
  if (rec.hypothesis_holds) {
    if (!rec.inequality_holds) {
      throw InvariantViolation("square-free initial ideals on every subset but diam(I) > diam(in I)");
    }
    if (!rec.initial_commutes_with_intersection || !rec.initial_commutes_with_sum) {
      throw InvariantViolation("square-free initial ideals on every subset but in() does not commute");
    }
  }
  return rec;
}

CiCertificate certify_squarefree_ci(const IdealPresentation& ideal, const TermOrder& ord) {
  auto gb = buchberger(ideal, ord);
  if (gb.contains_unit()) throw ImproperIdeal();
  CiCertificate cert{.initial = initial_ideal(gb, ideal.ring())};
  cert.basis_size = gb.elements.size();
  cert.height = height(cert.initial);
  cert.squarefree = is_squarefree(cert.initial);
  auto gens = cert.initial.gens();
  cert.pairwise_coprime = true;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!gens[i].coprime(gens[j])) cert.pairwise_coprime = false;
    }
  }
  cert.positive = cert.basis_size == cert.height && cert.squarefree && cert.pairwise_coprime;
  return cert;
}

}  // namespace hirschlab
