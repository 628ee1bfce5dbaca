// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "hirschlab/bounds.hpp"
#include "hirschlab/dual_graph.hpp"
#include "hirschlab/io/cli.hpp"
#include "hirschlab/io/parser.hpp"
#include "hirschlab/io/report.hpp"
#include "support.hpp"

using namespace hirschlab;
using namespace testsupport;

namespace {

const std::string kSource = HIRSCHLAB_SOURCE_DIR;

constexpr double kExample2Seconds = 30.0;
constexpr double kHypercubeSeconds = 10.0;
constexpr double kPropertySeconds = 300.0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 10) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  template <class A, class B>
  void equal(const A& actual, const B& expected, const std::string& what) {
    std::ostringstream msg;
    msg << what << ": got " << actual << ", expected " << expected;
    expect(actual == expected, msg.str());
  }
  bool ok() const { return failed_ == 0; }
  std::size_t checks() const { return checks_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(kSource + "/" + path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

io::InputDocument load(const std::string& path) { return io::parse_document(slurp(path)); }

PrimeList primes_of(const io::InputDocument& doc) {
  return PrimeList{doc.ring, std::get<io::PrimesBlock>(doc.blocks.at(0)).primes, doc.order.value_or(TermOrder::lex())};
}

io::Json cli(Checker& c, std::vector<std::string> args) {
  for (auto& a : args)
    if (a.starts_with("data/")) a = kSource + "/" + a;
  std::ostringstream out, err;
  const int code = io::run_command(args, out, err);
  c.expect(code == io::kExitOk, "exit code " + std::to_string(code) + " for " + args[0] + ": " + err.str());
  return code == io::kExitOk ? io::Json::parse(out.str()) : io::Json::object();
}

MonomialPrime prime_of(std::vector<std::size_t> vars) {
  std::sort(vars.begin(), vars.end());
  return MonomialPrime{std::move(vars)};
}

void criterion_star(Checker& c) {
  auto b = cli(c, {"bounds", "--weights", "2,2,2,2,2,2,5", "--r", "5", "--l", "1", "--s", "7"});
  c.equal(b["bounds"][0]["name"], "menger", "first bound");
  c.equal(b["bounds"][0]["value"], 6, "menger");
  c.equal(b["bounds"][1]["value"], 4, "rw");
  c.equal(b["bounds"][2]["value"], 3, "refined");
  c.equal(b["profile"]["h"], 3, "h");
  c.equal(b["profile"]["levels"][0]["i"], 2, "level i");
  c.equal(b["profile"]["levels"][0]["b"], 1, "b_2");
  c.equal(b["profile"]["levels"][1]["b"], 1, "b_3");

  auto k = cli(c, {"connectivity", "data/star.json"});
  c.equal(k["weighted_connectivity"], 5, "weighted connectivity");
  c.equal(k["vertex_connectivity"], 1, "vertex connectivity");

  auto g = io::graph_from_json(io::Json::parse(slurp("data/star.json")));
  std::size_t ecc = 0;
  for (std::size_t v = 0; v < g.size(); ++v)
    for (auto d : bfs_distances(g, v)) ecc = std::max(ecc, d.value_or(g.size()));
  c.equal(ecc, 2u, "bfs diameter");
  c.equal(k["diameter"], 2, "reported diameter");
}

void criterion_example2(Checker& c) {
  const auto start = Clock::now();
  auto list = primes_of(load("data/complete_intersection_primes.txt"));
  auto rep = dual_graph_from_primes(list, true);
  auto deg = theorem_deg_report(rep.graph, 3);
  const double elapsed = seconds_since(start);

  std::vector<WeightedGraph::Edge> k5;
  for (std::size_t u = 0; u < 5; ++u)
    for (std::size_t v = u + 1; v < 5; ++v)
      if (!(u == 0 && v == 1) && !(u == 2 && v == 3)) k5.emplace_back(u, v);
  c.expect(isomorphic(rep.graph, WeightedGraph(5, k5)), "graph is K5 minus two disjoint edges");
  c.equal(rep.graph.edge_count(), 8u, "edge count");
  c.equal(rep.diameter, ExtendedNat(2), "diameter");
  const auto weights = rep.graph.weights();
  c.expect(std::vector<std::int64_t>(weights.begin(), weights.end()) == std::vector<std::int64_t>{1, 1, 1, 1, 4},
           "multiplicity weights (1,1,1,1,4)");
  c.expect(is_rw_connected(rep.graph, 3), "(3,w)-connected");
  c.equal(deg.deg_bound, 3, "weighted bound");
  c.expect(deg.refined.has_value(), "refined bound computed");
  if (deg.refined) c.equal(deg.refined->value, 2, "refined bound");
  c.expect(deg.rw_connected && deg.consistent, "report consistent");

  auto profile = prefix_profile(rep.graph.weights(), 3, 1);
  c.expect(profile.h == 3, "h = 3 at l = 1");
  if (profile.h == 3) {
    c.equal(profile.b(2), 1u, "b_2");
    c.equal(profile.b(3), 1u, "b_3");
  }
  c.equal(refined_bound(5, profile).value, 2, "refined bound at l = 1");
  c.expect(elapsed < kExample2Seconds, "runtime " + std::to_string(elapsed) + " s");
}

void criterion_disconnection(Checker& c) {
  auto list = primes_of(load("data/disconnected.txt"));
  auto rec = verify_comp(list);
  auto ring = list.ring;
  auto expected = MonomialIdeal(ring, std::vector<Monomial>{mono({1, 1, 0, 0}), mono({1, 0, 1, 0}),
                                                            mono({0, 1, 1, 0}), mono({0, 0, 2, 0})});
  c.equal(rec.initial_of_intersection.to_string(), expected.to_string(), "initial ideal");
  c.expect(minimal_primes(rec.initial_of_intersection) == std::vector<MonomialPrime>{prime_of({0, 2}), prime_of({1, 2})},
           "Min(in I) = {(x1,x3),(x2,x3)}");
  c.equal(rec.diam_initial, ExtendedNat(1), "diam(in I)");
  c.expect(rec.diam_ideal.is_infinite(), "diam(I) infinite");
  c.expect(!rec.hypothesis_holds, "hypothesis fails");
  c.expect(rec.failing_subsets == std::vector<std::vector<std::size_t>>{{1, 2}}, "failing subset {1,2}");

  auto j = cli(c, {"compare-initial", "data/disconnected.txt"});
  c.equal(j["hypothesis"], "fails", "reported hypothesis");
  c.expect(j["diam_ideal"].is_null(), "reported diam(I) is null");
}

void criterion_determinantal(Checker& c) {
  for (std::size_t m = 3; m <= 5; ++m) {
    const auto tag = "m=" + std::to_string(m) + " ";
    auto doc = load("data/determinantal_m" + std::to_string(m) + ".txt");
    const auto& ideal = std::get<io::GensBlock>(doc.blocks.at(0)).ideal;
    const auto ord = TermOrder::lex();
    std::vector<Polynomial> minors(ideal.generators().begin(), ideal.generators().end());
    c.equal(minors.size(), m * (m - 1) / 2, tag + "minor count");
    c.expect(is_groebner_basis(minors, ord), tag + "minors form a Groebner basis");
    auto gb = buchberger(ideal, ord);
    std::set<std::string> want, got;
    for (const auto& f : minors) want.insert(f.monic(ord).to_string());
    for (const auto& f : gb.elements) got.insert(f.to_string());
    c.expect(want == got, tag + "reduced basis equals the minors");

    auto in = initial_ideal(gb, doc.ring);
    std::vector<MonomialPrime> pk;
    for (std::size_t k = 1; k <= m; ++k) {
      std::vector<std::size_t> vars;
      for (std::size_t i = 1; i < k; ++i) vars.push_back(i - 1);
      for (std::size_t i = m + k + 1; i <= 2 * m; ++i) vars.push_back(i - 1);
      pk.push_back(prime_of(vars));
    }
    auto mins = minimal_primes(in);
    c.expect(std::set<MonomialPrime>(mins.begin(), mins.end()) == std::set<MonomialPrime>(pk.begin(), pk.end()),
             tag + "Min(in I) = {p_k}");

    PrimeList list{doc.ring, {}, ord};
    for (const auto& p : pk) list.primes.push_back(variable_prime(doc.ring, p.vars));
    auto rep = dual_graph_from_primes(list);
    bool path = rep.graph.edge_count() == m - 1;
    for (std::size_t k = 0; k + 1 < m; ++k) path = path && rep.graph.adjacent(k, k + 1);
    c.expect(path, tag + "dual graph of in I is the path p_1 - ... - p_m");
    c.equal(dual_graph_monomial(in).diameter, ExtendedNat(static_cast<std::int64_t>(m - 1)), tag + "diam(in I)");

    auto single = dual_graph_from_primes(primes_of(load("data/determinantal_m" + std::to_string(m) + "_prime.txt")));
    c.equal(single.diameter, ExtendedNat(0), tag + "diam(I)");
  }
}

void criterion_hypercube(Checker& c) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto tag = "n=" + std::to_string(n) + " ";
    const auto start = Clock::now();
    auto ring = make_indexed_ring(2 * n);
    std::vector<Monomial> gens;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<int> e(2 * n, 0);
      e[i] = e[n + i] = 1;
      gens.emplace_back(e);
    }
    MonomialIdeal ideal(ring, gens);
    auto rep = dual_graph_monomial(ideal);
    const double elapsed = seconds_since(start);

    c.equal(rep.graph.size(), std::size_t{1} << n, tag + "prime count");
    std::vector<std::uint32_t> masks;
    for (const auto& v : rep.vertices) {
      std::uint32_t mask = 0;
      for (const auto& g : v.generators) {
        const auto idx = std::stoul(g.substr(1)) - 1;
        if (idx >= n) mask |= 1u << (idx - n);
      }
      masks.push_back(mask);
    }
    c.equal(std::set<std::uint32_t>(masks.begin(), masks.end()).size(), masks.size(), tag + "distinct x/y choices");
    bool cube = true;
    for (std::size_t u = 0; u < masks.size(); ++u)
      for (std::size_t v = u + 1; v < masks.size(); ++v)
        cube = cube && rep.graph.adjacent(u, v) == (std::popcount(masks[u] ^ masks[v]) == 1);
    c.expect(cube, tag + "edges join choices at Hamming distance 1");
    c.equal(rep.height, n, tag + "height");
    c.equal(rep.diameter, ExtendedNat(static_cast<std::int64_t>(n)), tag + "diameter");
    c.expect(rep.hirsch == HirschVerdict::yes, tag + "Hirsch");
    if (n == 6) c.expect(elapsed < kHypercubeSeconds, "n=6 runtime " + std::to_string(elapsed) + " s");
  }
}

void criterion_calculators(Checker& c) {
  for (std::int64_t k = 1; k <= 20; ++k) {
    const std::vector<std::int64_t> three{1, k, 1}, four{1, k, k, 1};
    const auto b3 = gorenstein_hvec_bound(three), b4 = gorenstein_hvec_bound(four);
    c.equal(b3, k / 2 + 1, "(1," + std::to_string(k) + ",1)");
    c.equal(b4, 2 * k / 3 + 1, "(1,c,c,1) at c=" + std::to_string(k));
    if (k >= 2) c.expect(b3 <= k, "(1,c,1) bound <= c at c=" + std::to_string(k));
    if (k >= 3) c.expect(b4 <= k, "(1,c,c,1) bound <= c at c=" + std::to_string(k));
  }
  c.equal(gorenstein_hvec_bound(std::vector<std::int64_t>{1, 5, 9, 5, 1}), 5, "(1,5,9,5,1)");
  for (auto [height, e, r, bound] : {std::array<std::int64_t, 4>{4, 16, 4, 4}, {5, 32, 5, 7}}) {
    const std::vector<std::int64_t> degrees(static_cast<std::size_t>(height), 2);
    const auto tag = "quadratic CI height " + std::to_string(height) + " ";
    c.equal(ci_multiplicity(degrees), e, tag + "e");
    c.equal(ci_regularity(degrees), r, tag + "r");
    c.equal(rw_bound(ci_multiplicity(degrees), ci_regularity(degrees)), bound, tag + "bound");
    std::vector<std::string> args{"bounds", "--ci-degrees"};
    std::string list;
    for (auto d : degrees) list += (list.empty() ? "" : ",") + std::to_string(d);
    args.push_back(list);
    auto j = cli(c, args);
    c.equal(j["ci"]["bound"], bound, tag + "cli bound");
  }
}

std::vector<IdealPresentation> example_ideals() {
  std::vector<IdealPresentation> out;
  for (auto name : {"complete_intersection", "determinantal_m3", "determinantal_m4", "determinantal_m5",
                    "diagonal_minors_2x4", "quadric", "hypercube_n3"}) {
    auto doc = load("data/" + std::string(name) + ".txt");
    out.push_back(std::get<io::GensBlock>(doc.blocks.at(0)).ideal);
  }
  for (auto name : {"complete_intersection_primes", "disconnected", "path_primes_m3"}) {
    auto list = primes_of(load("data/" + std::string(name) + ".txt"));
    for (const auto& p : list.primes) out.push_back(p);
    out.push_back(ideal_intersection(list.primes[0], list.primes[1]));
  }
  return out;
}

void criterion_properties(Checker& c) {
  const auto start = Clock::now();
  Rng rng(20240601);

  std::size_t sound_checked = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const auto s = static_cast<std::size_t>(uniform(rng, 1, 8));
    auto g = random_graph(rng, s, std::uniform_real_distribution<double>(0.15, 0.95)(rng), 6);
    const auto tag = "(a) graph " + std::to_string(trial) + " ";
    auto brute = brute_connectivity(g);
    auto prof = connectivity_profile(g);
    c.equal(prof.connected, brute.connected, tag + "connected");
    c.equal(prof.vertex_connectivity, brute.vertex, tag + "vertex connectivity");
    c.equal(prof.weighted_connectivity, brute.weighted, tag + "weighted connectivity");
    const auto d = diameter(g);
    c.equal(d, brute_diameter(g), tag + "diameter");
    if (!prof.connected || s < 2) continue;
    for (const auto& b : graph_bounds(g)) {
      if (!b.applicable || !b.value) continue;
      ++sound_checked;
      c.expect(d.value() <= *b.value, "(b) graph " + std::to_string(trial) + " " + b.name + " bound");
    }
  }
  c.expect(sound_checked > 300, "(b) enough applicable bounds: " + std::to_string(sound_checked));

  for (int trial = 0; trial < 200; ++trial) {
    auto ring = make_indexed_ring(static_cast<std::size_t>(uniform(rng, 1, 8)));
    auto ideal = random_monomial_ideal(rng, ring, uniform(rng, 1, 7), 3, 4);
    c.expect(minimal_primes(ideal) == brute_minimal_primes(ideal), "(c) ideal " + ideal.to_string());
  }

  for (const auto& ideal : example_ideals()) {
    for (auto ord : {TermOrder::lex(), TermOrder::deglex(), TermOrder::degrevlex()}) {
      auto base = buchberger(ideal, ord);
      for (int trial = 0; trial < 3; ++trial) {
        std::vector<Polynomial> gens(ideal.generators().begin(), ideal.generators().end());
        std::shuffle(gens.begin(), gens.end(), rng);
        for (auto& g : gens) g = g.scale(Rational(uniform(rng, 1, 9), uniform(rng, 1, 9)));
        auto again = buchberger(IdealPresentation(ideal.ring(), gens), ord);
        c.expect(again.elements == base.elements, "(d) shuffle under " + ord.name());
      }
    }
  }

  std::vector<MonomialIdeal> hilbert_cases;
  for (const auto& ideal : example_ideals()) hilbert_cases.push_back(initial_ideal(ideal, TermOrder::degrevlex()));
  for (int trial = 0; trial < 100; ++trial) {
    auto ring = make_indexed_ring(static_cast<std::size_t>(uniform(rng, 1, 6)));
    hilbert_cases.push_back(random_monomial_ideal(rng, ring, uniform(rng, 1, 5), 3, 3));
  }
  for (const auto& ideal : hilbert_cases) {
    auto h = hilbert(ideal);
    for (int d = 0; d <= 8; ++d)
      c.equal(series_coefficient(h, d), standard_monomials(ideal, d), "(e) " + ideal.to_string() + " degree " +
                                                                          std::to_string(d));
  }

  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(uniform(rng, 2, 6));
    auto family = random_prime_family(rng, n, static_cast<std::size_t>(uniform(rng, 1, 5)));
    auto ring = make_indexed_ring(n);
    PrimeList list{ring, {}, TermOrder::lex()};
    for (const auto& vars : family) list.primes.push_back(variable_prime(ring, vars));
    const auto tag = "(f) family " + std::to_string(trial) + " ";
    auto rec = verify_comp(list);
    c.expect(rec.hypothesis_holds, tag + "square-free hypothesis");
    c.expect(rec.initial_commutes_with_intersection, tag + "in commutes with intersection");
    c.expect(rec.initial_commutes_with_sum, tag + "in commutes with sum");
    c.expect(rec.diam_ideal <= rec.diam_initial, tag + "diam(I) <= diam(in I)");
  }

  const double elapsed = seconds_since(start);
  c.expect(elapsed < kPropertySeconds, "property suite runtime " + std::to_string(elapsed) + " s");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Checker&)>>> criteria{
      {"star example bounds and connectivity", criterion_star},
      {"five-variable complete intersection dual graph", criterion_example2},
      {"disconnection under the initial ideal", criterion_disconnection},
      {"determinantal ideals, m = 3, 4, 5", criterion_determinantal},
      {"square-free complete intersections are cubes, n <= 6", criterion_hypercube},
      {"bound calculators", criterion_calculators},
      {"property suites", criterion_properties},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Checker c;
    const auto start = Clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << i + 1 << ": " << (c.ok() ? "PASS" : "FAIL") << "  " << criteria[i].first << " ("
              << c.checks() << " checks, " << std::fixed << std::setprecision(2) << seconds_since(start) << " s)\n";
    for (const auto& f : c.failures()) std::cout << "    " << f << "\n";
    all = all && c.ok();
  }
  std::cout << (all ? "ALL PASS" : "SOME FAILED") << "\n";
  return all ? 0 : 1;
}
