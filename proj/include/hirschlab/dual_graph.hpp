#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hirschlab/bounds.hpp"
#include "hirschlab/extended.hpp"
#include "hirschlab/groebner.hpp"
#include "hirschlab/monomial_ideal.hpp"
#include "hirschlab/weighted_graph.hpp"

namespace hirschlab {

inline constexpr std::size_t kDefaultSubsetCap = 12;

enum class HirschVerdict { yes, no, undefined_disconnected };
std::string to_string(HirschVerdict verdict);

/// Primes of an ideal as supplied by the caller. Primality is not checked.
struct PrimeList {
  RingPtr ring;
  std::vector<IdealPresentation> primes;
  TermOrder order = TermOrder::lex();
};

PrimeList prime_list_from_monomial(const MonomialIdeal& ideal, const TermOrder& order = TermOrder::lex(),
                                   std::size_t cap = kDefaultPrimeCap);

struct BoundEntry {
  std::string name;
  std::optional<std::int64_t> value;
  bool applicable = false;
  std::string detail;
};

struct DualVertex {
  std::vector<std::string> generators;
  std::size_t height = 0;
};

struct DualGraphReport {
  std::vector<DualVertex> vertices;
  WeightedGraph graph;
  std::size_t height = 0;
  bool unmixed = true;
  ExtendedNat diameter;
  HirschVerdict hirsch = HirschVerdict::yes;
  std::vector<BoundEntry> bounds;
  std::vector<std::string> warnings;
  /// Hypotheses the tool records but does not verify.
  std::vector<std::string> disclaimers;
};

HirschVerdict hirsch_verdict(const ExtendedNat& diameter, std::size_t height);

/// Menger, weighted and prefix-refined bounds for a graph, using its own
/// vertex and weighted connectivity.
std::vector<BoundEntry> graph_bounds(const WeightedGraph& g);

/// Dual graph of a monomial ideal from its minimal primes. Throws
/// ImproperIdeal, CapExceeded.
DualGraphReport dual_graph_monomial(const MonomialIdeal& ideal, std::size_t prime_cap = kDefaultPrimeCap);

/// Dual graph of the intersection of the supplied primes, vertices in input
/// order. Heights come from initial ideals under P.order.
DualGraphReport dual_graph_from_primes(const PrimeList& primes, bool use_multiplicity_weights = false);

/// e(S/p_i) for each prime, via the Hilbert series of its initial ideal.
std::vector<std::int64_t> multiplicity_weights(const PrimeList& primes);

struct DegReport {
  std::int64_t reg = 0;
  std::vector<std::int64_t> weights;
  std::int64_t multiplicity = 0;
  std::int64_t deg_bound = 0;
  std::int64_t l = 0;
  std::optional<PrefixProfile> profile;
  std::optional<RefinedBound> refined;
  ExtendedNat diameter;
  ExtendedNat weighted_connectivity;
  bool rw_connected = false;
  /// rw_connected and the diameter respects every computed bound. A false
  /// value points at a false hypothesis (reduced, Gorenstein, reg), not a bug.
  bool consistent = false;
  std::vector<std::string> disclaimers;
};

/// Weighted-bound report for a dual graph whose weights are multiplicities.
DegReport theorem_deg_report(const WeightedGraph& weighted_dual_graph, std::int64_t reg);
DegReport theorem_deg_report(const PrimeList& primes, std::int64_t reg);

/// d_1 + ... + d_c - c.
std::int64_t ci_regularity(std::span<const std::int64_t> degrees);
/// d_1 * ... * d_c.
std::int64_t ci_multiplicity(std::span<const std::int64_t> degrees);
/// rw_bound(sum h, len h - 1) for a symmetric h-vector with h_0 = 1; 1 when
/// the regularity is 0. Throws std::invalid_argument otherwise.
std::int64_t gorenstein_hvec_bound(std::span<const std::int64_t> hvec);

struct CompRecord {
  std::size_t subsets_checked = 0;
  bool hypothesis_holds = true;
  /// 1-based subsets whose intersection has a non-square-free initial ideal.
  std::vector<std::vector<std::size_t>> failing_subsets;
  MonomialIdeal initial_of_intersection;
  ExtendedNat diam_ideal;
  ExtendedNat diam_initial;
  bool inequality_holds = false;
  /// in(intersection over A) equals the intersection of the in(p_i), every A.
  bool initial_commutes_with_intersection = false;
  /// in(p_i + p_j) equals in(p_i) + in(p_j), every pair.
  bool initial_commutes_with_sum = false;
};

/// Checks the square-free hypothesis on every subset intersection and
/// compares diam(I) with diam(in I). Throws CapExceeded beyond `subset_cap`
/// primes and InvariantViolation if the hypothesis holds but the conclusion
/// does not.
CompRecord verify_comp(const PrimeList& primes, std::size_t subset_cap = kDefaultSubsetCap);

struct CiCertificate {
  bool positive = false;
  std::size_t basis_size = 0;
  std::size_t height = 0;
  bool squarefree = false;
  bool pairwise_coprime = false;
  MonomialIdeal initial;
};

/// Positive iff the reduced basis has height-many elements and the initial
/// ideal is generated by pairwise coprime square-free monomials; the ideal
/// is then Hirsch. Throws ImproperIdeal.
CiCertificate certify_squarefree_ci(const IdealPresentation& ideal, const TermOrder& ord);

}  // namespace hirschlab
