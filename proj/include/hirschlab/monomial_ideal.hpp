#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hirschlab/monomial.hpp"
#include "hirschlab/ring.hpp"
#include "hirschlab/weighted_graph.hpp"

namespace hirschlab {

inline constexpr std::size_t kDefaultPrimeCap = 100000;

/// Monomial ideal held by its minimal generating set, sorted by decreasing
/// degrevlex. The zero ideal has no generators; the unit ideal has the
/// single generator 1.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(RingPtr ring) : ring_(std::move(ring)) {}
  /// Minimalizes the given monomials.
  MonomialIdeal(RingPtr ring, std::span<const Monomial> monomials);

  const RingPtr& ring() const noexcept { return ring_; }
  std::span<const Monomial> gens() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return gens_.size() == 1 && gens_[0].is_one(); }
  bool contains(const Monomial& m) const;

  bool operator==(const MonomialIdeal& o) const {
    return same_ring(ring_, o.ring_) && gens_ == o.gens_;
  }

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Monomial> gens_;
};

/// Variable-generated prime, variables kept sorted. Ordered by
/// (cardinality, lexicographic variable list).
struct MonomialPrime {
  std::vector<std::size_t> vars;

  std::size_t height() const noexcept { return vars.size(); }
  bool operator==(const MonomialPrime&) const = default;
  std::strong_ordering operator<=>(const MonomialPrime& o) const {
    if (vars.size() != o.vars.size()) return vars.size() <=> o.vars.size();
    return vars <=> o.vars;
  }
  std::string to_string(const PolyRing& ring) const;
};

struct HilbertData {
  /// h(t), with H_{S/I}(t) = h(t) / (1 - t)^dim.
  std::vector<std::int64_t> numerator;
  /// K(t), with H_{S/I}(t) = K(t) / (1 - t)^n.
  std::vector<std::int64_t> raw_numerator;
  std::size_t dim = 0;
  std::int64_t multiplicity = 0;
};

MonomialIdeal minimalize(RingPtr ring, std::span<const Monomial> monomials);
bool is_squarefree(const MonomialIdeal& ideal);
MonomialIdeal radical(const MonomialIdeal& ideal);

/// Minimal transversals of the generator supports, sorted by MonomialPrime
/// order. Throws ImproperIdeal for the unit ideal, std::invalid_argument for
/// the zero ideal, CapExceeded past `cap` primes. Rings are limited to 64
/// variables.
std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& ideal,
                                          std::size_t cap = kDefaultPrimeCap);
/// 0 for the zero ideal; ImproperIdeal for the unit ideal.
std::size_t height(const MonomialIdeal& ideal, std::size_t cap = kDefaultPrimeCap);

MonomialIdeal monomial_intersection(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal monomial_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal colon_by_monomial(const MonomialIdeal& ideal, const Monomial& m);
MonomialIdeal prime_ideal(RingPtr ring, const MonomialPrime& prime);

HilbertData hilbert(const MonomialIdeal& ideal);

/// Facet-ridge graph of a pure complex given by its facets: vertices are the
/// facets in input order, edges join facets sharing all but one vertex.
/// Throws std::invalid_argument if the facets have different sizes.
WeightedGraph facets_to_dual_graph(std::span<const std::vector<std::size_t>> facets);

/// Stanley-Reisner ideal of the complex generated by `facets` on vertex set
/// {0..n-1}: generated by the minimal non-faces.
MonomialIdeal stanley_reisner_ideal(RingPtr ring, std::span<const std::vector<std::size_t>> facets);

}  // namespace hirschlab
