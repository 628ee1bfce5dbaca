#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hirschlab/monomial_ideal.hpp"
#include "hirschlab/polynomial.hpp"
#include "hirschlab/term_order.hpp"

namespace hirschlab {

/// An ideal given by a nonempty list of nonzero generators.
class IdealPresentation {
 public:
  /// Throws std::invalid_argument on an empty list or a zero generator,
  /// RingMismatch if generators live in different rings.
  IdealPresentation(RingPtr ring, std::vector<Polynomial> generators);

  const RingPtr& ring() const noexcept { return ring_; }
  std::span<const Polynomial> generators() const noexcept { return gens_; }
  bool is_homogeneous() const;
  bool is_monomial() const;

  /// Concatenated presentation of this + other.
  IdealPresentation operator+(const IdealPresentation& other) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
};

struct GroebnerBasis {
  TermOrder order;
  /// Monic, sorted by increasing leading monomial under `order`.
  std::vector<Polynomial> elements;
  bool reduced = false;

  bool contains_unit() const;
  std::vector<Monomial> leading_monomials() const;
};

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& ord);

/// Full reduction: always reduces the greatest reducible term by the first
/// basis element (in sequence order) whose leading monomial divides it.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis, const TermOrder& ord);

/// Reduced Groebner basis by Buchberger's algorithm with the normal selection
/// strategy (pairs by lcm under ord, ties by creation index) and both the
/// product and chain criteria.
///
/// When the environment variable HIRSCHLAB_VERIFY_GB is set to 1 every
/// result is re-checked (all S-polynomials reduce to zero, generators reduce
/// to zero) and an InvariantViolation is thrown on failure.
GroebnerBasis buchberger(const IdealPresentation& ideal, const TermOrder& ord);

/// True iff every S-polynomial of `basis` has normal form 0 modulo it.
bool is_groebner_basis(std::span<const Polynomial> basis, const TermOrder& ord);

/// Minimalized leading monomials of the reduced basis (the unit ideal when
/// the ideal is improper).
MonomialIdeal initial_ideal(const IdealPresentation& ideal, const TermOrder& ord);
MonomialIdeal initial_ideal(const GroebnerBasis& basis, const RingPtr& ring);

/// Generators of a intersected with b via elimination of an auxiliary
/// variable ranked above all others.
IdealPresentation ideal_intersection(const IdealPresentation& a, const IdealPresentation& b);

/// Height of the initial ideal; throws ImproperIdeal if 1 is in the ideal.
std::size_t height_via_initial(const IdealPresentation& ideal, const TermOrder& ord);
std::size_t height_via_initial(const GroebnerBasis& basis, const RingPtr& ring);

/// Both ideals contain each other's generators.
bool same_ideal(const IdealPresentation& a, const IdealPresentation& b,
                const TermOrder& ord = TermOrder::degrevlex());

}  // namespace hirschlab
