#pragma once

#include <span>
#include <string>
#include <vector>

#include "hirschlab/monomial.hpp"
#include "hirschlab/ring.hpp"
#include "hirschlab/term_order.hpp"

namespace hirschlab {

struct Term {
  Monomial monomial;
  Rational coeff;

  bool operator==(const Term&) const = default;
};

/// Immutable multivariate polynomial over a PolyRing.
///
/// Terms are stored with nonzero, field-normalized coefficients in
/// decreasing lexicographic order of exponents. That storage order is an
/// implementation detail; anything order-dependent takes a TermOrder.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial from_monomial(RingPtr ring, Monomial m, const Rational& c = 1);
  /// Combines like terms and drops zeros; terms may arrive in any order.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const noexcept { return ring_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  int total_degree() const;
  bool is_homogeneous() const;

  /// Throws std::invalid_argument on the zero polynomial.
  Term leading_term(const TermOrder& ord) const;
  Monomial leading_monomial(const TermOrder& ord) const { return leading_term(ord).monomial; }
  /// Terms sorted by decreasing ord.
  std::vector<Term> sorted_terms(const TermOrder& ord) const;

  Polynomial scale(const Rational& c) const;
  Polynomial mul_term(const Monomial& m, const Rational& c) const;
  /// Divides by the leading coefficient under ord.
  Polynomial monic(const TermOrder& ord) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);

  bool operator==(const Polynomial& o) const;

  /// Terms in decreasing ord, e.g. "x^2 - 1/2*y + 3".
  std::string to_string(const TermOrder& ord = TermOrder::lex()) const;

 private:
  Polynomial(RingPtr ring, std::vector<Term> sorted_terms);

  RingPtr ring_;
  std::vector<Term> terms_;
};

enum class ArithOp { add, mul, scale };

/// Dispatching form of the arithmetic operators. `c` is used only for scale.
Polynomial poly_arith(const Polynomial& f, const Polynomial& g, ArithOp op, const Rational& c = 1);

}  // namespace hirschlab
