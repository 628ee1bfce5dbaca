#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hirschlab {

using Rational = mpq_class;

/// Either the rationals or Z/p. Elements of Z/p are carried as integer-valued
/// Rationals in [0, p).
class CoefficientField {
 public:
  static CoefficientField rationals() { return CoefficientField(0); }
  /// Throws std::invalid_argument unless p is prime.
  static CoefficientField prime_field(unsigned long p);

  bool is_rationals() const noexcept { return p_ == 0; }
  unsigned long characteristic() const noexcept { return p_; }

  /// Canonical representative: lowest terms over Q, residue in [0, p) over Z/p.
  /// Throws std::domain_error if a denominator is divisible by p.
  Rational normalize(Rational value) const;
  Rational inverse(const Rational& value) const;

  std::string to_string() const;
  bool operator==(const CoefficientField&) const = default;

 private:
  explicit CoefficientField(unsigned long p) : p_(p) {}
  unsigned long p_;
};

class PolyRing {
 public:
  PolyRing(std::vector<std::string> names, CoefficientField field);

  std::size_t nvars() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const CoefficientField& field() const noexcept { return field_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  bool operator==(const PolyRing&) const = default;

 private:
  std::vector<std::string> names_;
  CoefficientField field_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> names,
                  CoefficientField field = CoefficientField::rationals());
/// Ring with variables x1..xn.
RingPtr make_indexed_ring(std::size_t n, const std::string& prefix = "x",
                          CoefficientField field = CoefficientField::rationals());

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

std::string rational_to_string(const Rational& q);

}  // namespace hirschlab
