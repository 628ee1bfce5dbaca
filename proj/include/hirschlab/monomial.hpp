#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace hirschlab {

class PolyRing;

/// Exponent vector with cached total degree. The built-in ordering
/// (operator<=>) is plain lexicographic on exponents and serves as the
/// canonical storage order; term orders live in TermOrder.
class Monomial {
 public:
  Monomial() = default;
  /// The monomial 1 in n variables.
  explicit Monomial(std::size_t n) : exps_(n, 0) {}
  explicit Monomial(std::vector<int> exponents);

  static Monomial variable(std::size_t n, std::size_t index, int power = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  std::span<const int> exponents() const noexcept { return exps_; }
  int degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  bool is_squarefree() const;
  bool coprime(const Monomial& other) const;
  std::vector<std::size_t> support() const;
  /// Product of the variables in the support.
  Monomial radical() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; throws std::invalid_argument if b does not divide a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  std::strong_ordering operator<=>(const Monomial& o) const { return exps_ <=> o.exps_; }

  std::string to_string(const PolyRing& ring) const;

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

}  // namespace hirschlab
