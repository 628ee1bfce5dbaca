#pragma once

#include <compare>
#include <cstddef>
#include <string>

#include "hirschlab/monomial.hpp"

namespace hirschlab {

enum class OrderKind { lex, deglex, degrevlex, elimination };

/// Monomial order with x1 > x2 > ... > xn. The elimination kind ranks any
/// monomial with a larger degree in the first `prefix` variables above the
/// rest, and breaks ties with a base order on the whole exponent vector.
class TermOrder {
 public:
  constexpr TermOrder() = default;

  static constexpr TermOrder lex() { return TermOrder(OrderKind::lex); }
  static constexpr TermOrder deglex() { return TermOrder(OrderKind::deglex); }
  static constexpr TermOrder degrevlex() { return TermOrder(OrderKind::degrevlex); }
  static TermOrder elimination(std::size_t prefix, OrderKind base = OrderKind::degrevlex);
  /// Accepts "lex", "deglex", "degrevlex".
  static TermOrder from_name(const std::string& name);

  OrderKind kind() const noexcept { return kind_; }
  OrderKind base() const noexcept { return base_; }
  std::size_t prefix() const noexcept { return prefix_; }
  std::string name() const;

  /// Throws std::invalid_argument on mismatched lengths.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  bool operator==(const TermOrder&) const = default;

 private:
  constexpr explicit TermOrder(OrderKind kind) : kind_(kind), base_(kind) {}

  OrderKind kind_ = OrderKind::lex;
  OrderKind base_ = OrderKind::lex;
  std::size_t prefix_ = 0;
};

inline std::strong_ordering compare(const Monomial& a, const Monomial& b, const TermOrder& ord) {
  return ord.compare(a, b);
}

}  // namespace hirschlab
