#include "hirschlab/term_order.hpp"

#include <stdexcept>

namespace hirschlab {

namespace {

std::strong_ordering lex_compare(std::span<const int> a, std::span<const int> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

// Among equal degrees, the larger monomial has the smaller exponent in the
// last variable where they differ.
std::strong_ordering revlex_tiebreak(std::span<const int> a, std::span<const int> b) {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering base_compare(OrderKind kind, const Monomial& a, const Monomial& b) {
  switch (kind) {
    case OrderKind::lex:
      return lex_compare(a.exponents(), b.exponents());
    case OrderKind::deglex:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      return lex_compare(a.exponents(), b.exponents());
    case OrderKind::degrevlex:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      return revlex_tiebreak(a.exponents(), b.exponents());
    case OrderKind::elimination:
      break;
  }
  throw std::logic_error("elimination cannot be a base order");
}

}  // namespace

TermOrder TermOrder::elimination(std::size_t prefix, OrderKind base) {
  if (base == OrderKind::elimination) throw std::invalid_argument("nested elimination order");
  TermOrder o(OrderKind::elimination);
  o.base_ = base;
  o.prefix_ = prefix;
  return o;
}

TermOrder TermOrder::from_name(const std::string& name) {
  if (name == "lex") return lex();
  if (name == "deglex") return deglex();
  if (name == "degrevlex") return degrevlex();
  throw std::invalid_argument("unknown term order '" + name + "'");
}

std::string TermOrder::name() const {
  auto base_name = [](OrderKind k) -> std::string {
    switch (k) {
      case OrderKind::lex: return "lex";
      case OrderKind::deglex: return "deglex";
      case OrderKind::degrevlex: return "degrevlex";
      case OrderKind::elimination: return "elimination";
    }
    return "?";
  };
  if (kind_ != OrderKind::elimination) return base_name(kind_);
  return "elimination(" + std::to_string(prefix_) + "," + base_name(base_) + ")";
}

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != b.size()) throw std::invalid_argument("monomials from rings of different size");
  if (kind_ != OrderKind::elimination) return base_compare(kind_, a, b);
  if (prefix_ > a.size()) throw std::invalid_argument("elimination block longer than the ring");
  int da = 0;
  int db = 0;
  for (std::size_t i = 0; i < prefix_; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da <=> db;
  return base_compare(base_, a, b);
}

}  // namespace hirschlab
