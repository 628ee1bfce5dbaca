#include "hirschlab/ring.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace hirschlab {

namespace {

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

CoefficientField CoefficientField::prime_field(unsigned long p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  }
  return CoefficientField(p);
}

Rational CoefficientField::normalize(Rational value) const {
  value.canonicalize();
  if (p_ == 0) return value;
  mpz_class p(p_);
  mpz_class num = value.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = value.get_den() % p;
  if (den == 0) throw std::domain_error("denominator vanishes in " + to_string());
  if (den != 1) {
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    num = (num * inv) % p;
  }
  return Rational(num);
}

Rational CoefficientField::inverse(const Rational& value) const {
  if (value == 0) throw std::domain_error("inverse of zero");
  if (p_ == 0) return Rational(1) / value;
  mpz_class p(p_);
  mpz_class a = normalize(value).get_num();
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
  return Rational(inv);
}

std::string CoefficientField::to_string() const {
  return p_ == 0 ? "QQ" : "GF(" + std::to_string(p_) + ")";
}

PolyRing::PolyRing(std::vector<std::string> names, CoefficientField field)
    : names_(std::move(names)), field_(field) {
  if (names_.empty()) throw std::invalid_argument("a polynomial ring needs at least one variable");
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name '" + n + "'");
  }
}

std::optional<std::size_t> PolyRing::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

RingPtr make_ring(std::vector<std::string> names, CoefficientField field) {
  return std::make_shared<const PolyRing>(std::move(names), field);
}

RingPtr make_indexed_ring(std::size_t n, const std::string& prefix, CoefficientField field) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
  return make_ring(std::move(names), field);
}

std::string rational_to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

}  // namespace hirschlab
