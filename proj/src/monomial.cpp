#include "hirschlab/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "hirschlab/ring.hpp"

namespace hirschlab {

namespace {

void check_sizes(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw std::invalid_argument("monomials from rings of different size");
}

}  // namespace

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    degree_ += e;
  }
}

Monomial Monomial::variable(std::size_t n, std::size_t index, int power) {
  std::vector<int> e(n, 0);
  e.at(index) = power;
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  check_sizes(*this, other);
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e <= 1; });
}

bool Monomial::coprime(const Monomial& other) const {
  check_sizes(*this, other);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > 0 && other.exps_[i] > 0) return false;
  }
  return true;
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > 0) s.push_back(i);
  }
  return s;
}

Monomial Monomial::radical() const {
  std::vector<int> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] > 0 ? 1 : 0;
  return Monomial(std::move(e));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  check_sizes(a, b);
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
  r.degree_ += b.degree_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  if (!b.divides(a)) throw std::invalid_argument("monomial division is not exact");
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] -= b.exps_[i];
  r.degree_ -= b.degree_;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  check_sizes(a, b);
  std::vector<int> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exps_[i], b.exps_[i]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  check_sizes(a, b);
  std::vector<int> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a.exps_[i], b.exps_[i]);
  return Monomial(std::move(e));
}

std::string Monomial::to_string(const PolyRing& ring) const {
  if (exps_.size() != ring.nvars()) throw std::invalid_argument("monomial does not match ring");
  if (is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out;
}

}  // namespace hirschlab
