#include "hirschlab/polynomial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hirschlab/errors.hpp"

namespace hirschlab {

namespace {

void check_ring(const Polynomial& f, const Polynomial& g) {
  if (!same_ring(f.ring(), g.ring())) throw RingMismatch();
}

// Merges two descending-lex term lists, adding coefficients (g scaled by sign).
std::vector<Term> merge(std::span<const Term> f, std::span<const Term> g, bool subtract,
                        const CoefficientField& field) {
  std::vector<Term> out;
  out.reserve(f.size() + g.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < f.size() || j < g.size()) {
    if (j == g.size() || (i < f.size() && f[i].monomial > g[j].monomial)) {
      out.push_back(f[i++]);
    } else if (i == f.size() || g[j].monomial > f[i].monomial) {
      out.push_back({g[j].monomial, subtract ? field.normalize(-g[j].coeff) : g[j].coeff});
      ++j;
    } else {
      Rational c = subtract ? Rational(f[i].coeff - g[j].coeff) : Rational(f[i].coeff + g[j].coeff);
      c = field.normalize(c);
      if (c != 0) out.push_back({f[i].monomial, c});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("null ring");
}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> sorted_terms)
    : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  Monomial one(ring->nvars());
  return from_monomial(std::move(ring), std::move(one), c);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  auto n = ring->nvars();
  return from_monomial(std::move(ring), Monomial::variable(n, index));
}

Polynomial Polynomial::from_monomial(RingPtr ring, Monomial m, const Rational& c) {
  std::vector<Term> t;
  t.push_back({std::move(m), c});
  return from_terms(std::move(ring), std::move(t));
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  if (!ring) throw std::invalid_argument("null ring");
  std::map<Monomial, Rational, std::greater<>> acc;
  for (auto& t : terms) {
    if (t.monomial.size() != ring->nvars()) {
      throw std::invalid_argument("term has the wrong number of variables");
    }
    acc[t.monomial] += t.coeff;
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    Rational n = ring->field().normalize(c);
    if (n != 0) out.push_back({m, std::move(n)});
  }
  return Polynomial(std::move(ring), std::move(out));
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

int Polynomial::total_degree() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) {
    return t.monomial.degree() == terms_.front().monomial.degree();
  });
}

Term Polynomial::leading_term(const TermOrder& ord) const {
  if (terms_.empty()) throw std::invalid_argument("leading term of the zero polynomial");
  if (ord.kind() == OrderKind::lex) return terms_.front();
  const Term* best = &terms_.front();
  for (const auto& t : terms_) {
    if (ord.greater(t.monomial, best->monomial)) best = &t;
  }
  return *best;
}

std::vector<Term> Polynomial::sorted_terms(const TermOrder& ord) const {
  std::vector<Term> t = terms_;
  if (ord.kind() != OrderKind::lex) {
    std::sort(t.begin(), t.end(),
              [&](const Term& a, const Term& b) { return ord.greater(a.monomial, b.monomial); });
  }
  return t;
}

Polynomial Polynomial::scale(const Rational& c) const {
  const auto& field = ring_->field();
  Rational k = field.normalize(c);
  if (k == 0) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.monomial, field.normalize(t.coeff * k)});
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& c) const {
  const auto& field = ring_->field();
  Rational k = field.normalize(c);
  if (k == 0) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  // Multiplying by a monomial preserves lexicographic order.
  for (const auto& t : terms_) out.push_back({t.monomial * m, field.normalize(t.coeff * k)});
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::monic(const TermOrder& ord) const {
  if (is_zero()) return *this;
  return scale(ring_->field().inverse(leading_term(ord).coeff));
}

Polynomial Polynomial::operator-() const { return scale(-1); }

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  check_ring(f, g);
  return Polynomial(f.ring_, merge(f.terms_, g.terms_, false, f.ring_->field()));
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) {
  check_ring(f, g);
  return Polynomial(f.ring_, merge(f.terms_, g.terms_, true, f.ring_->field()));
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  check_ring(f, g);
  std::vector<Term> prod;
  prod.reserve(f.size() * g.size());
  for (const auto& a : f.terms_) {
    for (const auto& b : g.terms_) prod.push_back({a.monomial * b.monomial, a.coeff * b.coeff});
  }
  return Polynomial::from_terms(f.ring_, std::move(prod));
}

bool Polynomial::operator==(const Polynomial& o) const {
  return same_ring(ring_, o.ring_) && terms_ == o.terms_;
}

std::string Polynomial::to_string(const TermOrder& ord) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : sorted_terms(ord)) {
    Rational c = t.coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.monomial.is_one()) {
      out += rational_to_string(c);
    } else {
      if (c != 1) out += rational_to_string(c) + "*";
      out += t.monomial.to_string(*ring_);
    }
  }
  return out;
}

Polynomial poly_arith(const Polynomial& f, const Polynomial& g, ArithOp op, const Rational& c) {
  switch (op) {
    case ArithOp::add: return f + g;
    case ArithOp::mul: return f * g;
    case ArithOp::scale: check_ring(f, g); return f.scale(c);
  }
  throw std::logic_error("unknown arithmetic op");
}

}  // namespace hirschlab
