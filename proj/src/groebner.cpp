#include "hirschlab/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <string_view>

#include "hirschlab/errors.hpp"

namespace hirschlab {

namespace {

// A polynomial with its terms in decreasing order under a fixed term order.
// Reduction works on this form so leading terms are always at the front.
struct OrderedPoly {
  std::vector<Term> terms;

  bool is_zero() const { return terms.empty(); }
  const Monomial& lm() const { return terms.front().monomial; }
  const Rational& lc() const { return terms.front().coeff; }
};

OrderedPoly to_ordered(const Polynomial& f, const TermOrder& ord) { return {f.sorted_terms(ord)}; }

Polynomial from_ordered(const RingPtr& ring, std::vector<Term> terms) {
  return Polynomial::from_terms(ring, std::move(terms));
}

// f[f_from..] - c * m * g[g_from..], merged under ord.
std::vector<Term> sub_scaled(std::span<const Term> f, std::span<const Term> g, const Monomial& m,
                             const Rational& c, const TermOrder& ord, const CoefficientField& field) {
  std::vector<Term> out;
  out.reserve(f.size() + g.size());
  std::size_t i = 0;
  std::size_t j = 0;
  auto shifted = [&](std::size_t k) { return g[k].monomial * m; };
  while (i < f.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(f[i++]);
      continue;
    }
    Monomial gm = shifted(j);
    if (i == f.size()) {
      out.push_back({std::move(gm), field.normalize(-c * g[j].coeff)});
      ++j;
      continue;
    }
    auto cmp = ord.compare(f[i].monomial, gm);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back({std::move(gm), field.normalize(-c * g[j].coeff)});
      ++j;
    } else {
      Rational v = field.normalize(f[i].coeff - c * g[j].coeff);
      if (v != 0) out.push_back({f[i].monomial, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

// Divides every coefficient of both lists by the content (gcd of numerators
// over lcm of denominators). Only meaningful over Q.
void remove_content(std::vector<Term>& a, std::vector<Term>& b, std::size_t b_from) {
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  auto visit = [&](const Term& t) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
  };
  for (const auto& t : a) visit(t);
  for (std::size_t k = b_from; k < b.size(); ++k) visit(b[k]);
  if (num_gcd == 0 || (num_gcd == 1 && den_lcm == 1)) return;
  Rational factor(den_lcm, num_gcd);
  factor.canonicalize();
  for (auto& t : a) t.coeff *= factor;
  for (std::size_t k = b_from; k < b.size(); ++k) b[k].coeff *= factor;
}

// Full reduction of f modulo basis. With `scale_freely` the result is only
// determined up to a nonzero constant, which lets the content be stripped
// after every step.
std::vector<Term> reduce(std::vector<Term> p, std::span<const OrderedPoly> basis, const TermOrder& ord,
                         const CoefficientField& field, bool scale_freely) {
  std::vector<Term> remainder;
  std::size_t start = 0;
  while (start < p.size()) {
    const Term& lead = p[start];
    const OrderedPoly* divisor = nullptr;
    for (const auto& b : basis) {
      if (b.lm().divides(lead.monomial)) {
        divisor = &b;
        break;
      }
    }
    if (!divisor) {
      remainder.push_back(lead);
      ++start;
      continue;
    }
    Rational c = field.normalize(lead.coeff * field.inverse(divisor->lc()));
    Monomial m = lead.monomial / divisor->lm();
    p = sub_scaled(std::span<const Term>(p).subspan(start + 1),
                   std::span<const Term>(divisor->terms).subspan(1), m, c, ord, field);
    start = 0;
    if (scale_freely && field.is_rationals()) remove_content(remainder, p, 0);
  }
  return remainder;
}

OrderedPoly make_monic(std::vector<Term> terms, const CoefficientField& field) {
  if (terms.empty()) return {};
  Rational inv = field.inverse(terms.front().coeff);
  for (auto& t : terms) t.coeff = field.normalize(t.coeff * inv);
  return {std::move(terms)};
}

std::vector<Term> spoly_terms(const OrderedPoly& f, const OrderedPoly& g, const TermOrder& ord,
                              const CoefficientField& field) {
  Monomial l = lcm(f.lm(), g.lm());
  Monomial mf = l / f.lm();
  Monomial mg = l / g.lm();
  // (1/lc f) mf f - (1/lc g) mg g; the leading terms cancel.
  Rational inv_f = field.inverse(f.lc());
  std::vector<Term> left;
  left.reserve(f.terms.size());
  for (std::size_t k = 1; k < f.terms.size(); ++k) {
    left.push_back({f.terms[k].monomial * mf, field.normalize(f.terms[k].coeff * inv_f)});
  }
  return sub_scaled(left, std::span<const Term>(g.terms).subspan(1), mg, field.inverse(g.lc()), ord, field);
}

bool verify_enabled() {
  static const bool enabled = [] {
    const char* v = std::getenv("HIRSCHLAB_VERIFY_GB");
    return v != nullptr && std::string_view(v) == "1";
  }();
  return enabled;
}

struct Pair {
  Monomial lcm;
  std::size_t created;
  std::size_t i;
  std::size_t j;
};

}  // namespace

IdealPresentation::IdealPresentation(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), gens_(std::move(generators)) {
  if (gens_.empty()) throw std::invalid_argument("an ideal presentation needs a generator");
  for (const auto& g : gens_) {
    if (!same_ring(ring_, g.ring())) throw RingMismatch();
    if (g.is_zero()) throw std::invalid_argument("zero generator");
  }
}

bool IdealPresentation::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
}

bool IdealPresentation::is_monomial() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_monomial(); });
}

IdealPresentation IdealPresentation::operator+(const IdealPresentation& other) const {
  if (!same_ring(ring_, other.ring_)) throw RingMismatch();
  std::vector<Polynomial> all = gens_;
  all.insert(all.end(), other.gens_.begin(), other.gens_.end());
  return IdealPresentation(ring_, std::move(all));
}

bool GroebnerBasis::contains_unit() const {
  return std::any_of(elements.begin(), elements.end(), [](const Polynomial& p) { return p.is_constant(); });
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> lms;
  for (const auto& p : elements) lms.push_back(p.leading_monomial(order));
  return lms;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& ord) {
  if (!same_ring(f.ring(), g.ring())) throw RingMismatch();
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("S-polynomial of a zero polynomial");
  return from_ordered(f.ring(), spoly_terms(to_ordered(f, ord), to_ordered(g, ord), ord, f.ring()->field()));
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis, const TermOrder& ord) {
  std::vector<OrderedPoly> b;
  b.reserve(basis.size());
  for (const auto& g : basis) {
    if (!same_ring(f.ring(), g.ring())) throw RingMismatch();
    if (g.is_zero()) throw std::invalid_argument("zero polynomial in reduction basis");
    b.push_back(to_ordered(g, ord));
  }
  return from_ordered(f.ring(), reduce(f.sorted_terms(ord), b, ord, f.ring()->field(), false));
}

bool is_groebner_basis(std::span<const Polynomial> basis, const TermOrder& ord) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!normal_form(s_polynomial(basis[i], basis[j], ord), basis, ord).is_zero()) return false;
    }
  }
  return true;
}

GroebnerBasis buchberger(const IdealPresentation& ideal, const TermOrder& ord) {
  const auto& ring = ideal.ring();
  const auto& field = ring->field();
  GroebnerBasis result{ord, {}, true};

  std::vector<OrderedPoly> elems;
  auto pair_less = [&](const Pair& a, const Pair& b) {
    auto c = ord.compare(a.lcm, b.lcm);
    return c != 0 ? c < 0 : a.created < b.created;
  };
  std::set<Pair, decltype(pair_less)> queue(pair_less);
  std::set<std::pair<std::size_t, std::size_t>> pending;
  std::size_t created = 0;
  bool unit = false;

  auto add = [&](OrderedPoly p) {
    if (p.lm().is_one()) unit = true;
    const auto idx = elems.size();
    for (std::size_t k = 0; k < idx; ++k) {
      queue.insert({lcm(elems[k].lm(), p.lm()), created++, k, idx});
      pending.insert({k, idx});
    }
    elems.push_back(std::move(p));
  };

  for (const auto& g : ideal.generators()) {
    add(make_monic(g.sorted_terms(ord), field));
    if (unit) break;
  }

  while (!unit && !queue.empty()) {
    Pair pr = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({pr.i, pr.j});
    const auto& a = elems[pr.i];
    const auto& b = elems[pr.j];
    if (a.lm().coprime(b.lm())) continue;
    bool chain = false;
    for (std::size_t k = 0; k < elems.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j || !elems[k].lm().divides(pr.lcm)) continue;
      chain = !pending.count({std::min(pr.i, k), std::max(pr.i, k)}) &&
              !pending.count({std::min(pr.j, k), std::max(pr.j, k)});
    }
    if (chain) continue;
    auto h = reduce(spoly_terms(a, b, ord, field), elems, ord, field, true);
    if (!h.empty()) add(make_monic(std::move(h), field));
  }

  if (unit) {
    result.elements.push_back(Polynomial::constant(ring, 1));
    return result;
  }

  // Minimal basis: drop elements whose leading monomial is a multiple of
  // another's (the earlier one wins on ties), then reduce the tails.
  std::vector<OrderedPoly> minimal;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < elems.size() && !redundant; ++j) {
      if (i == j || !elems[j].lm().divides(elems[i].lm())) continue;
      redundant = elems[j].lm() != elems[i].lm() || j < i;
    }
    if (!redundant) minimal.push_back(elems[i]);
  }
  std::vector<OrderedPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<OrderedPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    auto r = reduce(minimal[i].terms, others, ord, field, false);
    reduced.push_back(make_monic(std::move(r), field));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const OrderedPoly& x, const OrderedPoly& y) { return ord.compare(x.lm(), y.lm()) < 0; });
  for (auto& p : reduced) result.elements.push_back(from_ordered(ring, std::move(p.terms)));

  if (verify_enabled()) {
    if (!is_groebner_basis(result.elements, ord)) {
      throw InvariantViolation("Buchberger output fails the S-polynomial criterion");
    }
    for (const auto& g : ideal.generators()) {
      if (!normal_form(g, result.elements, ord).is_zero()) {
        throw InvariantViolation("input generator does not reduce to zero modulo its Groebner basis");
      }
    }
  }
  return result;
}

MonomialIdeal initial_ideal(const GroebnerBasis& basis, const RingPtr& ring) {
  auto lms = basis.leading_monomials();
  return MonomialIdeal(ring, lms);
}

MonomialIdeal initial_ideal(const IdealPresentation& ideal, const TermOrder& ord) {
  return initial_ideal(buchberger(ideal, ord), ideal.ring());
}

IdealPresentation ideal_intersection(const IdealPresentation& a, const IdealPresentation& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch();
  const auto& base = a.ring();
  // '@' cannot appear in parsed variable names, so the auxiliary variable
  // never collides with user names.
  std::vector<std::string> names{"@t"};
  names.insert(names.end(), base->names().begin(), base->names().end());
  auto ext = make_ring(std::move(names), base->field());

  auto lift = [&](const Polynomial& f, int t_power, bool negate_with_one) {
    // negate_with_one: (1 - t) * f, otherwise t^t_power * f.
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
      std::vector<int> e{0};
      e.insert(e.end(), t.monomial.exponents().begin(), t.monomial.exponents().end());
      if (negate_with_one) {
        terms.push_back({Monomial(e), t.coeff});
        e[0] = 1;
        terms.push_back({Monomial(e), -t.coeff});
      } else {
        e[0] = t_power;
        terms.push_back({Monomial(e), t.coeff});
      }
    }
    return Polynomial::from_terms(ext, std::move(terms));
  };

  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(lift(f, 1, false));
  for (const auto& g : b.generators()) gens.push_back(lift(g, 0, true));
  auto gb = buchberger(IdealPresentation(ext, std::move(gens)), TermOrder::elimination(1));

  std::vector<Polynomial> kept;
  for (const auto& p : gb.elements) {
    bool free_of_t = std::all_of(p.terms().begin(), p.terms().end(),
                                 [](const Term& t) { return t.monomial[0] == 0; });
    if (!free_of_t) continue;
    std::vector<Term> terms;
    for (const auto& t : p.terms()) {
      auto e = t.monomial.exponents();
      terms.push_back({Monomial(std::vector<int>(e.begin() + 1, e.end())), t.coeff});
    }
    kept.push_back(Polynomial::from_terms(base, std::move(terms)));
  }
  return IdealPresentation(base, std::move(kept));
}

std::size_t height_via_initial(const GroebnerBasis& basis, const RingPtr& ring) {
  if (basis.contains_unit()) throw ImproperIdeal();
  return height(initial_ideal(basis, ring));
}

std::size_t height_via_initial(const IdealPresentation& ideal, const TermOrder& ord) {
  return height_via_initial(buchberger(ideal, ord), ideal.ring());
}

bool same_ideal(const IdealPresentation& a, const IdealPresentation& b, const TermOrder& ord) {
  auto contains_all = [&](const IdealPresentation& big, const IdealPresentation& small) {
    auto gb = buchberger(big, ord);
    return std::all_of(small.generators().begin(), small.generators().end(),
                       [&](const Polynomial& f) { return normal_form(f, gb.elements, ord).is_zero(); });
  };
  return contains_all(a, b) && contains_all(b, a);
}

}  // namespace hirschlab
