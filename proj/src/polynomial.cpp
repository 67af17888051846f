#include "conekit/polynomial.hpp"

#include <algorithm>

#include "conekit/error.hpp"

namespace conekit {

void require_same_ring(const WeightedPolyRing& a, const WeightedPolyRing& b) {
  if (&a != &b && !(a == b)) throw DomainError("ring-mismatch", "operands live in different rings");
}

template <class F>
Polynomial<F>::Polynomial(RingPtr ring) : ring_(std::move(ring)), field_(field_of<F>(*ring_)) {}

template <class F>
Polynomial<F>::Polynomial(RingPtr ring, std::vector<Term<F>> terms, bool)
    : ring_(std::move(ring)), field_(field_of<F>(*ring_)), terms_(std::move(terms)) {}

template <class F>
Polynomial<F>::Polynomial(RingPtr ring, std::vector<Term<F>> terms)
    : ring_(std::move(ring)), field_(field_of<F>(*ring_)) {
  std::sort(terms.begin(), terms.end(),
            [](const Term<F>& a, const Term<F>& b) { return a.monomial > b.monomial; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().monomial == t.monomial) {
      terms_.back().coeff = field_.add(terms_.back().coeff, t.coeff);
    } else {
      if (!terms_.empty() && field_.is_zero(terms_.back().coeff)) terms_.pop_back();
      terms_.push_back(std::move(t));
    }
  }
  if (!terms_.empty() && field_.is_zero(terms_.back().coeff)) terms_.pop_back();
}

template <class F>
Polynomial<F> Polynomial<F>::constant(RingPtr ring, const Element& c) {
  return term(std::move(ring), Monomial{}, c);
}

template <class F>
Polynomial<F> Polynomial<F>::from_int(RingPtr ring, std::int64_t c) {
  F field = field_of<F>(*ring);
  return constant(std::move(ring), field.from_int(c));
}

template <class F>
Polynomial<F> Polynomial<F>::term(RingPtr ring, const Monomial& m, const Element& c) {
  F field = field_of<F>(*ring);
  std::vector<Term<F>> t;
  if (!field.is_zero(c)) t.push_back({m, c});
  return Polynomial(std::move(ring), std::move(t), true);
}

template <class F>
Polynomial<F> Polynomial<F>::variable(RingPtr ring, std::size_t i) {
  if (i >= ring->num_vars()) throw DomainError("arity", "variable index out of range");
  F field = field_of<F>(*ring);
  Monomial m = ring->variable(i);
  return term(std::move(ring), m, field.one());
}

template <class F>
std::uint32_t Polynomial<F>::degree() const noexcept {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.weighted_degree());
  return d;
}

template <class F>
bool Polynomial<F>::is_homogeneous() const noexcept {
  for (const auto& t : terms_)
    if (t.monomial.weighted_degree() != terms_.front().monomial.weighted_degree()) return false;
  return true;
}

template <class F>
typename Polynomial<F>::Element Polynomial<F>::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term<F>& t, const Monomial& x) { return t.monomial > x; });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return field_.zero();
}

template <class F>
Polynomial<F> Polynomial<F>::homogeneous_part(std::uint32_t d) const {
  std::vector<Term<F>> out;
  for (const auto& t : terms_)
    if (t.monomial.weighted_degree() == d) out.push_back(t);
  return Polynomial(ring_, std::move(out), true);
}

template <class F>
void Polynomial<F>::check_same_ring(const Polynomial& other) const {
  require_same_ring(*ring_, *other.ring_);
}

template <class F>
Polynomial<F> Polynomial<F>::operator-() const {
  std::vector<Term<F>> out = terms_;
  for (auto& t : out) t.coeff = field_.neg(t.coeff);
  return Polynomial(ring_, std::move(out), true);
}

template <class F>
Polynomial<F> Polynomial<F>::operator+(const Polynomial& other) const {
  return plus_scaled(other, Monomial{}, field_.one());
}

template <class F>
Polynomial<F> Polynomial<F>::operator-(const Polynomial& other) const {
  return plus_scaled(other, Monomial{}, field_.neg(field_.one()));
}

template <class F>
Polynomial<F> Polynomial<F>::plus_scaled(const Polynomial& g, const Monomial& m,
                                         const Element& c) const {
  check_same_ring(g);
  if (field_.is_zero(c) || g.is_zero()) return *this;
  std::vector<Term<F>> out;
  out.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.begin();
  auto b = g.terms_.begin();
  while (a != terms_.end() || b != g.terms_.end()) {
    if (b == g.terms_.end()) {
      out.push_back(*a++);
      continue;
    }
    Monomial bm = b->monomial * m;
    if (a == terms_.end() || bm > a->monomial) {
      out.push_back({bm, field_.mul(c, b->coeff)});
      ++b;
    } else if (a->monomial > bm) {
      out.push_back(*a++);
    } else {
      Element s = field_.add(a->coeff, field_.mul(c, b->coeff));
      if (!field_.is_zero(s)) out.push_back({a->monomial, std::move(s)});
      ++a;
      ++b;
    }
  }
  return Polynomial(ring_, std::move(out), true);
}

template <class F>
Polynomial<F> Polynomial<F>::operator*(const Polynomial& other) const {
  check_same_ring(other);
  std::vector<Term<F>> out;
  out.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : other.terms_) out.push_back({a.monomial * b.monomial, field_.mul(a.coeff, b.coeff)});
  return Polynomial(ring_, std::move(out));
}

template <class F>
Polynomial<F> Polynomial<F>::scaled(const Element& c) const {
  return times_term(Monomial{}, c);
}

template <class F>
Polynomial<F> Polynomial<F>::times_term(const Monomial& m, const Element& c) const {
  if (field_.is_zero(c)) return Polynomial(ring_);
  std::vector<Term<F>> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.monomial * m, field_.mul(t.coeff, c)});
  return Polynomial(ring_, std::move(out), true);
}

template <class F>
Polynomial<F> Polynomial<F>::pow(std::uint32_t e) const {
  Polynomial result = from_int(ring_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

template <class F>
Polynomial<F> Polynomial<F>::monic() const {
  if (is_zero()) return *this;
  return scaled(field_.inv(leading_coeff()));
}

template <class F>
Polynomial<F> Polynomial<F>::derivative(std::size_t var) const {
  if (var >= ring_->num_vars()) throw DomainError("arity", "variable index out of range");
  std::vector<Term<F>> out;
  Monomial x = ring_->variable(var);
  for (const auto& t : terms_) {
    std::uint16_t e = t.monomial[var];
    if (e == 0) continue;
    Element c = field_.mul(t.coeff, field_.from_int(e));
    if (field_.is_zero(c)) continue;
    out.push_back({t.monomial / x, std::move(c)});
  }
  return Polynomial(ring_, std::move(out), true);
}

template <class F>
typename Polynomial<F>::Element Polynomial<F>::evaluate(std::span<const Element> point) const {
  if (point.size() != ring_->num_vars())
    throw DomainError("dimension-mismatch", "point has " + std::to_string(point.size()) +
                                                " coordinates, ring has " +
                                                std::to_string(ring_->num_vars()) + " variables");
  Element sum = field_.zero();
  for (const auto& t : terms_) {
    Element v = t.coeff;
    for (std::size_t i = 0; i < point.size() && !field_.is_zero(v); ++i)
      for (std::uint16_t e = 0; e < t.monomial[i]; ++e) v = field_.mul(v, point[i]);
    sum = field_.add(sum, v);
  }
  return sum;
}

template <class F>
Polynomial<F> Polynomial<F>::substitute(std::span<const Polynomial> images) const {
  if (images.size() != ring_->num_vars())
    throw DomainError("arity", "substitution needs one image per variable");
  if (images.empty()) return *this;
  const RingPtr& target = images.front().ring_ptr();
  for (const auto& im : images) require_same_ring(*target, im.ring());
  std::vector<std::vector<Polynomial>> powers(images.size());
  Polynomial result(target);
  for (const auto& t : terms_) {
    Polynomial acc = constant(target, t.coeff);
    for (std::size_t i = 0; i < images.size(); ++i) {
      std::uint16_t e = t.monomial[i];
      if (e == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(from_int(target, 1));
      while (pw.size() <= e) pw.push_back(pw.back() * images[i]);
      acc = acc * pw[e];
    }
    result += acc;
  }
  return result;
}

template <class F>
std::string Polynomial<F>::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const Term<F>*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [](const Term<F>* a, const Term<F>* b) { return lex_compare(a->monomial, b->monomial) > 0; });
  std::string s;
  for (const Term<F>* t : order) {
    auto [negative, magnitude] = field_.signed_magnitude(t->coeff);
    if (negative) s += '-';
    else if (!s.empty()) s += '+';
    bool unit = magnitude == "1";
    if (t->monomial.is_one()) {
      s += magnitude;
    } else {
      if (!unit) s += magnitude + "*";
      s += ring_->monomial_to_string(t->monomial);
    }
  }
  return s;
}

#define CONEKIT_INSTANTIATE(F) template class Polynomial<F>;
CONEKIT_FOR_EACH_FIELD(CONEKIT_INSTANTIATE)
#undef CONEKIT_INSTANTIATE

}  // namespace conekit
