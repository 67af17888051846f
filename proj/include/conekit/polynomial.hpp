#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "conekit/field.hpp"
#include "conekit/ring.hpp"

namespace conekit {

template <class F>
struct Term {
  Monomial monomial;
  typename F::Element coeff;
};

/// Sparse polynomial over the field F in a weighted ring.
///
/// Terms are kept sorted strictly descending in the monomial order with no
/// zero coefficients, so equality is structural.
template <class F>
class Polynomial {
 public:
  using Element = typename F::Element;

  explicit Polynomial(RingPtr ring);
  /// Canonicalizes: sorts, merges duplicate monomials, drops zeros.
  Polynomial(RingPtr ring, std::vector<Term<F>> terms);

  static Polynomial constant(RingPtr ring, const Element& c);
  static Polynomial from_int(RingPtr ring, std::int64_t c);
  static Polynomial term(RingPtr ring, const Monomial& m, const Element& c);
  static Polynomial variable(RingPtr ring, std::size_t i);

  const WeightedPolyRing& ring() const noexcept { return *ring_; }
  const RingPtr& ring_ptr() const noexcept { return ring_; }
  const F& field() const noexcept { return field_; }

  const std::vector<Term<F>>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  /// Precondition: nonzero.
  const Term<F>& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const Element& leading_coeff() const { return terms_.front().coeff; }

  /// Largest weighted degree of a term; 0 for the zero polynomial.
  std::uint32_t degree() const noexcept;
  bool is_homogeneous() const noexcept;
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
  }
  /// Coefficient of the given monomial (zero when absent).
  Element coefficient(const Monomial& m) const;
  /// Terms of weighted degree exactly d.
  Polynomial homogeneous_part(std::uint32_t d) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
  Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }
  Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }
  Polynomial scaled(const Element& c) const;
  Polynomial times_term(const Monomial& m, const Element& c) const;
  /// this + c * m * g, merged in one pass.
  Polynomial plus_scaled(const Polynomial& g, const Monomial& m, const Element& c) const;
  Polynomial pow(std::uint32_t e) const;
  /// Rescaled so the leading coefficient is one (zero stays zero).
  Polynomial monic() const;

  Polynomial derivative(std::size_t var) const;
  Element evaluate(std::span<const Element> point) const;
  /// Replaces variable i by images[i]; the result lives in the images' ring.
  Polynomial substitute(std::span<const Polynomial> images) const;

  /// Terms printed in descending lexicographic order, e.g. "x1*x5-x2*x4".
  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].monomial == b.terms_[i].monomial) || !(a.terms_[i].coeff == b.terms_[i].coeff))
        return false;
    return true;
  }

 private:
  Polynomial(RingPtr ring, std::vector<Term<F>> terms, bool canonical);
  void check_same_ring(const Polynomial& other) const;

  RingPtr ring_;
  F field_;
  std::vector<Term<F>> terms_;
};

/// Returns a field object matching the ring's coefficient field.
template <class F>
F field_of(const WeightedPolyRing& ring) {
  return F(ring.field());
}

/// Throws DomainError("ring-mismatch") when the rings differ.
void require_same_ring(const WeightedPolyRing& a, const WeightedPolyRing& b);

}  // namespace conekit
