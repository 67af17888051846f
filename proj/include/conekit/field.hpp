#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace conekit {

enum class FieldKind { Rationals, Prime };

/// Runtime description of a coefficient field: either Q or GF(p), p < 2^31.
class CoefficientField {
 public:
  static CoefficientField rationals() { return CoefficientField(FieldKind::Rationals, 0); }
  /// Throws DomainError unless p is a prime below 2^31.
  static CoefficientField prime(std::uint64_t p);
  static CoefficientField default_field() { return prime(32003); }
  /// Accepts "QQ" or a decimal prime.
  static CoefficientField parse(std::string_view text);

  FieldKind kind() const noexcept { return kind_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  bool is_prime() const noexcept { return kind_ == FieldKind::Prime; }
  /// "QQ" or "GF(p)".
  std::string name() const;

  friend bool operator==(const CoefficientField&, const CoefficientField&) = default;

 private:
  CoefficientField(FieldKind kind, std::uint32_t p) : kind_(kind), p_(p) {}
  FieldKind kind_;
  std::uint32_t p_;
};

bool is_prime_number(std::uint64_t n);

/// Arithmetic in GF(p). Elements are canonical residues in [0, p).
class PrimeField {
 public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t p) : p_(p) {}
  /// Throws DomainError unless `f` is a prime field.
  explicit PrimeField(const CoefficientField& f);

  std::uint32_t characteristic() const noexcept { return p_; }
  CoefficientField descriptor() const { return CoefficientField::prime(p_); }

  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return 1; }
  bool is_zero(Element a) const noexcept { return a == 0; }
  bool is_one(Element a) const noexcept { return a == 1; }

  Element add(Element a, Element b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const noexcept { return a >= b ? a - b : a + (p_ - b); }
  Element neg(Element a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const noexcept {
    return static_cast<Element>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  /// Throws DomainError on zero.
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  Element from_int(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Element>(r < 0 ? r + p_ : r);
  }
  /// Decimal literal "123" or "12/7"; throws DomainError when the
  /// denominator vanishes mod p.
  Element from_literal(std::string_view numerator, std::string_view denominator = "1") const;

  /// Sign and magnitude of the symmetric representative in (-p/2, p/2].
  std::pair<bool, std::string> signed_magnitude(Element a) const;
  std::string to_string(Element a) const;

 private:
  std::uint32_t p_;
};

/// Exact arithmetic in Q backed by GMP.
class RationalField {
 public:
  using Element = mpq_class;

  RationalField() = default;
  /// Throws DomainError unless `f` is QQ.
  explicit RationalField(const CoefficientField& f);

  CoefficientField descriptor() const { return CoefficientField::rationals(); }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const;
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }

  Element from_int(std::int64_t v) const { return Element(static_cast<long>(v)); }
  Element from_literal(std::string_view numerator, std::string_view denominator = "1") const;

  std::pair<bool, std::string> signed_magnitude(const Element& a) const;
  std::string to_string(const Element& a) const;
};

/// Instantiates `MACRO(F)` once per supported field type.
#define CONEKIT_FOR_EACH_FIELD(MACRO) \
  MACRO(::conekit::PrimeField)        \
  MACRO(::conekit::RationalField)

}  // namespace conekit
