#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "conekit/field.hpp"

namespace conekit {

/// Hard limit on the number of ring variables.
inline constexpr std::size_t kMaxVars = 16;
/// Exponents are stored in 16 bits; larger values are rejected.
inline constexpr std::uint32_t kMaxExponent = 0xFFFF;

/// Exponent vector with cached weighted and standard degrees.
///
/// The ordering operators implement the fixed monomial order of the toolkit:
/// weighted degree first, then standard (all-ones) degree, then reverse
/// lexicographic. Under the all-ones grading this is plain grevlex.
class Monomial {
 public:
  Monomial() = default;

  std::uint16_t operator[](std::size_t i) const noexcept { return exps_[i]; }
  std::uint32_t weighted_degree() const noexcept { return wdeg_; }
  std::uint32_t total_degree() const noexcept { return tdeg_; }
  bool is_one() const noexcept { return tdeg_ == 0; }
  std::span<const std::uint16_t, kMaxVars> exponents() const noexcept { return exps_; }

  bool divides(const Monomial& other) const noexcept;
  /// Throws DomainError("exponent-overflow") past kMaxExponent.
  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; precondition `divisor.divides(*this)`.
  Monomial operator/(const Monomial& divisor) const noexcept;
  bool coprime(const Monomial& other) const noexcept;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.wdeg_ == b.wdeg_ && a.exps_ == b.exps_;
  }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept;

  std::size_t hash() const noexcept;

 private:
  friend class WeightedPolyRing;
  std::array<std::uint16_t, kMaxVars> exps_{};
  std::uint32_t wdeg_ = 0;
  std::uint32_t tdeg_ = 0;
};

/// Lexicographic comparison in variable declaration order (used for display).
std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) noexcept;

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// Polynomial ring k[x_0..x_{n-1}] with a positive integer grading.
class WeightedPolyRing {
 public:
  /// Throws DomainError on duplicate names, non-positive weights, or more
  /// than kMaxVars variables.
  WeightedPolyRing(std::vector<std::string> names, std::vector<std::uint32_t> weights,
                   CoefficientField field = CoefficientField::default_field());
  WeightedPolyRing(std::vector<std::string> names,
                   CoefficientField field = CoefficientField::default_field());

  std::size_t num_vars() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<std::uint32_t>& weights() const noexcept { return weights_; }
  std::uint32_t weight(std::size_t i) const noexcept { return weights_[i]; }
  const CoefficientField& field() const noexcept { return field_; }
  bool is_standard_graded() const noexcept;
  /// Index of a variable name, or -1.
  int index_of(std::string_view name) const noexcept;

  Monomial one() const { return Monomial{}; }
  Monomial variable(std::size_t i) const;
  /// Throws DomainError("exponent-overflow") for entries above kMaxExponent.
  Monomial monomial(std::span<const std::uint32_t> exponents) const;
  Monomial lcm(const Monomial& a, const Monomial& b) const noexcept;

  /// All monomials of weighted degree d, sorted descending in the monomial order.
  std::vector<Monomial> monomials_of_degree(std::uint32_t d) const;
  /// Number of monomials of weighted degree d (counted, not enumerated).
  std::uint64_t count_monomials(std::uint32_t d) const;

  std::string monomial_to_string(const Monomial& m) const;

  /// Same ring with a different coefficient field.
  std::shared_ptr<const WeightedPolyRing> with_field(CoefficientField field) const;

  friend bool operator==(const WeightedPolyRing&, const WeightedPolyRing&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<std::uint32_t> weights_;
  CoefficientField field_;
};

using RingPtr = std::shared_ptr<const WeightedPolyRing>;

inline RingPtr make_ring(std::vector<std::string> names, std::vector<std::uint32_t> weights,
                         CoefficientField field = CoefficientField::default_field()) {
  return std::make_shared<const WeightedPolyRing>(std::move(names), std::move(weights), field);
}

/// Convenience: standard-graded ring with variables `prefix0 .. prefix{n-1}`.
RingPtr make_standard_ring(std::size_t n, std::string_view prefix = "x",
                           CoefficientField field = CoefficientField::default_field());

}  // namespace conekit
