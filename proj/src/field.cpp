#include "conekit/field.hpp"

#include <charconv>

#include "conekit/error.hpp"

namespace conekit {

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

CoefficientField CoefficientField::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31))
    throw DomainError("field-too-large", "prime must be below 2^31, got " + std::to_string(p));
  if (!is_prime_number(p))
    throw DomainError("not-prime", std::to_string(p) + " is not prime");
  return CoefficientField(FieldKind::Prime, static_cast<std::uint32_t>(p));
}

CoefficientField CoefficientField::parse(std::string_view text) {
  if (text == "QQ" || text == "Q" || text == "rationals") return rationals();
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw DomainError("bad-field", "cannot parse field '" + std::string(text) + "'");
  return prime(p);
}

std::string CoefficientField::name() const {
  if (kind_ == FieldKind::Rationals) return "QQ";
  return "GF(" + std::to_string(p_) + ")";
}

PrimeField::PrimeField(const CoefficientField& f) : p_(f.characteristic()) {
  if (!f.is_prime()) throw DomainError("field-mismatch", "expected a prime field, got " + f.name());
}

RationalField::RationalField(const CoefficientField& f) {
  if (f.is_prime()) throw DomainError("field-mismatch", "expected QQ, got " + f.name());
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw DomainError("division-by-zero", "inverse of zero in " + descriptor().name());
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return from_int(t);
}

namespace {

std::uint32_t reduce_decimal(std::string_view digits, std::uint32_t p) {
  std::uint64_t acc = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') throw DomainError("bad-literal", "malformed number '" + std::string(digits) + "'");
    acc = (acc * 10 + static_cast<unsigned>(c - '0')) % p;
  }
  return static_cast<std::uint32_t>(acc);
}

}  // namespace

PrimeField::Element PrimeField::from_literal(std::string_view numerator,
                                             std::string_view denominator) const {
  Element num = reduce_decimal(numerator, p_);
  Element den = reduce_decimal(denominator, p_);
  if (den == 0)
    throw DomainError("denominator-vanishes",
                      "denominator " + std::string(denominator) + " vanishes in " + descriptor().name());
  return div(num, den);
}

std::pair<bool, std::string> PrimeField::signed_magnitude(Element a) const {
  if (a > p_ / 2) return {true, std::to_string(p_ - a)};
  return {false, std::to_string(a)};
}

std::string PrimeField::to_string(Element a) const {
  auto [negative, magnitude] = signed_magnitude(a);
  return negative ? "-" + magnitude : magnitude;
}

RationalField::Element RationalField::inv(const Element& a) const {
  if (sgn(a) == 0) throw DomainError("division-by-zero", "inverse of zero in QQ");
  return Element(1) / a;
}

RationalField::Element RationalField::from_literal(std::string_view numerator,
                                                   std::string_view denominator) const {
  mpz_class num(std::string(numerator), 10);
  mpz_class den(std::string(denominator), 10);
  if (den == 0) throw DomainError("denominator-vanishes", "zero denominator");
  Element q(num, den);
  q.canonicalize();
  return q;
}

std::pair<bool, std::string> RationalField::signed_magnitude(const Element& a) const {
  Element m = abs(a);
  return {sgn(a) < 0, m.get_str()};
}

std::string RationalField::to_string(const Element& a) const { return a.get_str(); }

}  // namespace conekit
