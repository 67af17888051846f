#include "conekit/ring.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include "conekit/error.hpp"

namespace conekit {

bool Monomial::divides(const Monomial& other) const noexcept {
  if (wdeg_ > other.wdeg_) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    std::uint32_t e = std::uint32_t{exps_[i]} + other.exps_[i];
    if (e > kMaxExponent) throw DomainError("exponent-overflow", "exponent exceeds 16-bit limit");
    r.exps_[i] = static_cast<std::uint16_t>(e);
  }
  r.wdeg_ = wdeg_ + other.wdeg_;
  r.tdeg_ = tdeg_ + other.tdeg_;
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const noexcept {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    r.exps_[i] = static_cast<std::uint16_t>(exps_[i] - divisor.exps_[i]);
  r.wdeg_ = wdeg_ - divisor.wdeg_;
  r.tdeg_ = tdeg_ - divisor.tdeg_;
  return r;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
  if (auto c = a.wdeg_ <=> b.wdeg_; c != 0) return c;
  if (auto c = a.tdeg_ <=> b.tdeg_; c != 0) return c;
  for (std::size_t i = kMaxVars; i-- > 0;) {
    if (a.exps_[i] != b.exps_[i])
      return a.exps_[i] < b.exps_[i] ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) noexcept {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

std::size_t Monomial::hash() const noexcept {
  std::uint64_t h = 0x9E3779B97F4A7C15ull;
  for (std::size_t i = 0; i < kMaxVars; i += 4) {
    std::uint64_t chunk = std::uint64_t{exps_[i]} | (std::uint64_t{exps_[i + 1]} << 16) |
                          (std::uint64_t{exps_[i + 2]} << 32) | (std::uint64_t{exps_[i + 3]} << 48);
    h ^= chunk + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    h *= 0xBF58476D1CE4E5B9ull;
  }
  return static_cast<std::size_t>(h ^ (h >> 31));
}

WeightedPolyRing::WeightedPolyRing(std::vector<std::string> names,
                                   std::vector<std::uint32_t> weights, CoefficientField field)
    : names_(std::move(names)), weights_(std::move(weights)), field_(field) {
  if (names_.size() > kMaxVars)
    throw DomainError("too-many-variables",
                      "at most " + std::to_string(kMaxVars) + " variables are supported");
  if (weights_.size() != names_.size())
    throw DomainError("weight-count", "expected " + std::to_string(names_.size()) +
                                          " weights, got " + std::to_string(weights_.size()));
  std::unordered_set<std::string> seen;
  for (const auto& n : names_)
    if (!seen.insert(n).second) throw DomainError("duplicate-variable", "duplicate variable '" + n + "'");
  for (auto w : weights_)
    if (w == 0) throw DomainError("non-positive-weight", "weights must be positive");
}

WeightedPolyRing::WeightedPolyRing(std::vector<std::string> names, CoefficientField field)
    : WeightedPolyRing(names, std::vector<std::uint32_t>(names.size(), 1), field) {}

bool WeightedPolyRing::is_standard_graded() const noexcept {
  return std::all_of(weights_.begin(), weights_.end(), [](auto w) { return w == 1; });
}

int WeightedPolyRing::index_of(std::string_view name) const noexcept {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

Monomial WeightedPolyRing::variable(std::size_t i) const {
  Monomial m;
  m.exps_[i] = 1;
  m.wdeg_ = weights_[i];
  m.tdeg_ = 1;
  return m;
}

Monomial WeightedPolyRing::monomial(std::span<const std::uint32_t> exponents) const {
  if (exponents.size() > num_vars())
    throw DomainError("arity", "exponent vector longer than the number of variables");
  Monomial m;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] > kMaxExponent)
      throw DomainError("exponent-overflow", "exponent exceeds 16-bit limit");
    m.exps_[i] = static_cast<std::uint16_t>(exponents[i]);
    m.wdeg_ += weights_[i] * exponents[i];
    m.tdeg_ += exponents[i];
  }
  return m;
}

Monomial WeightedPolyRing::lcm(const Monomial& a, const Monomial& b) const noexcept {
  Monomial m;
  for (std::size_t i = 0; i < num_vars(); ++i) {
    m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    m.wdeg_ += weights_[i] * m.exps_[i];
    m.tdeg_ += m.exps_[i];
  }
  return m;
}

std::vector<Monomial> WeightedPolyRing::monomials_of_degree(std::uint32_t d) const {
  std::vector<Monomial> out;
  const std::size_t n = num_vars();
  Monomial cur;
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t left) {
    if (i + 1 == n) {
      if (left % weights_[i] != 0) return;
      std::uint32_t e = left / weights_[i];
      if (e > kMaxExponent) return;
      Monomial m = cur;
      m.exps_[i] = static_cast<std::uint16_t>(e);
      m.wdeg_ = d;
      m.tdeg_ += e;
      out.push_back(m);
      return;
    }
    for (std::uint32_t e = 0; e * weights_[i] <= left && e <= kMaxExponent; ++e) {
      cur.exps_[i] = static_cast<std::uint16_t>(e);
      cur.tdeg_ += e;
      rec(i + 1, left - e * weights_[i]);
      cur.tdeg_ -= e;
    }
    cur.exps_[i] = 0;
  };
  if (n == 0) {
    if (d == 0) out.push_back(Monomial{});
    return out;
  }
  rec(0, d);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::uint64_t WeightedPolyRing::count_monomials(std::uint32_t d) const {
  std::vector<std::uint64_t> ways(d + 1, 0);
  ways[0] = 1;
  for (auto w : weights_)
    for (std::uint32_t t = w; t <= d; ++t) ways[t] += ways[t - w];
  return ways[d];
}

std::string WeightedPolyRing::monomial_to_string(const Monomial& m) const {
  if (m.is_one()) return "1";
  std::string s;
  for (std::size_t i = 0; i < num_vars(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += names_[i];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s;
}

std::shared_ptr<const WeightedPolyRing> WeightedPolyRing::with_field(CoefficientField field) const {
  return std::make_shared<const WeightedPolyRing>(names_, weights_, field);
}

RingPtr make_standard_ring(std::size_t n, std::string_view prefix, CoefficientField field) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return make_ring(std::move(names), std::vector<std::uint32_t>(n, 1), field);
}

}  // namespace conekit
