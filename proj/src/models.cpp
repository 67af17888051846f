#include "conekit/models.hpp"

#include <sstream>

#include "conekit/error.hpp"
#include "conekit/pfaffian.hpp"

namespace conekit::models {

namespace {

using Q = RationalField;
using QPoly = Polynomial<Q>;

std::string ring_line(const WeightedPolyRing& ring) {
  std::string s = "ring";
  bool weighted = false;
  for (std::size_t i = 0; i < ring.num_vars(); ++i) {
    s += " " + ring.names()[i];
    weighted = weighted || ring.weight(i) != 1;
  }
  if (weighted) {
    s += " weights";
    for (std::size_t i = 0; i < ring.num_vars(); ++i) s += " " + std::to_string(ring.weight(i));
  }
  return s + "\n";
}

std::string ideal_document(const WeightedPolyRing& ring, const std::vector<QPoly>& gens,
                           const std::string& comment) {
  std::string s = "# " + comment + "\n" + ring_line(ring) + "ideal\n";
  for (const auto& g : gens) s += g.to_string() + "\n";
  return s + "end\n";
}

std::vector<std::string> indexed_names(std::string_view prefix, std::size_t from, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(std::string(prefix) + std::to_string(from + i));
  return out;
}

RingPtr q_ring(std::vector<std::string> names, std::vector<std::uint32_t> weights = {}) {
  if (weights.empty()) weights.assign(names.size(), 1);
  return make_ring(std::move(names), std::move(weights), CoefficientField::rationals());
}

QPoly fermat(const RingPtr& ring, std::uint32_t d) {
  QPoly f(ring);
  for (std::size_t i = 0; i < ring->num_vars(); ++i) f += QPoly::variable(ring, i).pow(d);
  return f;
}

std::string matrix_document(const RingPtr& ring, const std::vector<QPoly>& upper, const std::string& comment) {
  std::string s = "# " + comment + "\n" + ring_line(*ring) + "skewmatrix 5\n";
  std::size_t k = 0;
  for (std::size_t row = 0; row < 4; ++row) {
    for (std::size_t col = row + 1; col < 5; ++col) {
      if (col > row + 1) s += ", ";
      s += upper[k++].to_string();
    }
    s += "\n";
  }
  return s + "end\n";
}

}  // namespace

template <class F>
Polynomial<F> random_form(const RingPtr& ring, std::uint32_t d, Rng& rng, std::int64_t range) {
  F field = field_of<F>(*ring);
  std::vector<Term<F>> terms;
  for (const auto& m : ring->monomials_of_degree(d)) terms.push_back({m, field.from_int(rng.uniform(-range, range))});
  return Polynomial<F>(ring, std::move(terms));
}

std::string fermat_quartic() {
  auto ring = q_ring(indexed_names("x", 0, 4));
  return ideal_document(*ring, {fermat(ring, 4)}, "Fermat quartic K3 surface in P^3");
}

std::string fermat_cubic() {
  auto ring = q_ring(indexed_names("x", 0, 3));
  return ideal_document(*ring, {fermat(ring, 3)}, "Fermat cubic curve in P^2");
}

std::string genus4(std::uint64_t seed) {
  auto ring = q_ring(indexed_names("x", 0, 5));
  Rng rng(seed);
  return ideal_document(*ring, {random_form<Q>(ring, 2, rng), fermat(ring, 3)},
                        "genus 4 K3 surface in P^4, seed " + std::to_string(seed));
}

std::string genus5(std::uint64_t seed) {
  auto ring = q_ring(indexed_names("x", 0, 6));
  Rng rng(seed);
  std::vector<QPoly> gens;
  for (int i = 0; i < 3; ++i) gens.push_back(random_form<Q>(ring, 2, rng));
  return ideal_document(*ring, gens, "genus 5 K3 surface in P^5, seed " + std::to_string(seed));
}

std::string genus6(std::uint64_t seed) {
  auto ring = q_ring(indexed_names("x", 0, 7));
  Rng rng(seed);
  std::vector<QPoly> upper;
  for (int i = 0; i < 10; ++i) upper.push_back(random_form<Q>(ring, 1, rng, 9));
  auto gens = pfaffians_4x4(SkewMatrix<Q>(ring, 5, upper));
  gens.push_back(random_form<Q>(ring, 2, rng));
  return ideal_document(*ring, gens, "genus 6 K3 surface in P^6, seed " + std::to_string(seed));
}

std::string segre_p1p2() {
  auto ring = q_ring(indexed_names("x", 1, 6));
  auto x = [&](std::size_t i) { return QPoly::variable(ring, i - 1); };
  return ideal_document(*ring, {x(1) * x(5) - x(2) * x(4), x(1) * x(6) - x(3) * x(4), x(2) * x(6) - x(3) * x(5)},
                        "Segre embedding of P^1 x P^2 in P^5");
}

std::string pfaffian_symbolic() {
  auto names = indexed_names("x", 1, 6);
  for (auto& f : indexed_names("f", 1, 3)) names.push_back(f);
  auto ring = q_ring(names, {1, 1, 1, 1, 1, 1, 3, 3, 3});
  std::vector<QPoly> upper{QPoly(ring)};
  for (std::size_t i = 0; i < 9; ++i) upper.push_back(QPoly::variable(ring, i));
  return matrix_document(ring, upper, "skew matrix with entry degrees -1 1 1 1 / 1 1 1 / 3 3 / 3");
}

std::string pfaffian_concrete(std::uint64_t seed, std::uint32_t k) {
  if (k < 1) throw DomainError("bad-degree", "form degree must be positive");
  auto ring = q_ring(indexed_names("x", 1, 6));
  Rng rng(seed);
  std::vector<QPoly> upper{QPoly(ring)};
  for (std::size_t i = 0; i < 6; ++i) upper.push_back(QPoly::variable(ring, i));
  for (int i = 0; i < 3; ++i) upper.push_back(random_form<Q>(ring, k, rng, 9));
  return matrix_document(ring, upper,
                         "skew matrix with random forms of degree " + std::to_string(k) + ", seed " +
                             std::to_string(seed));
}

std::string random_artinian(std::uint64_t seed) {
  Rng rng(seed);
  std::size_t n = static_cast<std::size_t>(rng.uniform(2, 3));
  auto ring = q_ring(indexed_names("x", 0, n));
  std::int64_t top = n == 2 ? 5 : 3;
  std::vector<QPoly> gens;
  for (std::size_t i = 0; i < n; ++i)
    gens.push_back(QPoly::variable(ring, i).pow(static_cast<std::uint32_t>(rng.uniform(2, top))));
  auto extra = rng.uniform(0, 2);
  for (std::int64_t e = 0; e < extra; ++e) {
    auto d = static_cast<std::uint32_t>(rng.uniform(2, 3));
    // Sparse form: keep each monomial with probability 1/3.
    std::vector<Term<Q>> terms;
    for (const auto& m : ring->monomials_of_degree(d))
      if (rng.uniform(0, 2) == 0) terms.push_back({m, mpq_class(static_cast<long>(rng.nonzero(5)))});
    QPoly f(ring, std::move(terms));
    if (!f.is_zero()) gens.push_back(f);
  }
  return ideal_document(*ring, gens, "random Artinian ideal, seed " + std::to_string(seed));
}

std::vector<std::string> names() {
  return {"quartic", "cubic", "genus4", "genus5", "genus6", "segre", "pfaffian", "pfaffian-concrete", "artinian"};
}

std::string document(std::string_view name, std::uint64_t seed) {
  if (name == "quartic") return fermat_quartic();
  if (name == "cubic") return fermat_cubic();
  if (name == "genus4") return genus4(seed);
  if (name == "genus5") return genus5(seed);
  if (name == "genus6") return genus6(seed);
  if (name == "segre") return segre_p1p2();
  if (name == "pfaffian") return pfaffian_symbolic();
  if (name == "pfaffian-concrete") return pfaffian_concrete(seed);
  if (name == "artinian") return random_artinian(seed);
  std::string known;
  for (const auto& n : names()) known += (known.empty() ? "" : ", ") + n;
  throw DomainError("unknown-model", "unknown model '" + std::string(name) + "' (known: " + known + ")");
}

template <class F>
Ideal<F> first_ideal(const Document& doc) {
  if (doc.ideals.empty()) throw DomainError("missing-ideal", "document has no ideal block");
  return Ideal<F>(doc.ring, parse_ideal_block<F>(doc.ring, doc.ideals.front()));
}

#define CONEKIT_INSTANTIATE(F)                                                                 \
  template Polynomial<F> random_form<F>(const RingPtr&, std::uint32_t, Rng&, std::int64_t); \
  template Ideal<F> first_ideal<F>(const Document&);
CONEKIT_FOR_EACH_FIELD(CONEKIT_INSTANTIATE)
#undef CONEKIT_INSTANTIATE

}  // namespace conekit::models
