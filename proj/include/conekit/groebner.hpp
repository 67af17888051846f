#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "conekit/graded_dims.hpp"
#include "conekit/linalg.hpp"
#include "conekit/polynomial.hpp"

namespace conekit {

struct GroebnerOptions {
  /// Upper bound on the number of critical pairs created.
  std::size_t max_pairs = 1'000'000;
  /// Re-check that every S-polynomial of the result reduces to zero.
  bool verify = true;
};

struct GroebnerStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_reduced = 0;
  std::size_t pairs_pruned = 0;
};

/// Integer polynomial in t, coefficient of t^i at index i.
using IntPoly = std::vector<std::int64_t>;

/// Numerator N(t) of the Hilbert series N(t) / prod(1 - t^{w_i}) of
/// S / (monomials).
IntPoly hilbert_numerator(const WeightedPolyRing& ring, std::vector<Monomial> monomials);

/// Reduced Groebner basis in the fixed weighted graded reverse
/// lexicographic order.
template <class F>
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::vector<Polynomial<F>> basis, GroebnerStats stats);

  static constexpr const char* order_name() { return "weighted-grevlex"; }

  const WeightedPolyRing& ring() const noexcept { return *ring_; }
  const RingPtr& ring_ptr() const noexcept { return ring_; }
  /// Monic, auto-reduced, sorted ascending by leading monomial.
  const std::vector<Polynomial<F>>& polynomials() const noexcept { return basis_; }
  const std::vector<Monomial>& leading_monomials() const noexcept { return leads_; }
  const GroebnerStats& stats() const noexcept { return stats_; }

  /// Full normal form; throws DomainError("ring-mismatch").
  Polynomial<F> normal_form(const Polynomial<F>& f) const;
  bool contains(const Polynomial<F>& f) const { return normal_form(f).is_zero(); }
  /// Index of the first basis element whose leading monomial divides m, or -1.
  int find_divisor(const Monomial& m) const noexcept;
  bool is_standard(const Monomial& m) const noexcept { return find_divisor(m) < 0; }

  std::vector<Monomial> standard_monomials(std::uint32_t d) const;
  const IntPoly& hilbert_numerator() const noexcept { return numerator_; }
  std::uint64_t hilbert_value(std::uint32_t d) const;
  GradedDims hilbert_function(std::uint32_t d_min, std::uint32_t d_max) const;
  /// True when every variable has a pure power among the leading monomials.
  bool is_zero_dimensional() const noexcept;
  bool is_unit_ideal() const noexcept;
  /// Krull dimension of S/I, read off the pole order of the Hilbert series at t = 1.
  std::size_t krull_dimension() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial<F>> basis_;
  std::vector<Monomial> leads_;
  GroebnerStats stats_;
  IntPoly numerator_;
};

/// Ordered list of homogeneous generators with a lazily computed basis.
template <class F>
class Ideal {
 public:
  /// Throws DomainError for inhomogeneous generators or mixed rings.
  Ideal(RingPtr ring, std::vector<Polynomial<F>> generators);

  const WeightedPolyRing& ring() const noexcept { return *ring_; }
  const RingPtr& ring_ptr() const noexcept { return ring_; }
  const std::vector<Polynomial<F>>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  std::vector<std::uint32_t> degrees() const;

  /// Computed on first call and cached; later options are ignored.
  const GroebnerBasis<F>& groebner(const GroebnerOptions& options = {}) const;
  std::shared_ptr<const GroebnerBasis<F>> groebner_ptr(const GroebnerOptions& options = {}) const;

 private:
  struct Cache {
    std::once_flag once;
    std::shared_ptr<const GroebnerBasis<F>> basis;
  };
  RingPtr ring_;
  std::vector<Polynomial<F>> gens_;
  std::shared_ptr<Cache> cache_;
};

template <class F>
GroebnerBasis<F> buchberger(const Ideal<F>& ideal, const GroebnerOptions& options = {});

template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const GroebnerBasis<F>& gb) {
  return gb.normal_form(f);
}

template <class F>
std::vector<Monomial> standard_monomials(const GroebnerBasis<F>& gb, std::uint32_t d) {
  return gb.standard_monomials(d);
}

template <class F>
GradedDims hilbert_function(const GroebnerBasis<F>& gb, std::uint32_t d_min, std::uint32_t d_max) {
  return gb.hilbert_function(d_min, d_max);
}

/// Homogeneous quotient S/I with memoized normal forms of monomials,
/// expressed in the standard-monomial basis of each degree.
template <class F>
class QuotientRing {
 public:
  using Element = typename F::Element;

  explicit QuotientRing(std::shared_ptr<const GroebnerBasis<F>> gb);

  const GroebnerBasis<F>& groebner() const noexcept { return *gb_; }
  const WeightedPolyRing& ring() const noexcept { return gb_->ring(); }
  const F& field() const noexcept { return field_; }

  /// Standard monomials of degree d (the basis of (S/I)_d); empty for d < 0.
  const std::vector<Monomial>& basis(int d);
  std::size_t dim(int d) { return basis(d).size(); }
  /// Position of a standard monomial inside basis(deg m), or -1.
  int index_of(const Monomial& m);

  /// Coordinates of the residue of m.
  const SparseVec<F>& normal_form(const Monomial& m);
  /// Coordinates of the residue of u * p; p must be homogeneous.
  SparseVec<F> normal_form(const Polynomial<F>& p, const Monomial& u = Monomial{});
  /// Polynomial with the given coordinates in degree d.
  Polynomial<F> to_polynomial(int d, const SparseVec<F>& v);

 private:
  std::shared_ptr<const GroebnerBasis<F>> gb_;
  F field_;
  std::unordered_map<int, std::vector<Monomial>> bases_;
  std::unordered_map<Monomial, int, MonomialHash> index_;
  std::unordered_map<Monomial, SparseVec<F>, MonomialHash> memo_;
};

/// Groebner basis of an inhomogeneous ideal in the standard-graded
/// reverse lexicographic order, obtained by homogenizing with an extra
/// smallest variable and setting it to one afterwards.
template <class F>
struct AffineGroebner {
  /// Copy of the input ring with all weights one.
  RingPtr ring;
  std::vector<Polynomial<F>> basis;
  std::vector<Monomial> leads;

  Polynomial<F> normal_form(const Polynomial<F>& f) const;
  bool is_unit() const noexcept;
  bool is_zero_dimensional() const noexcept;
  /// Monomials outside the initial ideal; requires zero-dimensionality.
  std::vector<Monomial> standard_monomials() const;
};

/// `polys` may live in a weighted ring; they are re-read with all weights one.
template <class F>
AffineGroebner<F> affine_groebner(const std::vector<Polynomial<F>>& polys, const GroebnerOptions& options = {});

/// Same polynomial in another ring with identical variable names.
template <class F>
Polynomial<F> transfer(const Polynomial<F>& f, const RingPtr& target);

/// Adds c * v into the accumulator `acc` (both sorted sparse vectors).
template <class F>
void axpy(const F& field, SparseVec<F>& acc, const typename F::Element& c, const SparseVec<F>& v);

}  // namespace conekit
