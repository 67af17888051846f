#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "conekit/parse.hpp"
#include "conekit/polynomial.hpp"

namespace conekit {

/// Skew-symmetric matrix stored by its strict upper triangle.
template <class F>
class SkewMatrix {
 public:
  /// `upper` lists entries (0,1), (0,2), ..., (n-2,n-1) row by row.
  SkewMatrix(RingPtr ring, std::size_t n, std::vector<Polynomial<F>> upper);

  const RingPtr& ring_ptr() const noexcept { return ring_; }
  std::size_t size() const noexcept { return n_; }
  const std::vector<Polynomial<F>>& upper() const noexcept { return upper_; }

  /// Entry (i, j) with m(j, i) = -m(i, j) and zero diagonal.
  Polynomial<F> entry(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, Polynomial<F> p);

  /// Doubled row twists t with deg m(i,j) = (t_i + t_j) / 2 for every
  /// nonzero entry, when they are determined by the nonzero entries.
  std::optional<std::vector<int>> doubled_twists() const;
  /// Expected degree of entry (i, j), if determined.
  std::optional<int> degree(std::size_t i, std::size_t j) const;

  /// Matrix with row and column i removed.
  SkewMatrix without(std::size_t i) const;

  friend bool operator==(const SkewMatrix& a, const SkewMatrix& b) {
    return a.n_ == b.n_ && a.upper_ == b.upper_;
  }

 private:
  std::size_t slot(std::size_t i, std::size_t j) const;
  RingPtr ring_;
  std::size_t n_;
  std::vector<Polynomial<F>> upper_;
};

template <class F>
SkewMatrix<F> skew_matrix_from_block(const RingPtr& ring, const MatrixBlock& block);

/// Pfaffian by expansion along row 0 with sign (-1)^{j+1} for column j.
/// Throws DomainError("odd-size") for odd sizes.
template <class F>
Polynomial<F> pfaffian(const SkewMatrix<F>& m);

/// The five 4x4 Pfaffians of a 5x5 matrix: entry i is (-1)^i times the
/// Pfaffian of the matrix without row and column i.
template <class F>
std::vector<Polynomial<F>> pfaffians_4x4(const SkewMatrix<F>& m);

/// Display order: each polynomial rescaled by +-1 so its lexicographically
/// leading coefficient is positive, sorted by weighted degree and then by
/// leading monomial, descending in lex order.
template <class F>
std::vector<Polynomial<F>> normalize_for_display(std::vector<Polynomial<F>> polys);

template <class F>
std::string format_polynomials(const std::vector<Polynomial<F>>& polys);

enum class DeformMode { ProjectiveCone, Affine };
std::string mode_name(DeformMode m);

/// Deformation of a 5x5 matrix in the format
///   ( 0  a  a  a )
///   (    a  a  a )
///   (       f1 f2)
///   (          f3)
/// placing lambda in slot (0,1) and adding h[i] to the f-slots (2,3),
/// (2,4), (3,4). In projective-cone mode every perturbation must have
/// degree at most the slot's expected degree, which forces lambda = 0 in
/// the slot of negative degree.
template <class F>
SkewMatrix<F> deform_matrix(const SkewMatrix<F>& m, const typename F::Element& lambda,
                            const std::vector<Polynomial<F>>& h, DeformMode mode);

struct JacobianRank {
  std::size_t rank = 0;
  bool on_variety = false;
};

template <class F>
JacobianRank jacobian_rank_at(const std::vector<Polynomial<F>>& polys,
                              const std::vector<typename F::Element>& point);

enum class SampleStatus { SmoothSampled, SingularWitness, NoPoints };
std::string status_name(SampleStatus s);

struct SampleVerdict {
  SampleStatus status = SampleStatus::NoPoints;
  std::size_t points_sampled = 0;
  std::size_t slices_tried = 0;
  /// First singular point found, by sampling order.
  std::optional<std::vector<std::uint32_t>> witness;
  std::optional<std::size_t> witness_rank;
};

struct SampleOptions {
  /// Slices attempted per requested point before giving up.
  std::size_t slices_per_point = 4;
};

/// Samples GF(p)-points of V(polys) on random affine slices of
/// complementary dimension and tests the Jacobian rank at each against
/// the codimension. The origin is always tested first when it lies on
/// the variety. Stops at the first singular point or after `points`
/// smooth ones. Never a proof of smoothness.
SampleVerdict smoothness_sample(const std::vector<Polynomial<PrimeField>>& polys, std::size_t expected_dim,
                                std::size_t points, std::uint64_t seed, const SampleOptions& options = {});

/// Roots in GF(p) of a univariate polynomial given by its coefficients
/// (constant term first), sorted ascending.
std::vector<std::uint32_t> roots_mod_p(std::vector<std::uint32_t> coeffs, std::uint32_t p, std::uint64_t seed);

}  // namespace conekit
