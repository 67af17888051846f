#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "conekit/graded_dims.hpp"
#include "conekit/groebner.hpp"

namespace conekit {

enum class T1Method { JacobianRing, CompleteIntersection, NormalModule };

/// "jacobian-ring", "complete-intersection" or "normal-module".
std::string method_name(T1Method m);

struct T1Report {
  GradedDims dims;
  T1Method method = T1Method::NormalModule;
  CoefficientField field = CoefficientField::default_field();
  std::uint64_t seed = 0;
  /// a-invariant of S/I: the twist c with canonical module S/I(c).
  int center = 0;
  /// Largest syzygy degree examined (normal-module method only).
  std::uint32_t syzygy_bound = 0;
};

struct T1Options {
  /// Verify that the singular locus of the cone is the vertex. Always on
  /// for the hypersurface and complete-intersection methods.
  bool check_isolated = false;
  /// Recorded in the report; generation of random data happens elsewhere.
  std::uint64_t seed = 0;
  /// Cap on the dimension of any single linear-algebra problem.
  std::size_t max_problem_size = 2'000'000;
};

/// Minimal syzygy generators among the ideal's generators in one degree.
/// Each generator is a vector (s_1..s_r) with sum s_i f_i = 0 and
/// deg s_i = degree - deg f_i.
template <class F>
struct SyzygyBlock {
  std::uint32_t degree = 0;
  std::vector<std::vector<Polynomial<F>>> generators;
};

/// Degree by which the syzygy module is generated: the largest degree of
/// an lcm of leading monomials over the basis pairs that are not strictly
/// chain-dominated, or the largest generator degree if that is bigger.
template <class F>
std::uint32_t syzygy_degree_bound(const Ideal<F>& ideal);

/// Minimal syzygy generators in degrees up to max_degree, one block per
/// degree that contributes new generators.
template <class F>
std::vector<SyzygyBlock<F>> syzygies(const Ideal<F>& ideal, std::uint32_t max_degree,
                                     std::size_t max_problem_size = 2'000'000);

/// Hilbert series numerator of S/in(I) equals prod (1 - t^{d_i}).
template <class F>
bool is_regular_sequence(const Ideal<F>& ideal);

/// a-invariant: degree of the Hilbert series as a rational function.
template <class F>
int a_invariant(const Ideal<F>& ideal);

/// True when I plus the maximal minors of the Jacobian matrix is primary
/// to the irrelevant ideal. `codim` is the expected codimension.
template <class F>
bool has_isolated_singularity(const Ideal<F>& ideal, std::size_t codim);

template <class F>
T1Report t1_hypersurface(const Polynomial<F>& f, int k_min, int k_max, const T1Options& options = {});

template <class F>
T1Report t1_complete_intersection(const Ideal<F>& ideal, int k_min, int k_max, const T1Options& options = {});

template <class F>
T1Report t1_graded(const Ideal<F>& ideal, int k_min, int k_max, const T1Options& options = {});

/// Chooses the Jacobian ring for one generator, the complete-intersection
/// formula for regular sequences, and the normal module otherwise.
template <class F>
T1Report t1_auto(const Ideal<F>& ideal, int k_min, int k_max, const T1Options& options = {});

struct SymmetryResult {
  bool ok = true;
  /// Smallest k with both c-k and c+k in range and different dimensions.
  std::optional<int> first_violation;
  /// Number of pairs (c-k, c+k) that could be compared.
  std::size_t pairs_checked = 0;
};

/// Throws DomainError("asymmetric-range") unless the range is symmetric about c.
SymmetryResult check_t1_symmetry(const T1Report& report, int c);

/// Pieces of degree k*index, re-indexed by k, for every k with k*index in
/// the range of `dims`.
GradedDims restrict_to_multiples(const GradedDims& dims, int index);

/// Homogeneous ideal of the Veronese subring (S/I)^{(index)} in the
/// variables y0..y{N-1} for the standard monomials of degree `index`,
/// with generators of y-degree up to max_degree.
template <class F>
Ideal<F> veronese_ideal(const Ideal<F>& ideal, std::uint32_t index, std::uint32_t max_degree);

}  // namespace conekit
