#pragma once

#include <cstddef>
#include <vector>

#include "conekit/polynomial.hpp"

namespace conekit {

template <class F>
using PolyMatrix = std::vector<std::vector<Polynomial<F>>>;

/// Matrix of partial derivatives d gens[i] / d x_j.
template <class F>
PolyMatrix<F> jacobian_matrix(const RingPtr& ring, const std::vector<Polynomial<F>>& gens);

/// Determinant by cofactor expansion along the first row.
template <class F>
Polynomial<F> determinant(const RingPtr& ring, const PolyMatrix<F>& m);

/// All c x c minors of an r x n matrix, rows and columns taken in
/// lexicographic order of index subsets.
template <class F>
std::vector<Polynomial<F>> minors(const RingPtr& ring, const PolyMatrix<F>& m, std::size_t c);

/// Index subsets of {0..n-1} of size k in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k);

}  // namespace conekit
