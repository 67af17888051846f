#include "conekit/poly_matrix.hpp"

#include "conekit/error.hpp"

namespace conekit {

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

template <class F>
PolyMatrix<F> jacobian_matrix(const RingPtr& ring, const std::vector<Polynomial<F>>& gens) {
  PolyMatrix<F> j;
  for (const auto& g : gens) {
    std::vector<Polynomial<F>> row;
    for (std::size_t v = 0; v < ring->num_vars(); ++v) row.push_back(g.derivative(v));
    j.push_back(std::move(row));
  }
  return j;
}

namespace {

template <class F>
Polynomial<F> det_rec(const RingPtr& ring, const PolyMatrix<F>& m, std::vector<std::size_t>& rows,
                      std::vector<std::size_t>& cols) {
  if (rows.empty()) return Polynomial<F>::from_int(ring, 1);
  std::size_t r = rows.front();
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  Polynomial<F> acc(ring);
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const auto& entry = m[r][cols[k]];
    if (entry.is_zero()) continue;
    std::vector<std::size_t> sub_cols;
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (c != k) sub_cols.push_back(cols[c]);
    Polynomial<F> minor = det_rec(ring, m, sub_rows, sub_cols);
    if (k % 2 == 0) acc += entry * minor;
    else acc -= entry * minor;
  }
  return acc;
}

}  // namespace

template <class F>
Polynomial<F> determinant(const RingPtr& ring, const PolyMatrix<F>& m) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw DomainError("not-square", "determinant needs a square matrix");
  std::vector<std::size_t> rows(m.size()), cols(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) rows[i] = cols[i] = i;
  return det_rec(ring, m, rows, cols);
}

template <class F>
std::vector<Polynomial<F>> minors(const RingPtr& ring, const PolyMatrix<F>& m, std::size_t c) {
  std::vector<Polynomial<F>> out;
  if (m.empty()) return out;
  for (auto rows : subsets(m.size(), c))
    for (auto cols : subsets(m[0].size(), c)) out.push_back(det_rec(ring, m, rows, cols));
  return out;
}

#define CONEKIT_INSTANTIATE(F)                                                                   \
  template PolyMatrix<F> jacobian_matrix<F>(const RingPtr&, const std::vector<Polynomial<F>>&); \
  template Polynomial<F> determinant<F>(const RingPtr&, const PolyMatrix<F>&);                   \
  template std::vector<Polynomial<F>> minors<F>(const RingPtr&, const PolyMatrix<F>&, std::size_t);
CONEKIT_FOR_EACH_FIELD(CONEKIT_INSTANTIATE)
#undef CONEKIT_INSTANTIATE

}  // namespace conekit
