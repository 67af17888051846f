#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace conekit {

/// Sparse vector: (index, nonzero value) pairs sorted by index.
template <class F>
using SparseVec = std::vector<std::pair<std::uint32_t, typename F::Element>>;

/// Incremental row-echelon form over F. Each stored row is monic at its
/// pivot, which is its smallest index.
template <class F>
class Echelon {
 public:
  using Element = typename F::Element;

  Echelon(F field, std::size_t ncols)
      : field_(std::move(field)), ncols_(ncols), pivot_row_(ncols, -1), acc_(ncols, field_.zero()),
        touched_(ncols, 0) {}

  std::size_t ncols() const noexcept { return ncols_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  const std::vector<SparseVec<F>>& rows() const noexcept { return rows_; }

  /// Reduces `v` against the stored rows; returns the remainder.
  SparseVec<F> reduce(const SparseVec<F>& v) {
    if (v.empty()) return {};
    std::vector<std::uint32_t> support;
    for (const auto& [i, c] : v) {
      acc_[i] = c;
      touched_[i] = 1;
      support.push_back(i);
    }
    std::make_heap(support.begin(), support.end(), std::greater<>());
    SparseVec<F> out;
    while (!support.empty()) {
      std::pop_heap(support.begin(), support.end(), std::greater<>());
      std::uint32_t col = support.back();
      support.pop_back();
      touched_[col] = 0;
      Element c = std::move(acc_[col]);
      acc_[col] = field_.zero();
      if (field_.is_zero(c)) continue;
      int r = pivot_row_[col];
      if (r < 0) {
        out.emplace_back(col, std::move(c));
        continue;
      }
      const auto& row = rows_[static_cast<std::size_t>(r)];
      for (std::size_t k = 1; k < row.size(); ++k) {
        std::uint32_t j = row[k].first;
        acc_[j] = field_.sub(acc_[j], field_.mul(c, row[k].second));
        if (!touched_[j]) {
          touched_[j] = 1;
          support.push_back(j);
          std::push_heap(support.begin(), support.end(), std::greater<>());
        }
      }
    }
    return out;
  }

  /// Adds `v` to the row space; returns false when it was already contained.
  bool insert(const SparseVec<F>& v) {
    SparseVec<F> r = reduce(v);
    if (r.empty()) return false;
    Element inv = field_.inv(r.front().second);
    for (auto& e : r) e.second = field_.mul(e.second, inv);
    pivot_row_[r.front().first] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(r));
    return true;
  }

  bool contains(const SparseVec<F>& v) { return reduce(v).empty(); }

  /// Basis of {x : row . x = 0 for every stored row}, as sparse vectors.
  std::vector<SparseVec<F>> nullspace() const {
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return rows_[a].front().first > rows_[b].front().first; });
    std::vector<SparseVec<F>> reduced(rows_.size());
    std::vector<int> pivot_of(ncols_, -1);
    std::vector<Element> acc(ncols_, field_.zero());
    for (std::size_t idx : order) {
      const auto& row = rows_[idx];
      for (const auto& [j, c] : row) acc[j] = c;
      for (const auto& [j, c] : row) {
        (void)c;
        if (j == row.front().first) continue;
        int q = pivot_of[j];
        if (q < 0 || field_.is_zero(acc[j])) continue;
        Element f = acc[j];
        for (const auto& [jj, cc] : reduced[static_cast<std::size_t>(q)])
          acc[jj] = field_.sub(acc[jj], field_.mul(f, cc));
      }
      SparseVec<F> out;
      for (std::uint32_t j = row.front().first; j < ncols_; ++j) {
        if (!field_.is_zero(acc[j])) out.emplace_back(j, acc[j]);
        acc[j] = field_.zero();
      }
      pivot_of[row.front().first] = static_cast<int>(idx);
      reduced[idx] = std::move(out);
    }
    std::vector<SparseVec<F>> basis;
    std::vector<std::vector<std::pair<std::uint32_t, Element>>> by_free(ncols_);
    for (const auto& row : reduced)
      for (std::size_t k = 1; k < row.size(); ++k)
        by_free[row[k].first].emplace_back(row.front().first, field_.neg(row[k].second));
    for (std::uint32_t f = 0; f < ncols_; ++f) {
      if (pivot_of[f] >= 0) continue;
      SparseVec<F> v = by_free[f];
      v.emplace_back(f, field_.one());
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  F field_;
  std::size_t ncols_;
  std::vector<int> pivot_row_;
  std::vector<SparseVec<F>> rows_;
  std::vector<Element> acc_;
  std::vector<char> touched_;
};

/// Rank of the matrix whose rows are `rows`.
template <class F>
std::size_t matrix_rank(const F& field, std::size_t ncols, const std::vector<SparseVec<F>>& rows) {
  Echelon<F> e(field, ncols);
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

/// Basis of the right kernel {x : A x = 0}, A given by its rows.
template <class F>
std::vector<SparseVec<F>> right_kernel(const F& field, std::size_t ncols,
                                       const std::vector<SparseVec<F>>& rows) {
  Echelon<F> e(field, ncols);
  for (const auto& r : rows) e.insert(r);
  return e.nullspace();
}

/// Dot product of two sparse vectors.
template <class F>
typename F::Element sparse_dot(const F& field, const SparseVec<F>& a, const SparseVec<F>& b) {
  auto s = field.zero();
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) ++i;
    else if (a[i].first > b[j].first) ++j;
    else s = field.add(s, field.mul(a[i++].second, b[j++].second));
  }
  return s;
}

}  // namespace conekit
