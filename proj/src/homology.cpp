#include "conekit/homology.hpp"

#include <sstream>

#include "conekit/error.hpp"
#include "conekit/linalg.hpp"
#include "conekit/poly_matrix.hpp"

namespace conekit {

BettiTable::BettiTable(std::size_t num_vars, int p_max, int q_max)
    : num_vars_(num_vars), p_max_(p_max), q_max_(q_max) {}

std::optional<std::uint64_t> BettiTable::at(int p, int q) const {
  if (!in_window(p, q)) return std::nullopt;
  auto it = cells_.find({p, q});
  if (it == cells_.end()) return std::nullopt;
  return it->second;
}

std::uint64_t BettiTable::require(int p, int q) const {
  auto v = at(p, q);
  if (!v)
    throw DomainError("window-too-small", "Betti number (" + std::to_string(p) + "," + std::to_string(q) +
                                              ") is outside the computed window");
  return *v;
}

void BettiTable::set(int p, int q, std::uint64_t v) {
  if (!in_window(p, q)) throw DomainError("window-too-small", "cell outside the table window");
  cells_[{p, q}] = v;
}

std::string BettiTable::to_string() const {
  std::ostringstream out;
  out << "q\\p";
  for (int p = 0; p <= p_max_; ++p) out << '\t' << p;
  out << '\n';
  for (int q = 0; q <= q_max_; ++q) {
    out << q;
    for (int p = 0; p <= p_max_; ++p) {
      auto v = at(p, q);
      out << '\t' << (!v ? "?" : *v == 0 ? "-" : std::to_string(*v));
    }
    out << '\n';
  }
  return out.str();
}

namespace {

template <class F>
class KoszulStrands {
 public:
  KoszulStrands(const Ideal<F>& ideal, const HomologyOptions& options)
      : n_(ideal.ring().num_vars()), options_(options), quotient_(ideal.groebner_ptr()) {
    if (!ideal.ring().is_standard_graded())
      throw DomainError("weighted-ring", "Betti numbers are computed for standard-graded rings only");
  }

  std::size_t chain_dim(int p, int q) {
    if (p < 0 || q < 0 || static_cast<std::size_t>(p) > n_) return 0;
    return wedge_basis(p).size() * quotient_.dim(q);
  }

  /// Rank of d: L^p V (x) R_q -> L^{p-1} V (x) R_{q+1}.
  std::size_t rank(int p, int q) {
    if (p <= 0 || q < 0 || static_cast<std::size_t>(p) > n_) return 0;
    auto key = std::make_pair(p, q);
    if (auto it = ranks_.find(key); it != ranks_.end()) return it->second;

    const auto& src = wedge_basis(p);
    const auto& dst = wedge_basis(p - 1);
    const auto& mons = quotient_.basis(q);
    const std::size_t target_block = quotient_.dim(q + 1);
    const std::size_t cols = dst.size() * target_block;
    if (src.size() * mons.size() > options_.max_strand || cols > options_.max_strand)
      throw ResourceError("strand-size", "Koszul strand (" + std::to_string(p) + "," + std::to_string(q) +
                                             ") exceeds the size cap of " + std::to_string(options_.max_strand));

    std::map<std::vector<std::size_t>, std::size_t> dst_index;
    for (std::size_t i = 0; i < dst.size(); ++i) dst_index.emplace(dst[i], i);
    const auto& ring = quotient_.ring();
    F field = quotient_.field();
    Echelon<F> ech(field, cols);
    for (const auto& subset : src) {
      for (const auto& m : mons) {
        SparseVec<F> image;
        for (std::size_t s = 0; s < subset.size(); ++s) {
          std::vector<std::size_t> rest;
          for (std::size_t t = 0; t < subset.size(); ++t)
            if (t != s) rest.push_back(subset[t]);
          std::size_t offset = dst_index.at(rest) * target_block;
          SparseVec<F> piece;
          auto sign = s % 2 == 0 ? field.one() : field.neg(field.one());
          for (const auto& [i, c] : quotient_.normal_form(m * ring.variable(subset[s])))
            piece.emplace_back(static_cast<std::uint32_t>(offset + i), field.mul(sign, c));
          axpy(field, image, field.one(), piece);
        }
        ech.insert(image);
      }
    }
    ranks_[key] = ech.rank();
    return ech.rank();
  }

  std::uint64_t betti(int p, int q) {
    if (p < 0 || q < 0) throw DomainError("negative-index", "Betti indices must be non-negative");
    if (static_cast<std::size_t>(p) > n_) return 0;
    return chain_dim(p, q) - rank(p, q) - rank(p + 1, q - 1);
  }

 private:
  const std::vector<std::vector<std::size_t>>& wedge_basis(int p) {
    auto it = wedges_.find(p);
    if (it == wedges_.end()) it = wedges_.emplace(p, subsets(n_, static_cast<std::size_t>(p))).first;
    return it->second;
  }

  std::size_t n_;
  HomologyOptions options_;
  QuotientRing<F> quotient_;
  std::map<int, std::vector<std::vector<std::size_t>>> wedges_;
  std::map<std::pair<int, int>, std::size_t> ranks_;
};

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

template <class F>
std::uint64_t koszul_betti(const Ideal<F>& ideal, int p, int q, const HomologyOptions& options) {
  KoszulStrands<F> strands(ideal, options);
  return strands.betti(p, q);
}

template <class F>
BettiTable betti_table(const Ideal<F>& ideal, int p_max, int q_max, const HomologyOptions& options) {
  if (p_max < 0 || q_max < 0) throw DomainError("window-too-small", "empty Betti window");
  KoszulStrands<F> strands(ideal, options);
  BettiTable table(ideal.ring().num_vars(), p_max, q_max);
  for (int p = 0; p <= p_max; ++p)
    for (int q = 0; q <= q_max; ++q) {
      try {
        table.set(p, q, strands.betti(p, q));
      } catch (const ResourceError&) {
        // Left unknown: the strand is too large.
      }
    }
  return table;
}

CriterionResult wahl_criterion(const BettiTable& table) {
  table.require(1, 2);
  table.require(2, 2);
  if (table.require(1, 1) == 0) return {false, "no quadric strand: the ideal has no quadric generators"};
  for (int p = 1; p <= 2; ++p)
    for (int q = 2; q <= table.q_max(); ++q)
      if (table.require(p, q) != 0)
        return {false, "beta_{" + std::to_string(p) + "," + std::to_string(q) + "} = " +
                           std::to_string(table.require(p, q)) + " is nonzero"};
  return {true, "resolution starts with quadrics and their linear syzygies"};
}

bool koszul_duality_check(const BettiTable& table, int g) {
  if (g < 4) throw DomainError("window-too-small", "genus must be at least 4 for the dual cells to exist");
  bool lhs = table.require(1, 2) == 0 && table.require(2, 2) == 0;
  bool rhs = table.require(g - 3, 1) == 0 && table.require(g - 4, 1) == 0;
  return lhs == rhs;
}

DualityResult gorenstein_duality(const BettiTable& table, int c, int r) {
  DualityResult res;
  for (const auto& [cell, v] : table.cells()) {
    auto [p, q] = cell;
    auto dual = table.at(c - p, r - q);
    if (!dual || std::make_pair(c - p, r - q) < cell) continue;
    ++res.pairs_checked;
    if (*dual != v && res.ok) {
      res.ok = false;
      res.first_violation = cell;
    }
  }
  return res;
}

template <class F>
EulerResult euler_check(const BettiTable& table, const Ideal<F>& ideal) {
  EulerResult res;
  const auto& gb = ideal.groebner();
  const auto n = static_cast<int>(table.num_vars());
  for (int t = 0; t <= table.p_max() + table.q_max(); ++t) {
    bool covered = true;
    for (int p = 0; p <= std::min(n, t); ++p) covered = covered && table.at(p, t - p).has_value();
    if (!covered) continue;
    res.degrees_checked.push_back(t);
    std::int64_t lhs = 0, rhs = 0;
    for (int p = 0; p <= std::min(n, t); ++p) {
      std::int64_t sign = p % 2 == 0 ? 1 : -1;
      lhs += sign * static_cast<std::int64_t>(table.require(p, t - p));
      rhs += sign * binomial(n, p) * static_cast<std::int64_t>(gb.hilbert_value(static_cast<std::uint32_t>(t - p)));
    }
    if (lhs != rhs && res.ok) {
      res.ok = false;
      res.first_violation = t;
    }
  }
  return res;
}

#define CONEKIT_INSTANTIATE(F)                                                                             \
  template std::uint64_t koszul_betti<F>(const Ideal<F>&, int, int, const HomologyOptions&);               \
  template BettiTable betti_table<F>(const Ideal<F>&, int, int, const HomologyOptions&);                   \
  template EulerResult euler_check<F>(const BettiTable&, const Ideal<F>&);
CONEKIT_FOR_EACH_FIELD(CONEKIT_INSTANTIATE)
#undef CONEKIT_INSTANTIATE

}  // namespace conekit
