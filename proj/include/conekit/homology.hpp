#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conekit/groebner.hpp"

namespace conekit {

/// Graded Betti numbers beta_{p,q} = dim Tor_p(S/I, k)_{p+q} over a window
/// 0 <= p <= p_max, 0 <= q <= q_max. Cells outside the window are unknown.
class BettiTable {
 public:
  BettiTable() = default;
  BettiTable(std::size_t num_vars, int p_max, int q_max);

  std::size_t num_vars() const noexcept { return num_vars_; }
  int p_max() const noexcept { return p_max_; }
  int q_max() const noexcept { return q_max_; }

  bool in_window(int p, int q) const noexcept { return p >= 0 && q >= 0 && p <= p_max_ && q <= q_max_; }
  /// Computed value, or nullopt when (p, q) lies outside the window or
  /// its strand exceeded the size cap.
  std::optional<std::uint64_t> at(int p, int q) const;
  /// Like `at` but throws DomainError("window-too-small").
  std::uint64_t require(int p, int q) const;
  void set(int p, int q, std::uint64_t v);

  const std::map<std::pair<int, int>, std::uint64_t>& cells() const noexcept { return cells_; }

  /// Rows q, columns p, "-" for zero.
  std::string to_string() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::size_t num_vars_ = 0;
  int p_max_ = -1;
  int q_max_ = -1;
  std::map<std::pair<int, int>, std::uint64_t> cells_;
};

struct HomologyOptions {
  /// Cap on rows or columns of a single strand matrix.
  std::size_t max_strand = 200'000;
};

/// beta_{p,q} as the middle homology of
///   L^{p+1} V (x) R_{q-1} -> L^p V (x) R_q -> L^{p-1} V (x) R_{q+1}
/// with V the linear forms and R = S/I. Standard grading only.
template <class F>
std::uint64_t koszul_betti(const Ideal<F>& ideal, int p, int q, const HomologyOptions& options = {});

/// Cells whose strands exceed the size cap are left unknown.
template <class F>
BettiTable betti_table(const Ideal<F>& ideal, int p_max, int q_max, const HomologyOptions& options = {});

struct CriterionResult {
  bool holds = false;
  std::string reason;
};

/// True when the resolution starts O <- O(-2)^a <- O(-3)^b with a > 0:
/// beta_{1,1} > 0 and beta_{1,q} = beta_{2,q} = 0 for every q >= 2 in the
/// window. Throws DomainError("window-too-small") unless (1,2) and (2,2)
/// are in the window.
CriterionResult wahl_criterion(const BettiTable& table);

/// For a genus-g K3 or canonical curve table: checks that
/// (beta_{1,2} = beta_{2,2} = 0) is equivalent to
/// (beta_{g-3,1} = beta_{g-4,1} = 0). Throws DomainError("window-too-small").
bool koszul_duality_check(const BettiTable& table, int g);

struct DualityResult {
  bool ok = true;
  std::size_t pairs_checked = 0;
  std::optional<std::pair<int, int>> first_violation;
};

/// beta_{p,q} = beta_{c-p, r-q} on every pair of in-window cells.
DualityResult gorenstein_duality(const BettiTable& table, int c, int r);

struct EulerResult {
  bool ok = true;
  /// Degrees t whose antidiagonal p + q = t lies fully inside the window.
  std::vector<int> degrees_checked;
  std::optional<int> first_violation;
};

/// Checks sum_p (-1)^p beta_{p,t-p} = sum_p (-1)^p C(n,p) HF(t-p) on
/// every fully computed antidiagonal.
template <class F>
EulerResult euler_check(const BettiTable& table, const Ideal<F>& ideal);

}  // namespace conekit
