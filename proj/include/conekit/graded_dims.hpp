#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "conekit/error.hpp"

namespace conekit {

/// Dimensions indexed by degree over a declared range [k_min, k_max].
/// Degrees outside the range are unknown, not zero.
class GradedDims {
 public:
  GradedDims() = default;
  GradedDims(int k_min, int k_max)
      : k_min_(k_min), k_max_(k_max), dims_(k_max >= k_min ? static_cast<std::size_t>(k_max - k_min + 1) : 0, 0) {
    if (k_max < k_min) throw DomainError("bad-range", "empty degree range");
  }

  int k_min() const noexcept { return k_min_; }
  int k_max() const noexcept { return k_max_; }
  bool contains(int k) const noexcept { return k >= k_min_ && k <= k_max_; }

  std::uint64_t at(int k) const {
    if (!contains(k))
      throw DomainError("degree-out-of-range", "degree " + std::to_string(k) + " outside computed range [" +
                                                    std::to_string(k_min_) + ", " + std::to_string(k_max_) + "]");
    return dims_[static_cast<std::size_t>(k - k_min_)];
  }
  void set(int k, std::uint64_t v) {
    at(k);
    dims_[static_cast<std::size_t>(k - k_min_)] = v;
  }
  /// Dimensions in degree order.
  const std::vector<std::uint64_t>& values() const noexcept { return dims_; }

  friend bool operator==(const GradedDims&, const GradedDims&) = default;

 private:
  int k_min_ = 0;
  int k_max_ = -1;
  std::vector<std::uint64_t> dims_;
};

}  // namespace conekit
