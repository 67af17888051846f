#pragma once

#include <cstdint>
#include <random>

namespace conekit {

/// Seeded generator with a platform-independent integer mapping, so the
/// same seed yields the same models on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

  /// Nonzero integer in [-r, r].
  std::int64_t nonzero(std::int64_t r) {
    std::int64_t v = uniform(-r, r - 1);
    return v >= 0 ? v + 1 : v;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace conekit
