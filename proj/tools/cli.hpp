#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace conekit::cli {

inline constexpr const char* kToolVersion = "conekit 0.1.0";
inline constexpr const char* kSchema = "conekit/1";

struct Environment {
  /// Value of CONEKIT_SEED; takes precedence over --seed.
  std::optional<std::string> seed_override;
};

Environment environment_from_process();

/// Runs one command. `args` excludes the program name. Returns the exit
/// code: 0 on success, 1 for domain or usage errors, 2 for resource caps.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env = {});

std::string sha256_hex(std::string_view data);

}  // namespace conekit::cli
