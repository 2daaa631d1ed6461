#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tco::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;

/// Environment variable naming the default catalog file.
inline constexpr const char* kCatalogEnv = "TCO_CATALOG";

/// Runs the tool with `args` (excluding the program name). Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace tco::cli
