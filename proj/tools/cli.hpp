#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lcc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. Data goes to `out`, diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Real with a trailing ".0" when integral, "inf" for infinity.
std::string format_real(double v);

}  // namespace lcc::cli
