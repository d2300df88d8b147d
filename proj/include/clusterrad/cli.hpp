#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace clusterrad::cli {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

/// Runs one subcommand. `args` excludes the program name. Reports go to `out`
/// unless --out is given; errors go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Formats a double with 17 significant digits; empty for NaN.
std::string formatReal(double x);

/// Parses A:B:N[:log] into N points.
std::vector<double> parseBetaSweep(const std::string& text);

}  // namespace clusterrad::cli
