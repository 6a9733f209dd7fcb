#ifndef WALKMAP_CLI_HPP
#define WALKMAP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace walkmap::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;  // not homotopic / not spherical / inconclusive
inline constexpr int kMalformedJson = 2;
inline constexpr int kSchema = 3;
inline constexpr int kRotation = 4;
inline constexpr int kBadArgument = 5;  // unparsable or invalid walk, mismatched endpoints
inline constexpr int kIoError = 6;
inline constexpr int kUsage = 64;

/// Runs one command. `args` excludes the program name. The Report JSON goes
/// to `out`; usage text and help go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace walkmap::cli

#endif  // WALKMAP_CLI_HPP
