#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rankforge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. `args` excludes the program name. Results go to
/// `out` (or the --out file); diagnostics go to `err` as a single line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The seed after applying the RANKFORGE_SEED override; throws on a
/// malformed environment value.
unsigned long long effective_seed(unsigned long long flag_value);

/// 12 significant digits, shortest of fixed/scientific.
std::string format_double(double v);

/// RFC 4180 quoting: fields containing ',', '"' or newlines are quoted.
std::string csv_field(const std::string& s);

}  // namespace rankforge::cli
