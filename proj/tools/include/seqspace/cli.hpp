#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace seqspace::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_inconclusive = 3;

/// A flag is missing, malformed or inconsistent with the others.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Runs one subcommand. args excludes the program name. Vector input is read from `in`
/// unless --in is given; reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace seqspace::cli
