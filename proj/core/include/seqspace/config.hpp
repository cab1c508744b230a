#pragma once

#include "seqspace/duality.hpp"
#include "seqspace/params.hpp"
#include "seqspace/tolerances.hpp"

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string_view>
#include <vector>

namespace seqspace {

enum class OutputFormat { json, csv, plain };
std::string_view to_string(OutputFormat f);
std::optional<OutputFormat> parse_output_format(std::string_view name);

/// Everything a batch run needs, read from a JSON config.
///
/// Keys: "N"; "u", "v" (default 1, -1); "r", "s", "t" as arrays or preset descriptors
/// {"preset": name, "alpha": .., "q": [..], "lambda": [..], "r_prime": [..], "s_prime": [..]};
/// a top-level "preset" (name or descriptor) supplies all three at once and explicit
/// "r"/"s"/"t" entries override it; "p" as a number or array; "schedule"; "tolerances"
/// (any Tolerances field by name); "format"; "space".
struct RunConfig {
    std::size_t n = 0;
    std::optional<ParamSet> params;
    std::optional<ExponentSeq> p;
    std::vector<std::size_t> schedule;
    Tolerances tol;
    /// Unset means the subcommand default: plain for vectors, json for reports.
    std::optional<OutputFormat> format;
    SpaceKind space = SpaceKind::l;
};

/// Parses a config. n_override replaces "N". Requires N >= 4 and a strictly increasing
/// schedule bounded by N. Throws ParseError or the validation error of the offending field.
RunConfig parse_run_config(std::string_view json_text,
                           std::optional<std::size_t> n_override = std::nullopt);
RunConfig load_run_config(const std::filesystem::path& path,
                          std::optional<std::size_t> n_override = std::nullopt);

/// Applies SEQSPACE_TOL_ZERO from the environment, if set. Throws ParseError if malformed.
void apply_env_overrides(Tolerances& tol);

} // namespace seqspace
