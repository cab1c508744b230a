#include "seqspace/config.hpp"

#include "seqspace/error.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace seqspace {

namespace {

using nlohmann::json;

[[noreturn]] void config_fail(const std::string& what) {
    throw Error(ErrorCode::parse_error, "config: " + what);
}

double number_field(const json& j, const char* key) {
    if (!j.is_number()) config_fail(std::string("'") + key + "' must be a number");
    return j.get<double>();
}

std::vector<double> number_array(const json& j, const char* key) {
    if (!j.is_array()) config_fail(std::string("'") + key + "' must be an array of numbers");
    std::vector<double> out;
    for (const auto& e : j) {
        if (!e.is_number()) config_fail(std::string("'") + key + "' must contain only numbers");
        out.push_back(e.get<double>());
    }
    return out;
}

Preset parse_preset(const json& j, std::size_t n) {
    Preset preset;
    std::string name;
    if (j.is_string()) {
        name = j.get<std::string>();
    } else if (j.is_object() && j.contains("preset") && j["preset"].is_string()) {
        name = j["preset"].get<std::string>();
    } else {
        config_fail("preset descriptor needs a string 'preset'");
    }
    const auto kind = parse_preset_kind(name);
    if (!kind) config_fail("unknown preset '" + name + "'");
    preset.kind = *kind;
    if (j.is_object()) {
        if (j.contains("alpha")) preset.alpha = number_field(j["alpha"], "alpha");
        if (j.contains("q")) preset.seq1 = number_array(j["q"], "q");
        if (j.contains("lambda")) preset.seq1 = number_array(j["lambda"], "lambda");
        if (j.contains("r_prime")) preset.seq1 = number_array(j["r_prime"], "r_prime");
        if (j.contains("s_prime")) preset.seq2 = number_array(j["s_prime"], "s_prime");
    }
    if (preset.kind == PresetKind::lambda_seq && preset.seq1.empty()) {
        for (std::size_t k = 0; k < n; ++k) preset.seq1.push_back(static_cast<double>(k + 1));
    }
    return preset;
}

std::vector<double> sequence_field(const json& j, const char* key, std::size_t n, char which) {
    if (j.is_array()) return number_array(j, key);
    const auto g = preset_sequences(parse_preset(j, n), n);
    return which == 'r' ? g.r : which == 's' ? g.s : g.t;
}

void read_tolerances(const json& j, Tolerances& tol) {
    if (!j.is_object()) config_fail("'tolerances' must be an object");
    for (const auto& [key, value] : j.items()) {
        auto num = [&] { return number_field(value, key.c_str()); };
        auto count = [&] {
            if (!value.is_number_unsigned()) config_fail("'" + key + "' must be a positive integer");
            return value.get<std::size_t>();
        };
        if (key == "tol_zero") tol.tol_zero = num();
        else if (key == "bounded_rel") tol.bounded_rel = num();
        else if (key == "growth_delta") tol.growth_delta = num();
        else if (key == "stability_rel") tol.stability_rel = num();
        else if (key == "stability_window") tol.stability_window = count();
        else if (key == "limsup_rel") tol.limsup_rel = num();
        else if (key == "basis_limit_spread") tol.basis_limit_spread = num();
        else if (key == "basis_limit_window") tol.basis_limit_window = count();
        else if (key == "subset_window") tol.subset_window = count();
        else if (key == "tail_ratio_warn") tol.tail_ratio_warn = num();
        else config_fail("unknown tolerance '" + key + "'");
    }
    if (tol.subset_window == 0 || tol.subset_window > 20) {
        config_fail("'subset_window' must be between 1 and 20");
    }
}

} // namespace

std::string_view to_string(OutputFormat f) {
    switch (f) {
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
    case OutputFormat::plain: return "plain";
    }
    return "unknown";
}

std::optional<OutputFormat> parse_output_format(std::string_view name) {
    for (auto f : {OutputFormat::json, OutputFormat::csv, OutputFormat::plain}) {
        if (to_string(f) == name) return f;
    }
    return std::nullopt;
}

RunConfig parse_run_config(std::string_view json_text, std::optional<std::size_t> n_override) {
    json j;
    try {
        j = json::parse(json_text.begin(), json_text.end());
    } catch (const json::parse_error& e) {
        config_fail(e.what());
    }
    if (!j.is_object()) config_fail("top level must be an object");

    RunConfig cfg;
    if (n_override) {
        cfg.n = *n_override;
    } else if (j.contains("N")) {
        if (!j["N"].is_number_unsigned()) config_fail("'N' must be a positive integer");
        cfg.n = j["N"].get<std::size_t>();
    } else {
        config_fail("'N' is required");
    }
    if (cfg.n < 4) config_fail("'N' must be at least 4");
    const std::size_t n = cfg.n;

    const double u = j.contains("u") ? number_field(j["u"], "u") : 1.0;
    const double v = j.contains("v") ? number_field(j["v"], "v") : -1.0;

    std::optional<GeneratingSequences> seqs;
    if (j.contains("preset")) seqs = preset_sequences(parse_preset(j["preset"], n), n);
    const bool any = j.contains("r") || j.contains("s") || j.contains("t");
    if (seqs || any) {
        GeneratingSequences g = seqs.value_or(GeneratingSequences{});
        if (j.contains("r")) g.r = sequence_field(j["r"], "r", n, 'r');
        if (j.contains("s")) g.s = sequence_field(j["s"], "s", n, 's');
        if (j.contains("t")) g.t = sequence_field(j["t"], "t", n, 't');
        cfg.params = make_paramset(g.r, g.s, g.t, u, v, n);
    }

    if (j.contains("p")) {
        const auto& pj = j["p"];
        if (pj.is_number()) {
            cfg.p = ExponentSeq::constant(pj.get<double>(), n);
        } else {
            cfg.p = ExponentSeq(number_array(pj, "p"), n);
        }
    }

    if (j.contains("schedule")) {
        if (!j["schedule"].is_array()) config_fail("'schedule' must be an array");
        for (const auto& e : j["schedule"]) {
            if (!e.is_number_unsigned()) config_fail("'schedule' entries must be positive integers");
            cfg.schedule.push_back(e.get<std::size_t>());
        }
        for (std::size_t i = 0; i < cfg.schedule.size(); ++i) {
            const auto m = cfg.schedule[i];
            if (m == 0 || m > n || (i > 0 && m <= cfg.schedule[i - 1])) {
                config_fail("'schedule' must be strictly increasing and bounded by N");
            }
        }
        if (cfg.schedule.empty()) config_fail("'schedule' must not be empty");
    } else {
        cfg.schedule = default_schedule(n);
    }

    if (j.contains("tolerances")) read_tolerances(j["tolerances"], cfg.tol);
    if (j.contains("format")) {
        const auto f = j["format"].is_string()
                           ? parse_output_format(j["format"].get<std::string>())
                           : std::nullopt;
        if (!f) config_fail("'format' must be one of json, csv, plain");
        cfg.format = *f;
    }
    if (j.contains("space")) {
        const auto s = j["space"].is_string() ? parse_space_kind(j["space"].get<std::string>())
                                              : std::nullopt;
        if (!s) config_fail("'space' must be one of l, c0, c, linf");
        cfg.space = *s;
    }
    apply_env_overrides(cfg.tol);
    return cfg;
}

RunConfig load_run_config(const std::filesystem::path& path,
                          std::optional<std::size_t> n_override) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::parse_error, "cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_run_config(buf.str(), n_override);
}

void apply_env_overrides(Tolerances& tol) {
    const char* raw = std::getenv("SEQSPACE_TOL_ZERO");
    if (raw == nullptr || *raw == '\0') return;
    char* end = nullptr;
    const double value = std::strtod(raw, &end);
    if (end == raw || *end != '\0' || !(value > 0.0)) {
        throw Error(ErrorCode::parse_error,
                    std::string("SEQSPACE_TOL_ZERO must be a positive number, got '") + raw + "'");
    }
    tol.tol_zero = value;
}

} // namespace seqspace
