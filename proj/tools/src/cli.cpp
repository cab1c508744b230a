#include "seqspace/cli.hpp"

#include "seqspace/basis.hpp"
#include "seqspace/config.hpp"
#include "seqspace/duality.hpp"
#include "seqspace/error.hpp"
#include "seqspace/io.hpp"
#include "seqspace/mnc.hpp"
#include "seqspace/selftest.hpp"
#include "seqspace/transform.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>

namespace seqspace::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
    std::string config;
    std::string in;
    std::string matrix;
    std::string a;
    double p = 0.0;
    std::string p_file;
    std::size_t n = 0;
    std::string target;
    std::string which;
    int j = 0;
    bool strict = false;
    std::string format;

    CLI::Option* p_opt = nullptr;
    CLI::Option* n_opt = nullptr;
    CLI::Option* j_opt = nullptr;
};

struct Io {
    std::istream& in;
    std::ostream& out;
};

enum class Output { vector, report };

OutputFormat pick_format(const Options& o, const std::optional<OutputFormat>& from_config,
                         Output kind) {
    if (!o.format.empty()) {
        const auto f = parse_output_format(o.format);
        if (!f) throw UsageError("--format must be one of json, csv, plain");
        return *f;
    }
    if (from_config) return *from_config;
    return kind == Output::vector ? OutputFormat::plain : OutputFormat::json;
}

std::optional<std::size_t> n_override(const Options& o) {
    if (o.n_opt->count() == 0) return std::nullopt;
    return o.n;
}

RunConfig load(const Options& o) {
    if (o.config.empty()) throw UsageError("--config is required");
    return load_run_config(o.config, n_override(o));
}

const ParamSet& params_of(const RunConfig& cfg) {
    if (!cfg.params) throw UsageError("--config does not define r, s and t");
    return *cfg.params;
}

ExponentSeq exponents(const Options& o, const RunConfig& cfg) {
    if (o.p_opt->count() > 0 && !o.p_file.empty()) {
        throw UsageError("--p and --p-file are mutually exclusive");
    }
    if (o.p_opt->count() > 0) return ExponentSeq::constant(o.p, cfg.n);
    if (!o.p_file.empty()) return ExponentSeq(read_vector_file(o.p_file), cfg.n);
    if (cfg.p) return *cfg.p;
    throw UsageError("--p or --p-file is required");
}

double scalar_exponent(const Options& o, const RunConfig& cfg) {
    if (o.p_opt->count() > 0) return o.p;
    if (!o.p_file.empty()) throw UsageError("--p-file is not accepted here; use --p");
    if (cfg.p && cfg.p->is_constant()) return (*cfg.p)[0];
    throw UsageError("--p is required");
}

std::vector<double> fit_length(std::vector<double> v, std::size_t n, const char* flag) {
    if (v.size() > n) {
        throw UsageError(std::string(flag) + " holds " + std::to_string(v.size()) +
                         " values but N = " + std::to_string(n));
    }
    v.resize(n, 0.0);
    return v;
}

std::vector<double> input_vector(const Options& o, Io io, std::size_t n) {
    auto v = o.in.empty() ? read_vector(io.in) : read_vector_file(o.in);
    return fit_length(std::move(v), n, "--in");
}

DenseMatrix input_matrix(const Options& o, std::size_t n) {
    if (o.matrix.empty()) throw UsageError("--A is required");
    auto m = read_matrix_csv_file(o.matrix, n, n);
    if (m.rows() > n || m.cols() > n) throw UsageError("--A has indices beyond N - 1");
    return m;
}

Json number(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

Json numbers(std::span<const double> xs) {
    Json a = Json::array();
    for (double x : xs) a.push_back(number(x));
    return a;
}

void emit_vector(std::ostream& out, std::span<const double> v, OutputFormat f) {
    switch (f) {
    case OutputFormat::plain: write_vector(out, v); break;
    case OutputFormat::csv:
        out << "k,value\n";
        for (std::size_t k = 0; k < v.size(); ++k) out << k << ',' << format_double(v[k]) << '\n';
        break;
    case OutputFormat::json: out << Json{{"values", numbers(v)}}.dump(2) << '\n'; break;
    }
}

std::string join(std::span<const double> xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ' ';
        s += format_double(xs[i]);
    }
    return s;
}

// transform, inverse, basis, expand, reconstruct

int cmd_transform(const Options& o, Io io, bool inverse_direction) {
    const auto cfg = load(o);
    const auto& params = params_of(cfg);
    const auto x = input_vector(o, io, cfg.n);
    const auto y = inverse_direction ? inverse(params, x) : forward(params, x);
    emit_vector(io.out, y, pick_format(o, cfg.format, Output::vector));
    return exit_ok;
}

int cmd_basis(const Options& o, Io io) {
    const auto cfg = load(o);
    if (o.j_opt->count() == 0) throw UsageError("--j is required");
    if (o.j < -1 || o.j >= static_cast<int>(cfg.n)) throw UsageError("--j must lie in [-1, N)");
    const auto b = basis_vector(params_of(cfg), o.j);
    emit_vector(io.out, b.values, pick_format(o, cfg.format, Output::vector));
    return exit_ok;
}

int cmd_expand(const Options& o, Io io) {
    const auto cfg = load(o);
    const auto x = input_vector(o, io, cfg.n);
    const auto mode = cfg.space == SpaceKind::c ? ExpansionMode::c : ExpansionMode::c0_lp;
    const auto e = expand(params_of(cfg), x, mode, cfg.tol);
    const auto f = pick_format(o, cfg.format, Output::vector);
    if (f == OutputFormat::json) {
        Json j{{"mode", mode == ExpansionMode::c ? "c" : "c0_lp"}, {"coeffs", numbers(e.coeffs)}};
        if (e.limit) {
            j["limit"] = number(*e.limit);
            j["limit_spread"] = number(e.limit_spread);
        }
        io.out << j.dump(2) << '\n';
        return exit_ok;
    }
    if (e.limit && f == OutputFormat::plain) io.out << "# limit " << format_double(*e.limit) << '\n';
    emit_vector(io.out, e.coeffs, f);
    return exit_ok;
}

int cmd_reconstruct(const Options& o, Io io) {
    const auto cfg = load(o);
    Expansion e;
    e.coeffs = input_vector(o, io, cfg.n);
    std::size_t m = cfg.n - 1;
    if (o.j_opt->count() > 0) {
        if (o.j < 0 || o.j >= static_cast<int>(cfg.n)) throw UsageError("--j must lie in [0, N)");
        m = static_cast<std::size_t>(o.j);
    }
    const auto x = reconstruct(params_of(cfg), e, m);
    emit_vector(io.out, x, pick_format(o, cfg.format, Output::vector));
    return exit_ok;
}

// paranorm

int cmd_paranorm(const Options& o, Io io) {
    const auto cfg = load(o);
    const auto& params = params_of(cfg);
    const auto p = exponents(o, cfg);
    const auto x = input_vector(o, io, cfg.n);
    const double h = paranorm_lp(params, p, x);
    const auto sup = paranorm_sup(params, p, x);
    const auto f = pick_format(o, cfg.format, Output::report);
    switch (f) {
    case OutputFormat::json: {
        Json j{{"paranorm_l", number(h)},
               {"paranorm_sup", number(sup.value)},
               {"M", number(p.M())},
               {"completeness_warning", sup.completeness_warning}};
        io.out << j.dump(2) << '\n';
        break;
    }
    case OutputFormat::csv:
        io.out << "field,value\nparanorm_l," << format_double(h) << "\nparanorm_sup,"
               << format_double(sup.value) << "\nM," << format_double(p.M()) << '\n';
        break;
    case OutputFormat::plain:
        io.out << "paranorm_l " << format_double(h) << "\nparanorm_sup " << format_double(sup.value)
               << "\nM " << format_double(p.M()) << '\n';
        if (sup.completeness_warning) io.out << "# min p_k < 1e-6: space is not complete\n";
        break;
    }
    return exit_ok;
}

// dual, mapcheck

Json finiteness_json(const FinitenessReport& r) {
    Json j{{"condition_id", r.condition_id},
           {"verdict", std::string(to_string(r.verdict))},
           {"holds", r.holds},
           {"witness_L", r.witness_L ? Json(*r.witness_L) : Json(nullptr)},
           {"truncations", r.truncations},
           {"trace", numbers(r.value_trace)}};
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

void finiteness_csv_header(std::ostream& out) { out << "condition_id,verdict,holds,witness_L\n"; }

void finiteness_csv(std::ostream& out, const FinitenessReport& r) {
    out << r.condition_id << ',' << to_string(r.verdict) << ',' << (r.holds ? "true" : "false")
        << ',' << (r.witness_L ? std::to_string(*r.witness_L) : "") << '\n';
}

void finiteness_plain(std::ostream& out, const FinitenessReport& r) {
    out << r.condition_id << ' ' << to_string(r.verdict) << ' ' << (r.holds ? "holds" : "fails");
    if (r.witness_L) out << " L=" << *r.witness_L;
    out << " trace " << join(r.value_trace) << '\n';
    for (const auto& n : r.notes) out << "# " << n << '\n';
}

int strict_exit(const Options& o, bool inconclusive) {
    return o.strict && inconclusive ? exit_inconclusive : exit_ok;
}

int cmd_dual(const Options& o, Io io) {
    const auto cfg = load(o);
    if (o.which.empty()) throw UsageError("--which is required");
    const auto which = parse_dual_kind(o.which);
    if (!which) throw UsageError("--which must be one of alpha, beta, gamma");
    if (o.a.empty()) throw UsageError("--a is required");
    const auto a = fit_length(read_vector_file(o.a), cfg.n, "--a");
    const auto report = dual_membership(params_of(cfg), a, *which, exponents(o, cfg), cfg.space,
                                        cfg.schedule, cfg.tol);
    switch (pick_format(o, cfg.format, Output::report)) {
    case OutputFormat::json: {
        Json checks = Json::array();
        for (const auto& c : report.checks) checks.push_back(finiteness_json(c));
        Json j{{"which", std::string(to_string(report.which))},
               {"space", std::string(to_string(report.space))},
               {"outcome", std::string(to_string(report.outcome))},
               {"checks", checks}};
        io.out << j.dump(2) << '\n';
        break;
    }
    case OutputFormat::csv:
        finiteness_csv_header(io.out);
        for (const auto& c : report.checks) finiteness_csv(io.out, c);
        break;
    case OutputFormat::plain:
        for (const auto& c : report.checks) finiteness_plain(io.out, c);
        io.out << "outcome " << to_string(report.outcome) << '\n';
        break;
    }
    return strict_exit(o, report.outcome == Outcome::inconclusive);
}

int cmd_mapcheck(const Options& o, Io io) {
    const auto cfg = load(o);
    if (o.target.empty()) throw UsageError("--target is required");
    const auto target = parse_mapping_target(o.target);
    if (!target) throw UsageError("--target must be one of linf, l1");
    const auto a = input_matrix(o, cfg.n);
    const auto report =
        mapping_check(params_of(cfg), a, *target, exponents(o, cfg), cfg.schedule, cfg.tol);
    switch (pick_format(o, cfg.format, Output::report)) {
    case OutputFormat::json: {
        Json rows = Json::array();
        for (auto r : report.row_outcomes) rows.push_back(std::string(to_string(r)));
        Json j{{"target", std::string(to_string(report.target))},
               {"outcome", std::string(to_string(report.outcome))},
               {"kernel", finiteness_json(report.kernel_check)},
               {"row_outcomes", rows}};
        io.out << j.dump(2) << '\n';
        break;
    }
    case OutputFormat::csv:
        finiteness_csv_header(io.out);
        finiteness_csv(io.out, report.kernel_check);
        break;
    case OutputFormat::plain:
        finiteness_plain(io.out, report.kernel_check);
        for (std::size_t n = 0; n < report.row_outcomes.size(); ++n) {
            io.out << "row " << n << ' ' << to_string(report.row_outcomes[n]) << '\n';
        }
        io.out << "outcome " << to_string(report.outcome) << '\n';
        break;
    }
    return strict_exit(o, report.outcome == Outcome::inconclusive);
}

// mnc

int cmd_mnc(const Options& o, Io io) {
    const auto cfg = load(o);
    if (o.target.empty()) throw UsageError("--target is required");
    const auto target = parse_mnc_target(o.target);
    if (!target) throw UsageError("--target must be one of c0, linf, c, l1-lp, lp-l1, lp-bv");
    const double p = scalar_exponent(o, cfg);
    const auto a = input_matrix(o, cfg.n);
    const auto est = mnc_estimate(*target, params_of(cfg), a, p, cfg.tol);
    switch (pick_format(o, cfg.format, Output::report)) {
    case OutputFormat::json: {
        Json j{{"target", std::string(to_string(*target))},
               {"lower", number(est.lower)},
               {"upper", number(est.upper)},
               {"point", est.point ? number(*est.point) : Json(nullptr)},
               {"verdict", std::string(to_string(est.verdict))},
               {"trend", std::string(to_string(est.trace.trend))},
               {"trace", numbers(est.sequence)}};
        if (!est.notes.empty()) j["notes"] = est.notes;
        io.out << j.dump(2) << '\n';
        break;
    }
    case OutputFormat::csv:
        io.out << "field,value\nlower," << format_double(est.lower) << "\nupper,"
               << format_double(est.upper) << "\npoint,"
               << (est.point ? format_double(*est.point) : "") << "\nverdict,"
               << to_string(est.verdict) << '\n';
        for (std::size_t m = 0; m < est.sequence.size(); ++m) {
            io.out << "trace[" << m << "]," << format_double(est.sequence[m]) << '\n';
        }
        break;
    case OutputFormat::plain:
        io.out << "lower " << format_double(est.lower) << "\nupper " << format_double(est.upper)
               << '\n';
        if (est.point) io.out << "point " << format_double(*est.point) << '\n';
        io.out << "verdict " << to_string(est.verdict) << "\ntrace " << join(est.sequence)
               << '\n';
        for (const auto& n : est.notes) io.out << "# " << n << '\n';
        break;
    }
    return strict_exit(o, est.verdict == Compactness::inconclusive);
}

// selftest

int cmd_selftest(const Options& o, Io io) {
    const std::size_t n = o.n_opt->count() > 0 ? o.n : 32;
    if (n < 4) throw UsageError("--N must be at least 4");
    const auto report = run_selftest(n);
    std::optional<OutputFormat> none;
    switch (pick_format(o, none, Output::vector)) {
    case OutputFormat::json: {
        Json items = Json::array();
        for (const auto& i : report.items) {
            items.push_back(Json{{"name", i.name}, {"passed", i.passed}, {"detail", i.detail}});
        }
        io.out << Json{{"N", report.n}, {"all_passed", report.all_passed()}, {"items", items}}
                      .dump(2)
               << '\n';
        break;
    }
    case OutputFormat::csv:
        io.out << "name,passed\n";
        for (const auto& i : report.items) io.out << '"' << i.name << "\"," << i.passed << '\n';
        break;
    case OutputFormat::plain: {
        std::size_t passed = 0;
        for (const auto& i : report.items) {
            io.out << (i.passed ? "PASS " : "FAIL ") << i.name << ": " << i.detail << '\n';
            passed += i.passed ? 1 : 0;
        }
        io.out << passed << '/' << report.items.size() << " passed at N = " << n << '\n';
        break;
    }
    }
    return report.all_passed() ? exit_ok : exit_failed;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Generalized-mean B-difference sequence spaces", "seqspace"};
    app.require_subcommand(1);
    Options o;

    auto* transform = app.add_subcommand("transform", "y = A(r,s,t;B) x");
    auto* inverse_cmd = app.add_subcommand("inverse", "x = A(r,s,t;B)^-1 y");
    auto* paranorm = app.add_subcommand("paranorm", "paranorms of x");
    auto* basis = app.add_subcommand("basis", "basis vector b^(j)");
    auto* expand_cmd = app.add_subcommand("expand", "basis coefficients of x");
    auto* reconstruct_cmd = app.add_subcommand("reconstruct", "partial sum from coefficients");
    auto* dual = app.add_subcommand("dual", "alpha-, beta- or gamma-dual membership of a");
    auto* mapcheck = app.add_subcommand("mapcheck", "matrix class (l(p), Y) membership of A");
    auto* mnc = app.add_subcommand("mnc", "Hausdorff measure of noncompactness of L_A");
    auto* selftest = app.add_subcommand("selftest", "oracle self-test suite");

    const std::vector<CLI::App*> all{transform, inverse_cmd, paranorm, basis, expand_cmd,
                                     reconstruct_cmd, dual, mapcheck, mnc, selftest};
    std::map<CLI::App*, CLI::Option*> p_opts, n_opts, j_opts;
    for (auto* sub : all) {
        sub->add_option("--format", o.format, "json, csv or plain");
        n_opts[sub] = sub->add_option("--N", o.n, "truncation order");
        if (sub == selftest) continue;
        sub->add_option("--config", o.config, "JSON run configuration");
        sub->add_flag("--strict", o.strict, "exit 3 on an inconclusive verdict");
    }
    for (auto* sub : {transform, inverse_cmd, paranorm, expand_cmd, reconstruct_cmd}) {
        sub->add_option("--in", o.in, "input vector file (default: stdin)");
    }
    for (auto* sub : {paranorm, dual, mapcheck, mnc}) {
        p_opts[sub] = sub->add_option("--p", o.p, "constant exponent");
        if (sub != mnc) sub->add_option("--p-file", o.p_file, "exponent sequence file");
    }
    for (auto* sub : {basis, reconstruct_cmd}) j_opts[sub] = sub->add_option("--j", o.j, "basis index or partial-sum order");
    dual->add_option("--a", o.a, "sequence file");
    dual->add_option("--which", o.which, "alpha, beta or gamma");
    mapcheck->add_option("--A", o.matrix, "matrix CSV");
    mapcheck->add_option("--target", o.target, "linf or l1");
    mnc->add_option("--A", o.matrix, "matrix CSV");
    mnc->add_option("--target", o.target, "c0, linf, c, l1-lp, lp-l1 or lp-bv");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    CLI::App* sub = app.get_subcommands().front();
    o.n_opt = n_opts.at(sub);
    if (p_opts.count(sub)) o.p_opt = p_opts.at(sub);
    if (j_opts.count(sub)) o.j_opt = j_opts.at(sub);

    const Io io{in, out};
    try {
        if (sub == transform) return cmd_transform(o, io, false);
        if (sub == inverse_cmd) return cmd_transform(o, io, true);
        if (sub == paranorm) return cmd_paranorm(o, io);
        if (sub == basis) return cmd_basis(o, io);
        if (sub == expand_cmd) return cmd_expand(o, io);
        if (sub == reconstruct_cmd) return cmd_reconstruct(o, io);
        if (sub == dual) return cmd_dual(o, io);
        if (sub == mapcheck) return cmd_mapcheck(o, io);
        if (sub == mnc) return cmd_mnc(o, io);
        return cmd_selftest(o, io);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
    }
    return exit_usage;
}

} // namespace seqspace::cli
