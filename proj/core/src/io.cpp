#include "seqspace/io.hpp"

#include "seqspace/error.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <system_error>
#include <tuple>

namespace seqspace {

namespace {

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::string_view strip_comment(std::string_view s) {
    const auto hash = s.find('#');
    return hash == std::string_view::npos ? s : s.substr(0, hash);
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
    throw Error(ErrorCode::parse_error, "line " + std::to_string(line) + ": " + what);
}

double parse_double(std::string_view s, std::size_t line) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        parse_fail(line, "invalid number '" + std::string(s) + "'");
    }
    return value;
}

std::size_t parse_index(std::string_view s, std::size_t line) {
    s = trim(s);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        parse_fail(line, "invalid index '" + std::string(s) + "'");
    }
    return value;
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::parse_error, "cannot open '" + path.string() + "'");
    return in;
}

} // namespace

std::string format_double(double x) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    if (ec != std::errc()) return "nan";
    return std::string(buf, ptr);
}

DenseMatrix read_matrix_csv(std::istream& in, std::size_t min_rows, std::size_t min_cols) {
    std::string raw;
    std::size_t line = 0;
    bool header = false;
    std::vector<std::tuple<std::size_t, std::size_t, double>> entries;
    std::size_t rows = min_rows, cols = min_cols;
    while (std::getline(in, raw)) {
        ++line;
        const auto text = trim(strip_comment(raw));
        if (text.empty()) continue;
        if (!header) {
            std::string compact;
            for (char c : text) {
                if (c != ' ' && c != '\t') compact += c;
            }
            if (compact != "n,k,value") parse_fail(line, "expected header 'n,k,value'");
            header = true;
            continue;
        }
        const auto c1 = text.find(',');
        const auto c2 = c1 == std::string_view::npos ? c1 : text.find(',', c1 + 1);
        if (c2 == std::string_view::npos || text.find(',', c2 + 1) != std::string_view::npos) {
            parse_fail(line, "expected three comma-separated fields");
        }
        const auto n = parse_index(text.substr(0, c1), line);
        const auto k = parse_index(text.substr(c1 + 1, c2 - c1 - 1), line);
        const auto v = parse_double(text.substr(c2 + 1), line);
        rows = std::max(rows, n + 1);
        cols = std::max(cols, k + 1);
        entries.emplace_back(n, k, v);
    }
    if (!header) throw Error(ErrorCode::parse_error, "empty matrix file");
    DenseMatrix m(rows, cols);
    for (const auto& [n, k, v] : entries) m(n, k) = v;
    return m;
}

DenseMatrix read_matrix_csv_file(const std::filesystem::path& path, std::size_t min_rows,
                                 std::size_t min_cols) {
    auto in = open_input(path);
    return read_matrix_csv(in, min_rows, min_cols);
}

void write_matrix_csv(std::ostream& out, const DenseMatrix& m) {
    out << "n,k,value\n";
    for (std::size_t n = 0; n < m.rows(); ++n) {
        for (std::size_t k = 0; k < m.cols(); ++k) {
            out << n << ',' << k << ',' << format_double(m(n, k)) << '\n';
        }
    }
}

void write_matrix_csv(std::ostream& out, const Triangle& t) {
    out << "n,k,value\n";
    for (std::size_t n = 0; n < t.size(); ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            out << n << ',' << k << ',' << format_double(t(n, k)) << '\n';
        }
    }
}

std::vector<double> read_vector(std::istream& in) {
    std::vector<double> out;
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto text = trim(strip_comment(raw));
        if (text.empty()) continue;
        out.push_back(parse_double(text, line));
    }
    return out;
}

std::vector<double> read_vector_file(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_vector(in);
}

void write_vector(std::ostream& out, std::span<const double> values) {
    for (double v : values) out << format_double(v) << '\n';
}

} // namespace seqspace
