#include "seqspace/config.hpp"
#include "seqspace/error.hpp"
#include "seqspace/io.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

using namespace seqspace;

namespace {

ErrorCode parse_code(const std::string& text) {
    try {
        parse_run_config(text);
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "accepted: " << text;
    return ErrorCode::invalid_argument;
}

} // namespace

TEST(FormatDouble, ShortestRoundTrip) {
    EXPECT_EQ(format_double(0.1), "0.1");
    EXPECT_EQ(format_double(-2.0), "-2");
    EXPECT_EQ(format_double(1e-300), "1e-300");
    for (double x : {1.0 / 3.0, 2.718281828459045, -7.25e17}) EXPECT_EQ(std::stod(format_double(x)), x);
}

TEST(VectorIo, CommentsAndBlankLines) {
    std::istringstream in("# header\n1.5\n\n  -2 # trailing\n3e2\n");
    EXPECT_EQ(read_vector(in), (std::vector<double>{1.5, -2, 300}));
}

TEST(VectorIo, RoundTrip) {
    const std::vector<double> v{0.1, -1e-12, 12345.678};
    std::ostringstream out;
    write_vector(out, v);
    std::istringstream in(out.str());
    EXPECT_EQ(read_vector(in), v);
}

TEST(VectorIo, RejectsGarbage) {
    std::istringstream in("1\nabc\n");
    try {
        read_vector(in);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::parse_error);
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
    }
}

TEST(MatrixCsv, SparseEntriesAndMinimumSize) {
    std::istringstream in("n,k,value\n# comment\n0,0,1.5\n2,1,-3\n");
    const auto m = read_matrix_csv(in, 4, 4);
    EXPECT_EQ(m.rows(), 4u);
    EXPECT_EQ(m.cols(), 4u);
    EXPECT_EQ(m(0, 0), 1.5);
    EXPECT_EQ(m(2, 1), -3.0);
    EXPECT_EQ(m(3, 3), 0.0);
}

TEST(MatrixCsv, HeaderOnlyIsZeroMatrix) {
    std::istringstream in("n,k,value\n");
    EXPECT_EQ(read_matrix_csv(in, 3, 3), DenseMatrix(3, 3));
}

TEST(MatrixCsv, RoundTripThroughTriangle) {
    const auto t = Triangle::from_dense(DenseMatrix::from_rows({{1, 0}, {0.25, -2}}));
    std::ostringstream out;
    write_matrix_csv(out, t);
    std::istringstream in(out.str());
    EXPECT_EQ(read_matrix_csv(in), t.to_dense());
}

TEST(MatrixCsv, Errors) {
    for (const char* text : {"", "a,b,c\n0,0,1\n", "n,k,value\n0,1\n", "n,k,value\n-1,0,2\n",
                             "n,k,value\n0,0,x\n"}) {
        std::istringstream in(text);
        try {
            read_matrix_csv(in);
            FAIL() << text;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::parse_error) << text;
        }
    }
}

TEST(RunConfig, PresetAndDefaults) {
    const auto cfg = parse_run_config(R"({"N": 16, "preset": {"preset": "euler", "alpha": 0.5}})");
    EXPECT_EQ(cfg.n, 16u);
    ASSERT_TRUE(cfg.params.has_value());
    EXPECT_EQ(cfg.params->u(), 1.0);
    EXPECT_EQ(cfg.params->v(), -1.0);
    EXPECT_EQ(cfg.params->r()[2], 0.5);
    EXPECT_FALSE(cfg.p.has_value());
    EXPECT_EQ(cfg.schedule, default_schedule(16));
    EXPECT_FALSE(cfg.format.has_value());
    EXPECT_EQ(cfg.space, SpaceKind::l);
}

TEST(RunConfig, ExplicitSequencesOverridePreset) {
    const auto cfg = parse_run_config(
        R"({"N": 4, "preset": "cesaro_alpha", "r": [2, 2, 2, 2], "u": 2, "v": 0.5,
            "p": [1, 2, 3, 4], "schedule": [2, 4], "format": "csv", "space": "c0",
            "tolerances": {"tol_zero": 1e-9, "subset_window": 6}})");
    EXPECT_EQ(cfg.params->r()[3], 2.0);
    EXPECT_EQ(cfg.params->t()[1], 1.5);
    EXPECT_EQ(cfg.params->u(), 2.0);
    EXPECT_EQ((*cfg.p)[3], 4.0);
    EXPECT_EQ(cfg.schedule, (std::vector<std::size_t>{2, 4}));
    EXPECT_EQ(cfg.format, OutputFormat::csv);
    EXPECT_EQ(cfg.space, SpaceKind::c0);
    EXPECT_EQ(cfg.tol.tol_zero, 1e-9);
    EXPECT_EQ(cfg.tol.subset_window, 6u);
}

TEST(RunConfig, SequenceDescriptors) {
    const auto cfg = parse_run_config(
        R"({"N": 4, "r": {"preset": "lambda_seq"}, "t": {"preset": "lambda_seq"}, "s": [1, 1, 1, 1]})");
    EXPECT_EQ(cfg.params->r()[2], 3.0);
    EXPECT_EQ(cfg.params->t()[2], 1.0);
}

TEST(RunConfig, NOverride) {
    const auto cfg = parse_run_config(R"({"N": 16, "preset": "riesz"})", 8);
    EXPECT_EQ(cfg.n, 8u);
    EXPECT_EQ(cfg.params->size(), 8u);
}

TEST(RunConfig, ValidationErrors) {
    EXPECT_EQ(parse_code(R"({"preset": "euler"})"), ErrorCode::parse_error);
    EXPECT_EQ(parse_code(R"({"N": 3, "preset": "riesz"})"), ErrorCode::parse_error);
    EXPECT_EQ(parse_code(R"({"N": 8, "schedule": [4, 4]})"), ErrorCode::parse_error);
    EXPECT_EQ(parse_code(R"({"N": 8, "schedule": [4, 16]})"), ErrorCode::parse_error);
    EXPECT_EQ(parse_code(R"({"N": 8, "format": "xml"})"), ErrorCode::parse_error);
    EXPECT_EQ(parse_code(R"({"N": 8, "tolerances": {"tol_zer": 1}})"), ErrorCode::parse_error);
    EXPECT_EQ(parse_code(R"({"N": 8, "tolerances": {"subset_window": 21}})"), ErrorCode::parse_error);
    EXPECT_EQ(parse_code(R"({"N": 8, "preset": "borel"})"), ErrorCode::parse_error);
    EXPECT_EQ(parse_code(R"({"N": 4, "r": [1, 0, 1, 1], "s": [1, 1, 1, 1], "t": [1, 1, 1, 1]})"),
              ErrorCode::zero_entry);
    EXPECT_EQ(parse_code("{not json"), ErrorCode::parse_error);
}

TEST(RunConfig, EnvironmentOverridesZeroTolerance) {
    ::setenv("SEQSPACE_TOL_ZERO", "1e-4", 1);
    EXPECT_EQ(parse_run_config(R"({"N": 8})").tol.tol_zero, 1e-4);
    ::setenv("SEQSPACE_TOL_ZERO", "-1", 1);
    EXPECT_EQ(parse_code(R"({"N": 8})"), ErrorCode::parse_error);
    ::unsetenv("SEQSPACE_TOL_ZERO");
    EXPECT_EQ(parse_run_config(R"({"N": 8})").tol.tol_zero, Tolerances{}.tol_zero);
}

TEST(OutputFormat, NamesRoundTrip) {
    for (auto f : {OutputFormat::json, OutputFormat::csv, OutputFormat::plain}) {
        EXPECT_EQ(parse_output_format(to_string(f)), f);
    }
    EXPECT_FALSE(parse_output_format("yaml").has_value());
}
