#pragma once

#include "seqspace/matrix.hpp"
#include "seqspace/triangle.hpp"

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace seqspace {

/// Shortest decimal that round-trips to the same double.
std::string format_double(double x);

/// Reads a matrix in "n,k,value" CSV form (header row required, missing entries are zero).
/// The size is the largest index seen plus one, or at least min_rows x min_cols.
/// Throws ParseError naming the offending line.
DenseMatrix read_matrix_csv(std::istream& in, std::size_t min_rows = 0, std::size_t min_cols = 0);
DenseMatrix read_matrix_csv_file(const std::filesystem::path& path, std::size_t min_rows = 0,
                                 std::size_t min_cols = 0);

/// Writes every entry of m, row-major.
void write_matrix_csv(std::ostream& out, const DenseMatrix& m);
/// Writes the lower-triangular entries (k <= n).
void write_matrix_csv(std::ostream& out, const Triangle& t);

/// One decimal per line; blank lines and text after '#' are ignored. Throws ParseError.
std::vector<double> read_vector(std::istream& in);
std::vector<double> read_vector_file(const std::filesystem::path& path);

void write_vector(std::ostream& out, std::span<const double> values);

} // namespace seqspace
