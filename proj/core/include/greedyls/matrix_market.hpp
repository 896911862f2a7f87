#pragma once

#include <filesystem>
#include <iosfwd>

#include <greedyls/matcore.hpp>

namespace greedyls {

/// Reads "matrix coordinate real general", "matrix coordinate real symmetric"
/// (off-diagonal entries mirrored) and "matrix array real general".
/// Coordinate input yields CSC storage with duplicates summed; array input
/// yields dense storage. Throws FormatError on malformed input.
ColumnMatrix read_matrix_market(std::istream& in);
ColumnMatrix read_matrix_market(const std::filesystem::path& path);

/// Writes every stored entry as "matrix coordinate real general" using the
/// shortest decimal form that round-trips each value exactly.
void write_matrix_market(std::ostream& out, const ColumnMatrix& A);
void write_matrix_market(const std::filesystem::path& path, const ColumnMatrix& A);

} // namespace greedyls
