#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <greedyls/matcore.hpp>

namespace greedyls {

/// Vector files hold one decimal value per line; blank lines and lines
/// starting with '%' or '#' are ignored.
Vector read_vector(std::istream& in);
Vector read_vector(const std::filesystem::path& path);
void write_vector(std::ostream& out, std::span<const double> v);
void write_vector(const std::filesystem::path& path, std::span<const double> v);

/// Shortest decimal representation that parses back to the same double.
std::string format_double(double value);

} // namespace greedyls
