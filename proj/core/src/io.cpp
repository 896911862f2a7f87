#include <greedyls/io.hpp>

#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

namespace greedyls {

std::string format_double(double value)
{
    std::array<char, 32> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc()) {
        throw FormatError("cannot format value");
    }
    return std::string(buf.data(), ptr);
}

Vector read_vector(std::istream& in)
{
    Vector v;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '%' || line[first] == '#') {
            continue;
        }
        const auto last = line.find_last_not_of(" \t\r");
        const char* begin = line.data() + first;
        if (*begin == '+') {
            ++begin;
        }
        const char* end = line.data() + last + 1;
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc() || ptr != end) {
            throw FormatError("vector line " + std::to_string(line_no) + ": expected one real value");
        }
        v.push_back(value);
    }
    return v;
}

Vector read_vector(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw FormatError("cannot open vector file " + path.string());
    }
    return read_vector(in);
}

void write_vector(std::ostream& out, std::span<const double> v)
{
    for (double e : v) {
        out << format_double(e) << '\n';
    }
}

void write_vector(const std::filesystem::path& path, std::span<const double> v)
{
    std::ofstream out(path);
    if (!out) {
        throw FormatError("cannot open " + path.string() + " for writing");
    }
    write_vector(out, v);
}

} // namespace greedyls
