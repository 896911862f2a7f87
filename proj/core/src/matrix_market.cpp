#include <greedyls/matrix_market.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <greedyls/io.hpp>

namespace greedyls {

namespace {

enum class Layout { coordinate, array };
enum class Symmetry { general, symmetric };

std::string lower(std::string s)
{
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::vector<std::string_view> split_ws(std::string_view line)
{
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) {
            ++j;
        }
        if (j > i) {
            tokens.push_back(line.substr(i, j - i));
        }
        i = j;
    }
    return tokens;
}

Index parse_count(std::string_view tok, std::size_t line_no)
{
    Index value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw FormatError("line " + std::to_string(line_no) + ": expected a nonnegative integer, got '" +
                          std::string(tok) + "'");
    }
    return value;
}

double parse_real(std::string_view tok, std::size_t line_no)
{
    double value = 0.0;
    // from_chars rejects a leading '+', which some writers emit
    if (!tok.empty() && tok.front() == '+') {
        tok.remove_prefix(1);
    }
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw FormatError("line " + std::to_string(line_no) + ": expected a real value, got '" +
                          std::string(tok) + "'");
    }
    return value;
}

bool is_skippable(std::string_view line)
{
    const auto first = line.find_first_not_of(" \t\r");
    return first == std::string_view::npos || line[first] == '%';
}

} // namespace

ColumnMatrix read_matrix_market(std::istream& in)
{
    std::string line;
    std::size_t line_no = 1;
    if (!std::getline(in, line)) {
        throw FormatError("empty Matrix Market stream");
    }
    const auto banner = split_ws(line);
    if (banner.size() != 5 || lower(std::string(banner[0])) != "%%matrixmarket") {
        throw FormatError("missing %%MatrixMarket banner");
    }
    if (lower(std::string(banner[1])) != "matrix") {
        throw FormatError("unsupported object '" + std::string(banner[1]) + "'");
    }
    const std::string format = lower(std::string(banner[2]));
    const std::string field = lower(std::string(banner[3]));
    const std::string symmetry = lower(std::string(banner[4]));

    Layout layout{};
    if (format == "coordinate") {
        layout = Layout::coordinate;
    } else if (format == "array") {
        layout = Layout::array;
    } else {
        throw FormatError("unsupported format '" + format + "'");
    }
    if (field != "real") {
        throw FormatError("unsupported field '" + field + "' (only real is accepted)");
    }
    Symmetry sym{};
    if (symmetry == "general") {
        sym = Symmetry::general;
    } else if (symmetry == "symmetric" && layout == Layout::coordinate) {
        sym = Symmetry::symmetric;
    } else {
        throw FormatError("unsupported symmetry '" + symmetry + "' for " + format + " format");
    }

    auto next_data_line = [&](std::vector<std::string_view>& tokens) {
        while (std::getline(in, line)) {
            ++line_no;
            if (!is_skippable(line)) {
                tokens = split_ws(line);
                return true;
            }
        }
        return false;
    };

    std::vector<std::string_view> tokens;
    if (!next_data_line(tokens)) {
        throw FormatError("missing size line");
    }
    const std::size_t expected_size_tokens = layout == Layout::coordinate ? 3 : 2;
    if (tokens.size() != expected_size_tokens) {
        throw FormatError("line " + std::to_string(line_no) + ": malformed size line");
    }
    const Index rows = parse_count(tokens[0], line_no);
    const Index cols = parse_count(tokens[1], line_no);
    if (rows == 0 || cols == 0) {
        throw FormatError("matrix dimensions must be positive");
    }
    if (sym == Symmetry::symmetric && rows != cols) {
        throw FormatError("symmetric matrix must be square");
    }

    if (layout == Layout::array) {
        std::vector<double> values;
        values.reserve(rows * cols);
        while (next_data_line(tokens)) {
            if (tokens.size() != 1) {
                throw FormatError("line " + std::to_string(line_no) + ": expected one value");
            }
            if (values.size() == rows * cols) {
                throw FormatError("entry count mismatch: more than " + std::to_string(rows * cols) +
                                  " values");
            }
            values.push_back(parse_real(tokens[0], line_no));
        }
        if (values.size() != rows * cols) {
            throw FormatError("entry count mismatch: declared " + std::to_string(rows * cols) +
                              ", found " + std::to_string(values.size()));
        }
        return ColumnMatrix::dense(rows, cols, std::move(values));
    }

    const Index declared = parse_count(tokens[2], line_no);
    std::vector<ColumnMatrix::Triplet> entries;
    entries.reserve(sym == Symmetry::symmetric ? 2 * declared : declared);
    Index seen = 0;
    while (next_data_line(tokens)) {
        if (tokens.size() != 3) {
            throw FormatError("line " + std::to_string(line_no) + ": expected 'row col value'");
        }
        if (seen == declared) {
            throw FormatError("entry count mismatch: more than the declared " +
                              std::to_string(declared) + " entries");
        }
        const Index i = parse_count(tokens[0], line_no);
        const Index j = parse_count(tokens[1], line_no);
        if (i < 1 || i > rows || j < 1 || j > cols) {
            throw FormatError("line " + std::to_string(line_no) + ": index (" + std::to_string(i) +
                              ", " + std::to_string(j) + ") outside declared bounds");
        }
        const double v = parse_real(tokens[2], line_no);
        entries.push_back({i - 1, j - 1, v});
        if (sym == Symmetry::symmetric && i != j) {
            entries.push_back({j - 1, i - 1, v});
        }
        ++seen;
    }
    if (seen != declared) {
        throw FormatError("entry count mismatch: declared " + std::to_string(declared) + ", found " +
                          std::to_string(seen));
    }
    return ColumnMatrix::from_triplets(rows, cols, std::move(entries));
}

ColumnMatrix read_matrix_market(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw FormatError("cannot open matrix file " + path.string());
    }
    return read_matrix_market(in);
}

void write_matrix_market(std::ostream& out, const ColumnMatrix& A)
{
    out << "%%MatrixMarket matrix coordinate real general\n";
    out << A.rows() << ' ' << A.cols() << ' ' << A.stored_entries() << '\n';
    for (Index j = 0; j < A.cols(); ++j) {
        A.for_each_in_column(j, [&](Index i, double v) {
            out << (i + 1) << ' ' << (j + 1) << ' ' << format_double(v) << '\n';
        });
    }
}

void write_matrix_market(const std::filesystem::path& path, const ColumnMatrix& A)
{
    std::ofstream out(path);
    if (!out) {
        throw FormatError("cannot open " + path.string() + " for writing");
    }
    write_matrix_market(out, A);
}

} // namespace greedyls
