#include <greedyls/matcore.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace greedyls {

namespace {

void require_length(std::span<const double> v, Index expected, const char* what)
{
    if (v.size() != expected) {
        throw DimensionError(std::string(what) + ": expected length " + std::to_string(expected) +
                             ", got " + std::to_string(v.size()));
    }
}

} // namespace

ColumnMatrix ColumnMatrix::dense(Index rows, Index cols, std::vector<double> column_major)
{
    ColumnMatrix A;
    A.rows_ = rows;
    A.cols_ = cols;
    A.sparse_ = false;
    A.values_ = std::move(column_major);
    A.validate();
    return A;
}

ColumnMatrix ColumnMatrix::sparse(Index rows, Index cols, std::vector<Index> col_ptr,
                                  std::vector<Index> row_idx, std::vector<double> values)
{
    ColumnMatrix A;
    A.rows_ = rows;
    A.cols_ = cols;
    A.sparse_ = true;
    A.col_ptr_ = std::move(col_ptr);
    A.row_idx_ = std::move(row_idx);
    A.values_ = std::move(values);
    A.validate();
    return A;
}

ColumnMatrix ColumnMatrix::from_triplets(Index rows, Index cols, std::vector<Triplet> entries)
{
    for (const auto& e : entries) {
        if (e.row >= rows || e.col >= cols) {
            throw ConstructionError("triplet (" + std::to_string(e.row) + ", " +
                                    std::to_string(e.col) + ") outside a " + std::to_string(rows) +
                                    "x" + std::to_string(cols) + " matrix");
        }
    }
    std::stable_sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
        return a.col != b.col ? a.col < b.col : a.row < b.row;
    });

    std::vector<Index> col_ptr(cols + 1, 0);
    std::vector<Index> row_idx;
    std::vector<double> values;
    row_idx.reserve(entries.size());
    values.reserve(entries.size());
    for (std::size_t p = 0; p < entries.size();) {
        const Index row = entries[p].row;
        const Index col = entries[p].col;
        double sum = 0.0;
        for (; p < entries.size() && entries[p].row == row && entries[p].col == col; ++p) {
            sum += entries[p].value;
        }
        row_idx.push_back(row);
        values.push_back(sum);
        ++col_ptr[col + 1];
    }
    for (Index j = 0; j < cols; ++j) {
        col_ptr[j + 1] += col_ptr[j];
    }
    return sparse(rows, cols, std::move(col_ptr), std::move(row_idx), std::move(values));
}

void ColumnMatrix::validate() const
{
    if (rows_ < 1 || cols_ < 1) {
        throw ConstructionError("matrix must have at least one row and one column");
    }
    if (!sparse_) {
        if (values_.size() != rows_ * cols_) {
            throw ConstructionError("dense storage holds " + std::to_string(values_.size()) +
                                    " values, expected " + std::to_string(rows_ * cols_));
        }
    } else {
        if (col_ptr_.size() != cols_ + 1 || col_ptr_.front() != 0 ||
            col_ptr_.back() != values_.size() || row_idx_.size() != values_.size()) {
            throw ConstructionError("inconsistent compressed-column arrays");
        }
        for (Index j = 0; j < cols_; ++j) {
            if (col_ptr_[j] > col_ptr_[j + 1]) {
                throw ConstructionError("column pointers decrease at column " + std::to_string(j));
            }
            for (Index p = col_ptr_[j]; p < col_ptr_[j + 1]; ++p) {
                if (row_idx_[p] >= rows_) {
                    throw ConstructionError("row index out of range in column " + std::to_string(j));
                }
                if (p > col_ptr_[j] && row_idx_[p] <= row_idx_[p - 1]) {
                    throw ConstructionError("row indices not strictly increasing in column " +
                                            std::to_string(j));
                }
            }
        }
    }
    for (Index j = 0; j < cols_; ++j) {
        bool nonzero = false;
        for_each_in_column(j, [&](Index, double v) { nonzero = nonzero || v != 0.0; });
        if (!nonzero) {
            throw ConstructionError("column " + std::to_string(j) + " is entirely zero");
        }
    }
}

double ColumnMatrix::column_dot(Index j, std::span<const double> v) const
{
    double sum = 0.0;
    if (sparse_) {
        for (Index p = col_ptr_[j]; p < col_ptr_[j + 1]; ++p) {
            sum += values_[p] * v[row_idx_[p]];
        }
    } else {
        const double* col = values_.data() + j * rows_;
        for (Index i = 0; i < rows_; ++i) {
            sum += col[i] * v[i];
        }
    }
    return sum;
}

void ColumnMatrix::add_scaled_column(Index j, double alpha, std::span<double> y) const
{
    if (sparse_) {
        for (Index p = col_ptr_[j]; p < col_ptr_[j + 1]; ++p) {
            y[row_idx_[p]] += alpha * values_[p];
        }
    } else {
        const double* col = values_.data() + j * rows_;
        for (Index i = 0; i < rows_; ++i) {
            y[i] += alpha * col[i];
        }
    }
}

double ColumnMatrix::column_norm_sq(Index j) const
{
    double sum = 0.0;
    for_each_in_column(j, [&](Index, double v) { sum += v * v; });
    return sum;
}

void ColumnMatrix::copy_column(Index j, std::span<double> out) const
{
    require_length(out, rows_, "copy_column");
    std::fill(out.begin(), out.end(), 0.0);
    for_each_in_column(j, [&](Index i, double v) { out[i] = v; });
}

double ColumnMatrix::coeff(Index i, Index j) const
{
    if (i >= rows_ || j >= cols_) {
        throw DimensionError("coefficient index out of range");
    }
    if (!sparse_) {
        return values_[j * rows_ + i];
    }
    const auto first = row_idx_.begin() + static_cast<std::ptrdiff_t>(col_ptr_[j]);
    const auto last = row_idx_.begin() + static_cast<std::ptrdiff_t>(col_ptr_[j + 1]);
    const auto it = std::lower_bound(first, last, i);
    return (it != last && *it == i) ? values_[static_cast<Index>(it - row_idx_.begin())] : 0.0;
}

Vector ColumnMatrix::multiply(std::span<const double> x) const
{
    require_length(x, cols_, "multiply");
    Vector y(rows_, 0.0);
    for (Index j = 0; j < cols_; ++j) {
        if (x[j] != 0.0) {
            add_scaled_column(j, x[j], y);
        }
    }
    return y;
}

ColumnNormCache column_norms(const ColumnMatrix& A)
{
    ColumnNormCache cache;
    cache.col_norms_sq.resize(A.cols());
    for (Index j = 0; j < A.cols(); ++j) {
        const double nsq = A.column_norm_sq(j);
        if (!(nsq > 0.0)) {
            throw ConstructionError("column " + std::to_string(j) + " has zero squared norm");
        }
        cache.col_norms_sq[j] = nsq;
        cache.frob_sq += nsq;
    }
    return cache;
}

void residual_into(const ColumnMatrix& A, std::span<const double> x, std::span<const double> b,
                   std::span<double> out)
{
    require_length(x, A.cols(), "residual: x");
    require_length(b, A.rows(), "residual: b");
    require_length(out, A.rows(), "residual: out");
    std::copy(b.begin(), b.end(), out.begin());
    for (Index j = 0; j < A.cols(); ++j) {
        if (x[j] != 0.0) {
            A.add_scaled_column(j, -x[j], out);
        }
    }
}

Vector residual(const ColumnMatrix& A, std::span<const double> x, std::span<const double> b)
{
    Vector r(A.rows());
    residual_into(A, x, b, r);
    return r;
}

void correlation_into(const ColumnMatrix& A, std::span<const double> r, std::span<double> out)
{
    require_length(r, A.rows(), "correlation: r");
    require_length(out, A.cols(), "correlation: out");
    for (Index j = 0; j < A.cols(); ++j) {
        out[j] = A.column_dot(j, r);
    }
}

Vector correlation(const ColumnMatrix& A, std::span<const double> r)
{
    Vector s(A.cols());
    correlation_into(A, r, s);
    return s;
}

double dot(std::span<const double> a, std::span<const double> b)
{
    if (a.size() != b.size()) {
        throw DimensionError("dot: length mismatch");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sum += a[i] * b[i];
    }
    return sum;
}

double norm_sq(std::span<const double> v)
{
    double sum = 0.0;
    for (double e : v) {
        sum += e * e;
    }
    return sum;
}

double norm2(std::span<const double> v) { return std::sqrt(norm_sq(v)); }

} // namespace greedyls
