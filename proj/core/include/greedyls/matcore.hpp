#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <greedyls/errors.hpp>

namespace greedyls {

using Index = std::size_t;
using Vector = std::vector<double>;

/// Immutable m-by-n matrix with column-oriented access.
///
/// Storage is either dense column-major or compressed sparse column (CSC).
/// Every algorithm in the library touches A one column at a time, so both
/// layouts keep a column contiguous. Construction validates the shape, the
/// CSC structure (row indices strictly increasing inside a column and in
/// range) and rejects any column without a nonzero entry.
class ColumnMatrix
{
public:
    struct Triplet
    {
        Index row;
        Index col;
        double value;
    };

    static ColumnMatrix dense(Index rows, Index cols, std::vector<double> column_major);
    static ColumnMatrix sparse(Index rows, Index cols, std::vector<Index> col_ptr,
                               std::vector<Index> row_idx, std::vector<double> values);
    /// Builds a CSC matrix; duplicate (row, col) entries are summed.
    static ColumnMatrix from_triplets(Index rows, Index cols, std::vector<Triplet> entries);

    Index rows() const noexcept { return rows_; }
    Index cols() const noexcept { return cols_; }
    bool is_sparse() const noexcept { return sparse_; }
    std::size_t stored_entries() const noexcept { return values_.size(); }

    /// A_(j)^T v
    double column_dot(Index j, std::span<const double> v) const;
    /// y += alpha * A_(j)
    void add_scaled_column(Index j, double alpha, std::span<double> y) const;
    double column_norm_sq(Index j) const;
    /// Writes the dense column j into out (length m).
    void copy_column(Index j, std::span<double> out) const;
    double coeff(Index i, Index j) const;

    /// Calls fn(row, value) for every stored entry of column j in row order.
    template <class Fn>
    void for_each_in_column(Index j, Fn&& fn) const
    {
        if (sparse_) {
            for (Index p = col_ptr_[j]; p < col_ptr_[j + 1]; ++p) {
                fn(row_idx_[p], values_[p]);
            }
        } else {
            const double* col = values_.data() + j * rows_;
            for (Index i = 0; i < rows_; ++i) {
                fn(i, col[i]);
            }
        }
    }

    /// A x
    Vector multiply(std::span<const double> x) const;

private:
    ColumnMatrix() = default;
    void validate() const;

    Index rows_ = 0;
    Index cols_ = 0;
    bool sparse_ = false;
    std::vector<Index> col_ptr_;
    std::vector<Index> row_idx_;
    std::vector<double> values_;
};

/// Squared column norms and squared Frobenius norm of A.
struct ColumnNormCache
{
    Vector col_norms_sq;
    double frob_sq = 0.0;
};

ColumnNormCache column_norms(const ColumnMatrix& A);

/// b - A x
Vector residual(const ColumnMatrix& A, std::span<const double> x, std::span<const double> b);
void residual_into(const ColumnMatrix& A, std::span<const double> x, std::span<const double> b,
                   std::span<double> out);

/// A^T r
Vector correlation(const ColumnMatrix& A, std::span<const double> r);
void correlation_into(const ColumnMatrix& A, std::span<const double> r, std::span<double> out);

double dot(std::span<const double> a, std::span<const double> b);
double norm_sq(std::span<const double> v);
double norm2(std::span<const double> v);

} // namespace greedyls
