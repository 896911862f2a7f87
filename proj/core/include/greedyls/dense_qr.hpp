#pragma once

#include <span>
#include <vector>

#include <greedyls/matcore.hpp>

namespace greedyls {

/// Householder QR of a small dense m-by-t matrix (t <= m), column-major.
///
/// Q is kept implicitly as Householder vectors below the diagonal of the
/// factored array; R occupies the upper triangle.
class DenseQR
{
public:
    DenseQR(std::vector<double> column_major, Index rows, Index cols);

    Index rows() const noexcept { return rows_; }
    Index cols() const noexcept { return cols_; }

    /// |R_ii|, i = 0..t-1
    std::vector<double> abs_diagonal() const;
    /// min |R_ii| / max |R_ii|; zero for an exactly singular factor.
    double diagonal_ratio() const;

    /// Minimizer of ||M y - rhs||_2. The caller is responsible for checking
    /// diagonal_ratio() first; a zero pivot raises RankDeficiencyError.
    Vector solve(std::span<const double> rhs) const;

private:
    Index rows_;
    Index cols_;
    std::vector<double> factor_;
    std::vector<double> tau_;
};

} // namespace greedyls
