#include <greedyls/dense_qr.hpp>

#include <algorithm>
#include <cmath>

namespace greedyls {

DenseQR::DenseQR(std::vector<double> column_major, Index rows, Index cols)
    : rows_(rows), cols_(cols), factor_(std::move(column_major)), tau_(cols, 0.0)
{
    if (cols_ == 0 || rows_ < cols_) {
        throw RankDeficiencyError("QR needs 1 <= cols <= rows, got " + std::to_string(rows_) + "x" +
                                  std::to_string(cols_));
    }
    if (factor_.size() != rows_ * cols_) {
        throw DimensionError("QR storage does not match its dimensions");
    }
    const Index m = rows_;
    for (Index k = 0; k < cols_; ++k) {
        double* ak = factor_.data() + k * m;
        double tail_sq = 0.0;
        for (Index i = k + 1; i < m; ++i) {
            tail_sq += ak[i] * ak[i];
        }
        const double head = ak[k];
        const double norm = std::sqrt(head * head + tail_sq);
        if (norm == 0.0) {
            tau_[k] = 0.0;
            continue;
        }
        // v = x - alpha e1 with alpha = -sign(x0) ||x||, scaled so v0 = 1
        const double alpha = head >= 0.0 ? -norm : norm;
        const double v0 = head - alpha;
        for (Index i = k + 1; i < m; ++i) {
            ak[i] /= v0;
        }
        const double vnorm_sq = 1.0 + tail_sq / (v0 * v0);
        tau_[k] = 2.0 / vnorm_sq;
        ak[k] = alpha;
        for (Index c = k + 1; c < cols_; ++c) {
            double* ac = factor_.data() + c * m;
            double w = ac[k];
            for (Index i = k + 1; i < m; ++i) {
                w += ak[i] * ac[i];
            }
            w *= tau_[k];
            ac[k] -= w;
            for (Index i = k + 1; i < m; ++i) {
                ac[i] -= w * ak[i];
            }
        }
    }
}

std::vector<double> DenseQR::abs_diagonal() const
{
    std::vector<double> d(cols_);
    for (Index k = 0; k < cols_; ++k) {
        d[k] = std::abs(factor_[k * rows_ + k]);
    }
    return d;
}

double DenseQR::diagonal_ratio() const
{
    const auto d = abs_diagonal();
    const auto [lo, hi] = std::minmax_element(d.begin(), d.end());
    return *hi > 0.0 ? *lo / *hi : 0.0;
}

Vector DenseQR::solve(std::span<const double> rhs) const
{
    if (rhs.size() != rows_) {
        throw DimensionError("QR solve: right-hand side length mismatch");
    }
    const Index m = rows_;
    Vector c(rhs.begin(), rhs.end());
    for (Index k = 0; k < cols_; ++k) {
        if (tau_[k] == 0.0) {
            continue;
        }
        const double* ak = factor_.data() + k * m;
        double w = c[k];
        for (Index i = k + 1; i < m; ++i) {
            w += ak[i] * c[i];
        }
        w *= tau_[k];
        c[k] -= w;
        for (Index i = k + 1; i < m; ++i) {
            c[i] -= w * ak[i];
        }
    }
    Vector y(cols_);
    for (Index k = cols_; k-- > 0;) {
        double sum = c[k];
        for (Index c2 = k + 1; c2 < cols_; ++c2) {
            sum -= factor_[c2 * m + k] * y[c2];
        }
        const double pivot = factor_[k * m + k];
        if (pivot == 0.0) {
            throw RankDeficiencyError("QR solve hit a zero pivot at column " + std::to_string(k));
        }
        y[k] = sum / pivot;
    }
    return y;
}

} // namespace greedyls
