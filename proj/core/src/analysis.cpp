#include <greedyls/analysis.hpp>

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>
#include <Eigen/SVD>

namespace greedyls {

namespace {

void require_desk_scale(Index rows, Index cols)
{
    if (rows * cols > dense_oracle_limit) {
        throw SizeLimitError("dense singular values limited to m*n <= " +
                             std::to_string(dense_oracle_limit) + ", got " + std::to_string(rows) +
                             "x" + std::to_string(cols));
    }
}

Eigen::MatrixXd to_dense(const ColumnMatrix& A, std::span<const Index> columns, bool normalize)
{
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(A.rows()),
                                              static_cast<Eigen::Index>(columns.size()));
    for (Index p = 0; p < columns.size(); ++p) {
        const Index j = columns[p];
        const double scale = normalize ? 1.0 / std::sqrt(A.column_norm_sq(j)) : 1.0;
        A.for_each_in_column(j, [&](Index i, double v) {
            M(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(p)) = v * scale;
        });
    }
    return M;
}

double largest_sq(const Eigen::MatrixXd& M)
{
    Eigen::BDCSVD<Eigen::MatrixXd> svd(M);
    const double s = svd.singularValues()(0);
    return s * s;
}

void require_positive(double v, const char* what)
{
    if (!(v > 0.0)) {
        throw ConfigError(std::string(what) + " must be positive");
    }
}

std::vector<double> energy_errors(const ColumnMatrix& A, std::span<const double> x_star,
                                  const SolveTrace& trace)
{
    if (x_star.size() != A.cols()) {
        throw DimensionError("reference solution length does not match the column count");
    }
    if (trace.iterates.size() != trace.sets.size() + 1) {
        throw DimensionError("trace must hold one more iterate than index sets");
    }
    std::vector<double> energy;
    energy.reserve(trace.iterates.size());
    Vector diff(A.cols());
    for (const Vector& x : trace.iterates) {
        for (Index j = 0; j < A.cols(); ++j) {
            diff[j] = x[j] - x_star[j];
        }
        energy.push_back(norm_sq(A.multiply(diff)));
    }
    return energy;
}

void fill_aggregates(BoundReport& report, const SpectralData& spectra, double frob_sq,
                     std::size_t steps)
{
    report.alpha = 0.0;
    report.beta = steps > 0 ? spectra.sets[0].frob_sq : 0.0;
    report.gamma = 0.0;
    for (std::size_t k = 0; k < steps; ++k) {
        report.alpha = std::max(report.alpha, spectra.sets[k].sigma_max_sq);
        report.beta = std::min(report.beta, spectra.sets[k].frob_sq);
        if (k >= 1) {
            report.gamma = std::max(report.gamma, frob_sq - spectra.sets[k - 1].frob_sq);
        }
    }
}

} // namespace

std::uint64_t update_flops(Method method, std::uint64_t m, std::uint64_t n, std::uint64_t t)
{
    switch (method) {
    case Method::grcd:
    case Method::grcd_relaxed:
        return 2 * (m + n);
    case Method::gbgs:
        if (t < 1) break;
        return 2 * t * t * t + (4 * m - 3) * t * t + (m + 2 * n) * t;
    case Method::pgbgs:
        if (t < 1) break;
        return (2 * m + 2 * n + 1) * t;
    }
    throw ConfigError("update_flops: unknown method or empty working set");
}

std::uint64_t selection_flops(std::uint64_t stored_entries, std::uint64_t n)
{
    // 2 per stored entry for A^T r; square, divide, compare per column plus the reduction
    return 2 * stored_entries + 4 * n;
}

std::vector<double> singular_values_sq(const ColumnMatrix& A)
{
    require_desk_scale(A.rows(), A.cols());
    std::vector<Index> all(A.cols());
    for (Index j = 0; j < A.cols(); ++j) {
        all[j] = j;
    }
    Eigen::BDCSVD<Eigen::MatrixXd> svd(to_dense(A, all, false));
    std::vector<double> values;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
        const double s = svd.singularValues()(i);
        values.push_back(s * s);
    }
    return values;
}

double sigma_min_sq(const ColumnMatrix& A)
{
    const auto values = singular_values_sq(A);
    return values.back();
}

SetSpectra set_spectra(const ColumnMatrix& A, const IndexSet& set)
{
    require_desk_scale(A.rows(), set.size());
    SetSpectra out;
    for (Index j : set) {
        if (j >= A.cols()) {
            throw DimensionError("index set refers to a column outside the matrix");
        }
        out.frob_sq += A.column_norm_sq(j);
    }
    out.sigma_max_sq = largest_sq(to_dense(A, set.indices(), false));
    out.sigma_max_sq_tilde = largest_sq(to_dense(A, set.indices(), true));
    return out;
}

SpectralData spectral_quantities(const ColumnMatrix& A, std::span<const IndexSet> sets)
{
    SpectralData data;
    data.sigma_min_sq_A = sigma_min_sq(A);
    data.sets.reserve(sets.size());
    for (const IndexSet& set : sets) {
        data.sets.push_back(set_spectra(A, set));
    }
    return data;
}

double gbgs_factor(const SetSpectra& current, double sigma_min_sq_A, double frob_sq, double theta,
                   std::optional<double> prev_frob_sq_J)
{
    require_positive(current.sigma_max_sq, "sigma_max^2(A_J)");
    require_positive(sigma_min_sq_A, "sigma_min^2(A)");
    require_positive(frob_sq, "||A||_F^2");
    const double set_ratio = current.frob_sq / current.sigma_max_sq;
    const double base = sigma_min_sq_A / frob_sq;
    if (!prev_frob_sq_J) {
        return 1.0 - set_ratio * base;
    }
    const double remaining = frob_sq - *prev_frob_sq_J;
    if (!(remaining > 0.0)) {
        throw DegenerateBoundError("previous working set holds the whole Frobenius mass");
    }
    return 1.0 - set_ratio * (theta * frob_sq / remaining + (1.0 - theta)) * base;
}

double eta_factor(const SetSpectra& current, double sigma_min_sq_A, double frob_sq,
                  double prev_frob_sq_J)
{
    require_positive(current.sigma_max_sq, "sigma_max^2(A_J)");
    const double remaining = frob_sq - prev_frob_sq_J;
    if (!(remaining > 0.0)) {
        throw DegenerateBoundError("previous working set holds the whole Frobenius mass");
    }
    return 1.0 - current.frob_sq / current.sigma_max_sq * 0.5 * (frob_sq / remaining + 1.0) *
                     sigma_min_sq_A / frob_sq;
}

double grcd_reference_factor(const ColumnNormCache& norms, double sigma_min_sq_A)
{
    if (norms.col_norms_sq.size() < 2) {
        throw DegenerateBoundError("GRCD reference factor needs at least two columns");
    }
    require_positive(sigma_min_sq_A, "sigma_min^2(A)");
    const double min_col = *std::min_element(norms.col_norms_sq.begin(), norms.col_norms_sq.end());
    const double remaining = norms.frob_sq - min_col;
    if (!(remaining > 0.0)) {
        throw DegenerateBoundError("GRCD reference factor has a nonpositive denominator");
    }
    return 1.0 - 0.5 * (norms.frob_sq / remaining + 1.0) * sigma_min_sq_A / norms.frob_sq;
}

double pgbgs_factor(const SetSpectra& current, double sigma_min_sq_A, double frob_sq, double omega,
                    std::size_t set_size)
{
    require_positive(current.sigma_max_sq_tilde, "sigma_max^2(A~_J)");
    require_positive(sigma_min_sq_A, "sigma_min^2(A)");
    require_positive(frob_sq, "||A||_F^2");
    require_positive(omega, "omega");
    if (set_size == 0) {
        throw ConfigError("set_size must be positive");
    }
    const double gain = 2.0 * omega - omega * omega * current.sigma_max_sq_tilde;
    return 1.0 - gain * static_cast<double>(set_size) * sigma_min_sq_A / frob_sq;
}

bool range_lemma_check(const ColumnMatrix& A, std::span<const double> x, double sigma_min_sq_A)
{
    const double lhs = norm_sq(correlation(A, x));
    const double rhs = sigma_min_sq_A * norm_sq(x);
    return lhs >= rhs * (1.0 - 1e-12);
}

std::size_t BoundReport::violations(double slack) const
{
    std::size_t count = 0;
    for (std::size_t k = 0; k < measured.size(); ++k) {
        if (measured[k] > theoretical[k] + slack) {
            ++count;
        }
    }
    return count;
}

BoundReport gbgs_bound_report(const ColumnMatrix& A, std::span<const double> x_star,
                              const SolveTrace& trace, double theta)
{
    BoundReport report;
    report.energy_sq = energy_errors(A, x_star, trace);
    const SpectralData spectra = spectral_quantities(A, trace.sets);
    const double frob_sq = column_norms(A).frob_sq;
    report.sigma_min_sq_A = spectra.sigma_min_sq_A;

    std::size_t steps = 0;
    for (std::size_t k = 0; k < trace.sets.size(); ++k) {
        if (report.energy_sq[k] == 0.0) {
            break;
        }
        // a full previous set already lands on x*; what follows is roundoff
        if (k >= 1 && trace.sets[k - 1].size() == A.cols()) {
            break;
        }
        const std::optional<double> prev =
            k == 0 ? std::nullopt : std::optional<double>(spectra.sets[k - 1].frob_sq);
        report.theoretical.push_back(
            gbgs_factor(spectra.sets[k], spectra.sigma_min_sq_A, frob_sq, theta, prev));
        report.measured.push_back(report.energy_sq[k + 1] / report.energy_sq[k]);
        ++steps;
    }
    fill_aggregates(report, spectra, frob_sq, steps);
    return report;
}

BoundReport pgbgs_bound_report(const ColumnMatrix& A, std::span<const double> x_star,
                               const SolveTrace& trace, std::span<const double> omegas)
{
    if (omegas.size() != 1 && omegas.size() != trace.sets.size()) {
        throw DimensionError("need one omega per step or a single shared omega");
    }
    BoundReport report;
    report.energy_sq = energy_errors(A, x_star, trace);
    const SpectralData spectra = spectral_quantities(A, trace.sets);
    const double frob_sq = column_norms(A).frob_sq;
    report.sigma_min_sq_A = spectra.sigma_min_sq_A;

    std::size_t steps = 0;
    for (std::size_t k = 0; k < trace.sets.size(); ++k) {
        if (report.energy_sq[k] == 0.0) {
            break;
        }
        const double omega = omegas.size() == 1 ? omegas[0] : omegas[k];
        report.theoretical.push_back(pgbgs_factor(spectra.sets[k], spectra.sigma_min_sq_A, frob_sq,
                                                  omega, trace.sets[k].size()));
        report.measured.push_back(report.energy_sq[k + 1] / report.energy_sq[k]);
        ++steps;
    }
    fill_aggregates(report, spectra, frob_sq, steps);
    return report;
}

double gbgs_aggregate_factor(const BoundReport& report, double frob_sq, double theta)
{
    if (!(report.alpha > 0.0) || !(report.gamma > 0.0)) {
        throw DegenerateBoundError("aggregate factor needs at least two reported steps");
    }
    return 1.0 - report.beta / report.alpha * (theta * frob_sq / report.gamma + (1.0 - theta)) *
                     report.sigma_min_sq_A / frob_sq;
}

} // namespace greedyls
