#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <greedyls/matcore.hpp>
#include <greedyls/select.hpp>
#include <greedyls/solvers.hpp>

namespace greedyls {

/// Update-rule flop counts for a working set of size t:
///   grcd / grcd_relaxed  2(m + n)
///   gbgs                 2t^3 + (4m - 3)t^2 + (m + 2n)t
///   pgbgs                (2m + 2n + 1)t
std::uint64_t update_flops(Method method, std::uint64_t m, std::uint64_t n, std::uint64_t t);

/// Cost of forming A^T r_k and scanning the greedy scores once.
std::uint64_t selection_flops(std::uint64_t stored_entries, std::uint64_t n);

/// Spectral data of one working set J.
struct SetSpectra
{
    double sigma_max_sq = 0.0;        ///< sigma_max^2(A_J)
    double sigma_max_sq_tilde = 0.0;  ///< sigma_max^2 of A_J with unit-norm columns
    double frob_sq = 0.0;             ///< ||A_J||_F^2
};

struct SpectralData
{
    double sigma_min_sq_A = 0.0;
    std::vector<SetSpectra> sets;
};

/// Largest m * n accepted by the dense singular-value routines.
inline constexpr std::size_t dense_oracle_limit = 1'000'000;

/// Squared singular values of A, descending. Dense SVD; guarded by
/// dense_oracle_limit.
std::vector<double> singular_values_sq(const ColumnMatrix& A);
double sigma_min_sq(const ColumnMatrix& A);
SetSpectra set_spectra(const ColumnMatrix& A, const IndexSet& set);
SpectralData spectral_quantities(const ColumnMatrix& A, std::span<const IndexSet> sets);

/// GBGS contraction factor for a step over `current`. With no previous set
/// this is the first-step factor
///   1 - (||A_J||_F^2 / sigma_max^2(A_J)) sigma_min^2(A) / ||A||_F^2;
/// otherwise the bracket theta ||A||_F^2 / (||A||_F^2 - ||A_{J_prev}||_F^2) + (1 - theta)
/// multiplies the second term. Throws DegenerateBoundError when the previous
/// set holds the whole Frobenius mass.
double gbgs_factor(const SetSpectra& current, double sigma_min_sq_A, double frob_sq, double theta,
                   std::optional<double> prev_frob_sq_J);

/// The theta = 1/2 specialization written in its own algebraic form.
double eta_factor(const SetSpectra& current, double sigma_min_sq_A, double frob_sq,
                  double prev_frob_sq_J);

/// Expected-error factor of GRCD:
///   1 - 1/2 (||A||_F^2 / (||A||_F^2 - min_j ||A_(j)||^2) + 1) sigma_min^2(A) / ||A||_F^2
double grcd_reference_factor(const ColumnNormCache& norms, double sigma_min_sq_A);

/// 1 - (2 omega - omega^2 sigma_max^2(A~_J)) |J| sigma_min^2(A) / ||A||_F^2
double pgbgs_factor(const SetSpectra& current, double sigma_min_sq_A, double frob_sq, double omega,
                    std::size_t set_size);

/// ||A^T x||^2 >= sigma_min^2(A) ||x||^2 with 1e-12 relative slack, for x in
/// range(A).
bool range_lemma_check(const ColumnMatrix& A, std::span<const double> x, double sigma_min_sq_A);

/// Theoretical factors next to measured energy-norm error ratios
/// ||A(x_{k+1} - x*)||^2 / ||A(x_k - x*)||^2 for one completed solve.
struct BoundReport
{
    std::vector<double> theoretical;
    std::vector<double> measured;
    double sigma_min_sq_A = 0.0;
    /// max_k sigma_max^2(A_{J_k})
    double alpha = 0.0;
    /// min_k ||A_{J_k}||_F^2
    double beta = 0.0;
    /// max_{k>=1} (||A||_F^2 - ||A_{J_{k-1}}||_F^2); zero for single-step runs
    double gamma = 0.0;
    /// Squared energy errors ||A(x_k - x*)||^2, k = 0..K.
    std::vector<double> energy_sq;

    std::size_t violations(double slack = 1e-12) const;
    bool holds(double slack = 1e-12) const { return violations(slack) == 0; }
};

/// Steps whose starting energy error is already exactly zero are not
/// reported. Requires a trace recorded by run() or built by hand.
BoundReport gbgs_bound_report(const ColumnMatrix& A, std::span<const double> x_star,
                              const SolveTrace& trace, double theta);
/// omegas holds one relaxation per step, or a single value for all steps.
BoundReport pgbgs_bound_report(const ColumnMatrix& A, std::span<const double> x_star,
                               const SolveTrace& trace, std::span<const double> omegas);

/// Aggregate GBGS factor from a report's alpha, beta, gamma:
///   1 - (beta / alpha)(theta ||A||_F^2 / gamma + 1 - theta) sigma_min^2(A) / ||A||_F^2
double gbgs_aggregate_factor(const BoundReport& report, double frob_sq, double theta);

} // namespace greedyls
