#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <greedyls/matcore.hpp>
#include <greedyls/select.hpp>

namespace greedyls {

enum class Method { grcd, grcd_relaxed, gbgs, pgbgs };

enum class StopMode {
    /// RES = ||x_k - x*||^2 / ||x*||^2 < tol, needs a reference solution
    res_oracle,
    /// ||A^T r_k|| / ||A^T b|| <= tol
    normal_residual,
};

std::string_view to_string(Method method);
std::string_view to_string(StopMode mode);
/// Accepts "grcd", "grcd-relaxed" (or "grcd_relaxed"), "gbgs", "pgbgs".
Method parse_method(std::string_view name);
/// Accepts "res" / "res_oracle" and "normal" / "normal_residual".
StopMode parse_stop_mode(std::string_view name);

struct SolverConfig
{
    Method method = Method::gbgs;
    /// Ignored by plain GRCD, which always uses delta_k.
    double theta = 0.5;
    /// PGBGS relaxation.
    double omega = 1.0;
    double tol = 1e-6;
    std::size_t max_iters = 200000;
    StopMode stop_mode = StopMode::res_oracle;
    /// Full residual recomputation every this many iterations.
    std::size_t refresh_period = 50;
    std::uint64_t seed = 0;
    /// Keep every iterate and index set in SolveReport::trace.
    bool record_trace = false;

    void validate() const;
};

struct SolveState
{
    Vector x;
    Vector r;
    std::size_t k = 0;
};

/// x = x0 (zero when absent), r = b - A x, k = 0.
SolveState initial_state(const ColumnMatrix& A, std::span<const double> b,
                         std::optional<std::span<const double>> x0 = std::nullopt);
/// Replaces the incrementally maintained residual with b - A x.
void refresh_residual(const ColumnMatrix& A, std::span<const double> b, SolveState& state);

struct IterationRecord
{
    std::size_t k = 0;
    /// |J| of the step that produced x_k; zero for k = 0.
    std::size_t index_set_size = 0;
    std::optional<double> res;
    double normal_residual_norm = 0.0;
    /// Update-rule flops only (the per-method closed forms).
    std::uint64_t update_flops_cum = 0;
    /// Update-rule flops plus the correlation A^T r_k and the greedy scan.
    std::uint64_t full_flops_cum = 0;
    double wall_time_s = 0.0;
};

enum class StopReason { tolerance, exact, iteration_cap };
std::string_view to_string(StopReason reason);

/// Iterates x_0..x_K and sets J_0..J_{K-1}; populated only with record_trace.
struct SolveTrace
{
    std::vector<Vector> iterates;
    std::vector<IndexSet> sets;
};

struct SolveReport
{
    Vector x;
    bool converged = false;
    StopReason stop_reason = StopReason::iteration_cap;
    std::size_t iterations = 0;
    std::vector<IterationRecord> history;
    SolveTrace trace;
};

/// Equality of everything a fixed seed determines: iterate, counters,
/// histories (wall times excluded) and traces.
bool same_numerics(const SolveReport& a, const SolveReport& b);

/// y = A_J^+ r through Householder QR of the m-by-t submatrix.
/// Throws RankDeficiencyError when min|R_ii| < 1e-12 max|R_ii|.
Vector ls_subsolve(const ColumnMatrix& A, const IndexSet& set, std::span<const double> r);

inline constexpr double rank_tolerance = 1e-12;

/// Result of one greedy step. For GRCD, chosen holds the sampled column and
/// set is the candidate set it was drawn from.
struct StepResult
{
    IndexSet set;
    std::optional<Index> chosen;
};

/// Block step x += I_J A_J^+ r over the greedy set. s must equal A^T r for
/// the current state; the overload without s computes it.
StepResult gbgs_step(const ColumnMatrix& A, const ColumnNormCache& norms, SolveState& state,
                     std::span<const double> s, double theta);
StepResult gbgs_step(const ColumnMatrix& A, const ColumnNormCache& norms, SolveState& state,
                     double theta);

/// Each j in J independently gains omega * s_j / ||A_(j)||^2.
StepResult pgbgs_step(const ColumnMatrix& A, const ColumnNormCache& norms, SolveState& state,
                      std::span<const double> s, double theta, double omega);
StepResult pgbgs_step(const ColumnMatrix& A, const ColumnNormCache& norms, SolveState& state,
                      double theta, double omega);

/// One coordinate step on a column sampled from the greedy set. Threshold is
/// delta_k, or epsilon_k(relaxed_theta) when given.
StepResult grcd_step(const ColumnMatrix& A, const ColumnNormCache& norms, SolveState& state,
                     std::span<const double> s, Rng& rng,
                     std::optional<double> relaxed_theta = std::nullopt);
StepResult grcd_step(const ColumnMatrix& A, const ColumnNormCache& norms, SolveState& state,
                     Rng& rng, std::optional<double> relaxed_theta = std::nullopt);

/// Runs the configured method from x0 (zero by default) and records one
/// IterationRecord per iterate including k = 0. RES is recorded only in
/// res_oracle mode.
SolveReport run(const ColumnMatrix& A, std::span<const double> b, const SolverConfig& config,
                std::optional<std::span<const double>> x_star = std::nullopt,
                std::optional<std::span<const double>> x0 = std::nullopt);

struct OpenInterval
{
    double lo;
    double hi;

    bool contains(double v) const noexcept { return v > lo && v < hi; }
    friend bool operator==(const OpenInterval&, const OpenInterval&) = default;
};

/// Sufficient PGBGS relaxation ranges for one working set, with
/// Delta = 1 - sigma_max^2(A~_J) ||A||_F^2 / (|J| sigma_min^2(A)).
std::vector<OpenInterval> omega_range(double sigma_max_sq_tilde, double frob_sq,
                                      std::size_t set_size, double sigma_min_sq_A);
double omega_discriminant(double sigma_max_sq_tilde, double frob_sq, std::size_t set_size,
                          double sigma_min_sq_A);

} // namespace greedyls
