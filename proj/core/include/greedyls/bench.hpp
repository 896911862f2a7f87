#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include <greedyls/analysis.hpp>
#include <greedyls/matcore.hpp>
#include <greedyls/solvers.hpp>

namespace greedyls {

/// Dense standard-normal m-by-n matrix, m > n.
struct RandomSource
{
    Index rows = 0;
    Index cols = 0;
    std::uint64_t seed = 0;
};

struct MatrixFileSource
{
    std::filesystem::path path;
};

enum class Consistency { consistent, inconsistent };

struct ProblemSpec
{
    std::variant<RandomSource, MatrixFileSource> source;
    Consistency consistency = Consistency::consistent;
    std::uint64_t solution_seed = 0;

    void validate() const;
};

struct Problem
{
    ColumnMatrix A;
    Vector b;
    Vector x_star;
    /// ||b - A x*||; zero for consistent problems.
    double r0_norm = 0.0;
    /// Source, seeds actually used, consistency, r0_norm.
    nlohmann::json descriptor;
};

/// Random A fails the rank check (min|R_ii|/max|R_ii| of its QR below this)
/// and is regenerated with seed + 1, at most max_rank_retries times.
inline constexpr double rank_check_ratio = 1e-12;
inline constexpr int max_rank_retries = 8;

/// Standard-normal entries from a seeded mt19937_64.
Vector random_normal_vector(Index length, std::uint64_t seed);
ColumnMatrix random_dense_matrix(Index rows, Index cols, std::uint64_t seed);

Problem gen_problem(const ProblemSpec& spec);

/// z - A A^+ z, with one reprojection pass to push A^T r0 to roundoff.
Vector null_space_component(const ColumnMatrix& A, std::span<const double> z);

/// b = A x* + r0 with r0 the null(A^T) component of a seeded normal draw,
/// redrawn while ||r0|| <= 1e-8 ||z||. Requires m > n.
Vector inconsistent_rhs(const ColumnMatrix& A, std::span<const double> x_star, std::uint64_t seed);

/// ||x - x*||^2 / ||x*||^2
double res(std::span<const double> x, std::span<const double> x_star);

/// iter,index_set_size,res,normal_residual_norm,update_flops_cum,wall_time_s
/// with full_flops_cum appended when requested. res is empty without an
/// oracle solution.
void write_history_csv(std::ostream& out, const SolveReport& report, bool full_flops_column = false);
inline constexpr const char* history_csv_header =
    "iter,index_set_size,res,normal_residual_norm,update_flops_cum,wall_time_s";

struct RunRecord
{
    nlohmann::json problem;
    Method method = Method::gbgs;
    SolverConfig config;
    std::optional<SolveReport> report;
    std::optional<BoundReport> bounds;
    std::string error;
    std::filesystem::path history_file;

    bool ok() const noexcept { return error.empty(); }
};

struct ExperimentOptions
{
    /// Histories (one CSV per run) and summary.json land here when set.
    std::optional<std::filesystem::path> out_dir;
    /// BoundReport for GBGS/PGBGS runs on matrices within dense_oracle_limit.
    bool compute_bounds = false;
    bool full_flops_column = false;
};

/// Every (problem, method, config) triple, in that nesting order. The method
/// overrides config.method. Failures are recorded per run and never abort
/// the batch. No files are written when there is nothing to run.
std::vector<RunRecord> run_experiment(std::span<const Problem> problems,
                                      std::span<const Method> methods,
                                      std::span<const SolverConfig> grid,
                                      const ExperimentOptions& options = {});

nlohmann::json to_json(const SolverConfig& config);
/// Missing keys keep the value from base.
SolverConfig config_from_json(const nlohmann::json& j, SolverConfig base = {});
ProblemSpec problem_spec_from_json(const nlohmann::json& j);
nlohmann::json summary_json(std::span<const RunRecord> records);

/// Batch description read by `greedyls bench --config`.
struct ExperimentPlan
{
    std::vector<ProblemSpec> problems;
    std::vector<Method> methods;
    std::vector<SolverConfig> grid;
    bool compute_bounds = false;
    bool full_flops_column = false;
};

ExperimentPlan experiment_plan_from_json(const nlohmann::json& j);

} // namespace greedyls
