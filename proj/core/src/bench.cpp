#include <greedyls/bench.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <random>
#include <set>

#include <greedyls/dense_qr.hpp>
#include <greedyls/io.hpp>
#include <greedyls/matrix_market.hpp>

namespace greedyls {

namespace {

// Seeds the null(A^T) draw apart from the x* draw.
constexpr std::uint64_t rhs_seed_offset = 0x9E3779B97F4A7C15ULL;

std::vector<double> dense_copy(const ColumnMatrix& A)
{
    std::vector<double> out(A.rows() * A.cols());
    for (Index j = 0; j < A.cols(); ++j) {
        A.copy_column(j, std::span<double>(out).subspan(j * A.rows(), A.rows()));
    }
    return out;
}

std::string_view to_string(Consistency c)
{
    return c == Consistency::consistent ? "consistent" : "inconsistent";
}

Consistency parse_consistency(const std::string& name)
{
    if (name == "consistent") return Consistency::consistent;
    if (name == "inconsistent") return Consistency::inconsistent;
    throw FormatError("unknown consistency '" + name + "'");
}

void reject_unknown_keys(const nlohmann::json& j, std::initializer_list<const char*> allowed,
                         const char* what)
{
    if (!j.is_object()) {
        throw FormatError(std::string(what) + " must be a JSON object");
    }
    const std::set<std::string> keys(allowed.begin(), allowed.end());
    for (const auto& [key, value] : j.items()) {
        if (!keys.contains(key)) {
            throw FormatError(std::string(what) + ": unknown key '" + key + "'");
        }
    }
}

template <class T>
T get_or(const nlohmann::json& j, const char* key, T fallback)
{
    if (!j.contains(key)) {
        return fallback;
    }
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("key '") + key + "': " + e.what());
    }
}

} // namespace

void ProblemSpec::validate() const
{
    if (const auto* random = std::get_if<RandomSource>(&source)) {
        if (!(random->cols >= 1 && random->rows > random->cols)) {
            throw ConfigError("random problems need rows > cols >= 1");
        }
    } else if (std::get<MatrixFileSource>(source).path.empty()) {
        throw ConfigError("matrix file path is empty");
    }
}

Vector random_normal_vector(Index length, std::uint64_t seed)
{
    Rng rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    Vector v(length);
    for (double& e : v) {
        e = normal(rng);
    }
    return v;
}

ColumnMatrix random_dense_matrix(Index rows, Index cols, std::uint64_t seed)
{
    return ColumnMatrix::dense(rows, cols, random_normal_vector(rows * cols, seed));
}

Vector null_space_component(const ColumnMatrix& A, std::span<const double> z)
{
    if (z.size() != A.rows()) {
        throw DimensionError("null_space_component: vector length mismatch");
    }
    const DenseQR qr(dense_copy(A), A.rows(), A.cols());
    if (!(qr.diagonal_ratio() >= rank_tolerance)) {
        throw RankDeficiencyError("matrix is numerically rank deficient");
    }
    Vector r(z.begin(), z.end());
    for (int pass = 0; pass < 2; ++pass) {
        const Vector y = qr.solve(r);
        for (Index j = 0; j < A.cols(); ++j) {
            A.add_scaled_column(j, -y[j], r);
        }
    }
    return r;
}

Vector inconsistent_rhs(const ColumnMatrix& A, std::span<const double> x_star, std::uint64_t seed)
{
    if (A.rows() <= A.cols()) {
        throw ConfigError("inconsistent right-hand side needs rows > cols (null(A^T) is trivial)");
    }
    if (x_star.size() != A.cols()) {
        throw DimensionError("reference solution length does not match the column count");
    }
    constexpr int max_draws = 16;
    for (int draw = 0; draw < max_draws; ++draw) {
        const Vector z = random_normal_vector(A.rows(), seed + static_cast<std::uint64_t>(draw));
        const Vector r0 = null_space_component(A, z);
        if (norm2(r0) > 1e-8 * norm2(z)) {
            Vector b = A.multiply(x_star);
            for (Index i = 0; i < b.size(); ++i) {
                b[i] += r0[i];
            }
            return b;
        }
    }
    throw NumericalError("could not draw a nonzero null(A^T) component");
}

Problem gen_problem(const ProblemSpec& spec)
{
    spec.validate();
    nlohmann::json descriptor;
    std::optional<ColumnMatrix> A;

    if (const auto* random = std::get_if<RandomSource>(&spec.source)) {
        for (int attempt = 0; attempt <= max_rank_retries && !A; ++attempt) {
            const std::uint64_t seed = random->seed + static_cast<std::uint64_t>(attempt);
            Vector values = random_normal_vector(random->rows * random->cols, seed);
            const DenseQR qr(values, random->rows, random->cols);
            if (qr.diagonal_ratio() >= rank_check_ratio) {
                A = ColumnMatrix::dense(random->rows, random->cols, std::move(values));
                descriptor = {{"source", "random"},
                              {"rows", random->rows},
                              {"cols", random->cols},
                              {"seed", random->seed},
                              {"effective_seed", seed}};
            }
        }
        if (!A) {
            throw RankDeficiencyError("random matrix failed the rank check after retries");
        }
    } else {
        const auto& file = std::get<MatrixFileSource>(spec.source);
        A = read_matrix_market(file.path);
        descriptor = {{"source", "matrix_market"},
                      {"path", file.path.string()},
                      {"rows", A->rows()},
                      {"cols", A->cols()}};
    }

    Problem problem{std::move(*A), {}, {}, 0.0, {}};
    problem.x_star = random_normal_vector(problem.A.cols(), spec.solution_seed);
    if (spec.consistency == Consistency::consistent) {
        problem.b = problem.A.multiply(problem.x_star);
    } else {
        problem.b = inconsistent_rhs(problem.A, problem.x_star, spec.solution_seed + rhs_seed_offset);
        problem.r0_norm = norm2(residual(problem.A, problem.x_star, problem.b));
    }
    descriptor["consistency"] = to_string(spec.consistency);
    descriptor["solution_seed"] = spec.solution_seed;
    descriptor["r0_norm"] = problem.r0_norm;
    problem.descriptor = std::move(descriptor);
    return problem;
}

double res(std::span<const double> x, std::span<const double> x_star)
{
    if (x.size() != x_star.size()) {
        throw DimensionError("res: length mismatch");
    }
    const double denom = norm_sq(x_star);
    if (!(denom > 0.0)) {
        throw ContractViolation("res needs a nonzero reference solution");
    }
    double diff = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - x_star[i];
        diff += d * d;
    }
    return diff / denom;
}

void write_history_csv(std::ostream& out, const SolveReport& report, bool full_flops_column)
{
    out << history_csv_header << (full_flops_column ? ",full_flops_cum" : "") << '\n';
    for (const IterationRecord& rec : report.history) {
        out << rec.k << ',' << rec.index_set_size << ',';
        if (rec.res) {
            out << format_double(*rec.res);
        }
        out << ',' << format_double(rec.normal_residual_norm) << ',' << rec.update_flops_cum << ','
            << format_double(rec.wall_time_s);
        if (full_flops_column) {
            out << ',' << rec.full_flops_cum;
        }
        out << '\n';
    }
}

nlohmann::json to_json(const SolverConfig& config)
{
    return {{"method", to_string(config.method)},
            {"theta", config.theta},
            {"omega", config.omega},
            {"tol", config.tol},
            {"max_iters", config.max_iters},
            {"stop", to_string(config.stop_mode)},
            {"refresh_period", config.refresh_period},
            {"seed", config.seed}};
}

SolverConfig config_from_json(const nlohmann::json& j, SolverConfig base)
{
    reject_unknown_keys(j, {"method", "theta", "omega", "tol", "max_iters", "stop", "refresh_period", "seed"},
                        "solver config");
    if (j.contains("method")) {
        base.method = parse_method(get_or<std::string>(j, "method", ""));
    }
    base.theta = get_or(j, "theta", base.theta);
    base.omega = get_or(j, "omega", base.omega);
    base.tol = get_or(j, "tol", base.tol);
    base.max_iters = get_or(j, "max_iters", base.max_iters);
    if (j.contains("stop")) {
        base.stop_mode = parse_stop_mode(get_or<std::string>(j, "stop", ""));
    }
    base.refresh_period = get_or(j, "refresh_period", base.refresh_period);
    base.seed = get_or(j, "seed", base.seed);
    base.validate();
    return base;
}

ProblemSpec problem_spec_from_json(const nlohmann::json& j)
{
    reject_unknown_keys(j, {"source", "rows", "cols", "seed", "path", "consistency", "solution_seed"},
                        "problem");
    ProblemSpec spec;
    const auto source = get_or<std::string>(j, "source", "random");
    if (source == "random") {
        spec.source = RandomSource{get_or<Index>(j, "rows", 0), get_or<Index>(j, "cols", 0),
                                   get_or<std::uint64_t>(j, "seed", 0)};
    } else if (source == "matrix_market") {
        spec.source = MatrixFileSource{get_or<std::string>(j, "path", "")};
    } else {
        throw FormatError("unknown problem source '" + source + "'");
    }
    spec.consistency = parse_consistency(get_or<std::string>(j, "consistency", "consistent"));
    spec.solution_seed = get_or<std::uint64_t>(j, "solution_seed", 0);
    spec.validate();
    return spec;
}

ExperimentPlan experiment_plan_from_json(const nlohmann::json& j)
{
    reject_unknown_keys(j, {"problems", "methods", "configs", "bounds", "full_flops"}, "bench config");
    ExperimentPlan plan;
    for (const auto& p : get_or(j, "problems", nlohmann::json::array())) {
        plan.problems.push_back(problem_spec_from_json(p));
    }
    for (const auto& m : get_or(j, "methods", nlohmann::json::array())) {
        if (!m.is_string()) {
            throw FormatError("methods must be strings");
        }
        plan.methods.push_back(parse_method(m.get<std::string>()));
    }
    const auto configs = get_or(j, "configs", nlohmann::json::array({nlohmann::json::object()}));
    for (const auto& c : configs) {
        plan.grid.push_back(config_from_json(c));
    }
    plan.compute_bounds = get_or(j, "bounds", false);
    plan.full_flops_column = get_or(j, "full_flops", false);
    return plan;
}

std::vector<RunRecord> run_experiment(std::span<const Problem> problems,
                                      std::span<const Method> methods,
                                      std::span<const SolverConfig> grid,
                                      const ExperimentOptions& options)
{
    std::vector<RunRecord> records;
    if (problems.empty() || methods.empty() || grid.empty()) {
        return records;
    }
    if (options.out_dir) {
        std::filesystem::create_directories(*options.out_dir);
    }

    std::size_t run_id = 0;
    for (const Problem& problem : problems) {
        for (Method method : methods) {
            for (const SolverConfig& base : grid) {
                RunRecord rec;
                rec.problem = problem.descriptor;
                rec.method = method;
                rec.config = base;
                rec.config.method = method;

                const bool want_bounds =
                    options.compute_bounds && (method == Method::gbgs || method == Method::pgbgs) &&
                    problem.A.rows() * problem.A.cols() <= dense_oracle_limit;
                SolverConfig effective = rec.config;
                effective.record_trace = effective.record_trace || want_bounds;
                try {
                    rec.report = run(problem.A, problem.b, effective, problem.x_star);
                    if (want_bounds) {
                        rec.bounds = method == Method::gbgs
                                         ? gbgs_bound_report(problem.A, problem.x_star,
                                                             rec.report->trace, effective.theta)
                                         : pgbgs_bound_report(problem.A, problem.x_star,
                                                              rec.report->trace,
                                                              std::span<const double>(&effective.omega, 1));
                    }
                } catch (const std::exception& e) {
                    rec.error = e.what();
                    if (rec.error.empty()) {
                        rec.error = "unknown failure";
                    }
                }
                if (rec.report && !rec.config.record_trace) {
                    rec.report->trace = {};
                }
                if (options.out_dir && rec.report) {
                    char name[64];
                    std::snprintf(name, sizeof name, "run%04zu_%s.csv", run_id,
                                  std::string(to_string(method)).c_str());
                    rec.history_file = *options.out_dir / name;
                    std::ofstream out(rec.history_file);
                    if (!out) {
                        throw FormatError("cannot write " + rec.history_file.string());
                    }
                    write_history_csv(out, *rec.report, options.full_flops_column);
                }
                records.push_back(std::move(rec));
                ++run_id;
            }
        }
    }

    if (options.out_dir) {
        std::ofstream out(*options.out_dir / "summary.json");
        if (!out) {
            throw FormatError("cannot write summary.json");
        }
        out << summary_json(records).dump(2) << '\n';
    }
    return records;
}

nlohmann::json summary_json(std::span<const RunRecord> records)
{
    nlohmann::json runs = nlohmann::json::array();
    for (std::size_t i = 0; i < records.size(); ++i) {
        const RunRecord& rec = records[i];
        nlohmann::json entry = {{"run", i},
                                {"problem", rec.problem},
                                {"method", to_string(rec.method)},
                                {"config", to_json(rec.config)},
                                {"error", rec.ok() ? nlohmann::json(nullptr) : nlohmann::json(rec.error)}};
        if (!rec.history_file.empty()) {
            entry["history_file"] = rec.history_file.filename().string();
        }
        if (rec.report) {
            const IterationRecord& last = rec.report->history.back();
            entry["converged"] = rec.report->converged;
            entry["iterations"] = rec.report->iterations;
            entry["stop_reason"] = to_string(rec.report->stop_reason);
            entry["final"] = {{"res", last.res ? nlohmann::json(*last.res) : nlohmann::json(nullptr)},
                              {"normal_residual_norm", last.normal_residual_norm},
                              {"update_flops_cum", last.update_flops_cum},
                              {"full_flops_cum", last.full_flops_cum},
                              {"wall_time_s", last.wall_time_s}};
        } else {
            entry["converged"] = false;
        }
        if (rec.bounds) {
            entry["bounds"] = {{"steps", rec.bounds->measured.size()},
                               {"violations", rec.bounds->violations()},
                               {"sigma_min_sq_A", rec.bounds->sigma_min_sq_A},
                               {"alpha", rec.bounds->alpha},
                               {"beta", rec.bounds->beta},
                               {"gamma", rec.bounds->gamma}};
        }
        runs.push_back(std::move(entry));
    }
    return {{"runs", runs}};
}

} // namespace greedyls
