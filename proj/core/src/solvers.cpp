#include <greedyls/solvers.hpp>

#include <chrono>
#include <cmath>
#include <sstream>

#include <greedyls/analysis.hpp>
#include <greedyls/dense_qr.hpp>

namespace greedyls {

namespace {

std::string describe(const IndexSet& set)
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (Index j : set) {
        os << (first ? "" : ", ") << j;
        first = false;
    }
    os << '}';
    return os.str();
}

void require_correlation(const ColumnMatrix& A, std::span<const double> s)
{
    if (s.size() != A.cols()) {
        throw DimensionError("correlation vector length does not match the column count");
    }
}

void require_state(const ColumnMatrix& A, const SolveState& state)
{
    if (state.x.size() != A.cols() || state.r.size() != A.rows()) {
        throw DimensionError("solve state does not conform to the matrix");
    }
}

} // namespace

std::string_view to_string(Method method)
{
    switch (method) {
    case Method::grcd: return "grcd";
    case Method::grcd_relaxed: return "grcd-relaxed";
    case Method::gbgs: return "gbgs";
    case Method::pgbgs: return "pgbgs";
    }
    return "unknown";
}

std::string_view to_string(StopMode mode)
{
    return mode == StopMode::res_oracle ? "res" : "normal";
}

std::string_view to_string(StopReason reason)
{
    switch (reason) {
    case StopReason::tolerance: return "tolerance";
    case StopReason::exact: return "exact";
    case StopReason::iteration_cap: return "iteration_cap";
    }
    return "unknown";
}

Method parse_method(std::string_view name)
{
    if (name == "grcd") return Method::grcd;
    if (name == "grcd-relaxed" || name == "grcd_relaxed") return Method::grcd_relaxed;
    if (name == "gbgs") return Method::gbgs;
    if (name == "pgbgs") return Method::pgbgs;
    throw ConfigError("unknown method '" + std::string(name) + "'");
}

StopMode parse_stop_mode(std::string_view name)
{
    if (name == "res" || name == "res_oracle") return StopMode::res_oracle;
    if (name == "normal" || name == "normal_residual") return StopMode::normal_residual;
    throw ConfigError("unknown stop mode '" + std::string(name) + "'");
}

void SolverConfig::validate() const
{
    SelectionParams{theta}.validate();
    if (!(omega > 0.0) || !std::isfinite(omega)) {
        throw ConfigError("omega must be positive");
    }
    if (!(tol > 0.0)) {
        throw ConfigError("tol must be positive");
    }
    if (refresh_period < 1) {
        throw ConfigError("refresh_period must be at least 1");
    }
}

SolveState initial_state(const ColumnMatrix& A, std::span<const double> b,
                         std::optional<std::span<const double>> x0)
{
    SolveState state;
    if (x0) {
        if (x0->size() != A.cols()) {
            throw DimensionError("initial iterate length does not match the column count");
        }
        state.x.assign(x0->begin(), x0->end());
    } else {
        state.x.assign(A.cols(), 0.0);
    }
    state.r = residual(A, state.x, b);
    return state;
}

void refresh_residual(const ColumnMatrix& A, std::span<const double> b, SolveState& state)
{
    residual_into(A, state.x, b, state.r);
}

Vector ls_subsolve(const ColumnMatrix& A, const IndexSet& set, std::span<const double> r)
{
    if (r.size() != A.rows()) {
        throw DimensionError("ls_subsolve: residual length mismatch");
    }
    const Index m = A.rows();
    const Index t = set.size();
    if (t > m) {
        throw RankDeficiencyError("column submatrix " + describe(set) + " has more columns than rows");
    }
    std::vector<double> sub(m * t);
    for (Index p = 0; p < t; ++p) {
        const Index j = set.indices()[p];
        if (j >= A.cols()) {
            throw DimensionError("index set refers to column " + std::to_string(j) +
                                 " outside the matrix");
        }
        A.copy_column(j, std::span<double>(sub).subspan(p * m, m));
    }
    const DenseQR qr(std::move(sub), m, t);
    if (!(qr.diagonal_ratio() >= rank_tolerance)) {
        throw RankDeficiencyError("column submatrix " + describe(set) + " is numerically rank deficient");
    }
    return qr.solve(r);
}

StepResult gbgs_step(const ColumnMatrix& A, const ColumnNormCache& norms, SolveState& state,
                     std::span<const double> s, double theta)
{
    require_state(A, state);
    require_correlation(A, s);
    const GreedyScores scores = greedy_scores(s, norms);
    IndexSet set = greedy_index_set(scores, epsilon_k(scores, norms.frob_sq, theta));
    const Vector y = ls_subsolve(A, set, state.r);
    for (Index p = 0; p < set.size(); ++p) {
        const Index j = set.indices()[p];
        state.x[j] += y[p];
        A.add_scaled_column(j, -y[p], state.r);
    }
    ++state.k;
    return {std::move(set), std::nullopt};
}

StepResult gbgs_step(const ColumnMatrix& A, const ColumnNormCache& norms, SolveState& state,
                     double theta)
{
    const Vector s = correlation(A, state.r);
    return gbgs_step(A, norms, state, s, theta);
}

StepResult pgbgs_step(const ColumnMatrix& A, const ColumnNormCache& norms, SolveState& state,
                      std::span<const double> s, double theta, double omega)
{
    require_state(A, state);
    require_correlation(A, s);
    const GreedyScores scores = greedy_scores(s, norms);
    IndexSet set = greedy_index_set(scores, epsilon_k(scores, norms.frob_sq, theta));
    // every correction reads the same r_k; apply to r only after all are known
    std::vector<double> corrections(set.size());
    for (Index p = 0; p < set.size(); ++p) {
        const Index j = set.indices()[p];
        corrections[p] = omega * s[j] / norms.col_norms_sq[j];
    }
    for (Index p = 0; p < set.size(); ++p) {
        const Index j = set.indices()[p];
        state.x[j] += corrections[p];
        A.add_scaled_column(j, -corrections[p], state.r);
    }
    ++state.k;
    return {std::move(set), std::nullopt};
}

StepResult pgbgs_step(const ColumnMatrix& A, const ColumnNormCache& norms, SolveState& state,
                      double theta, double omega)
{
    const Vector s = correlation(A, state.r);
    return pgbgs_step(A, norms, state, s, theta, omega);
}

StepResult grcd_step(const ColumnMatrix& A, const ColumnNormCache& norms, SolveState& state,
                     std::span<const double> s, Rng& rng, std::optional<double> relaxed_theta)
{
    require_state(A, state);
    require_correlation(A, s);
    const GreedyScores scores = greedy_scores(s, norms);
    const double threshold = relaxed_theta ? epsilon_k(scores, norms.frob_sq, *relaxed_theta)
                                           : delta_k(scores, norms.frob_sq);
    IndexSet set = greedy_index_set(scores, threshold);
    const Index j = sample_index(set, s, rng);
    const double step = s[j] / norms.col_norms_sq[j];
    state.x[j] += step;
    A.add_scaled_column(j, -step, state.r);
    ++state.k;
    return {std::move(set), j};
}

StepResult grcd_step(const ColumnMatrix& A, const ColumnNormCache& norms, SolveState& state,
                     Rng& rng, std::optional<double> relaxed_theta)
{
    const Vector s = correlation(A, state.r);
    return grcd_step(A, norms, state, s, rng, relaxed_theta);
}

SolveReport run(const ColumnMatrix& A, std::span<const double> b, const SolverConfig& config,
                std::optional<std::span<const double>> x_star,
                std::optional<std::span<const double>> x0)
{
    config.validate();
    if (b.size() != A.rows()) {
        throw DimensionError("right-hand side length does not match the row count");
    }
    double x_star_norm_sq = 0.0;
    if (x_star) {
        if (x_star->size() != A.cols()) {
            throw DimensionError("reference solution length does not match the column count");
        }
        x_star_norm_sq = norm_sq(*x_star);
    }
    if (config.stop_mode == StopMode::res_oracle && (!x_star || !(x_star_norm_sq > 0.0))) {
        throw ConfigError("res stopping needs a nonzero reference solution");
    }

    const Index m = A.rows();
    const Index n = A.cols();
    const ColumnNormCache norms = column_norms(A);
    SolveState state = initial_state(A, b, x0);
    Rng rng(config.seed);
    Vector s(n);
    const double atb_norm =
        config.stop_mode == StopMode::normal_residual ? norm2(correlation(A, b)) : 0.0;
    const std::uint64_t selection_cost = selection_flops(A.stored_entries(), n);

    SolveReport report;
    std::size_t last_set_size = 0;
    std::uint64_t update_cum = 0;
    std::uint64_t full_cum = 0;
    const auto start = std::chrono::steady_clock::now();

    for (;;) {
        correlation_into(A, state.r, s);
        IterationRecord rec;
        rec.k = state.k;
        rec.index_set_size = last_set_size;
        rec.normal_residual_norm = norm2(s);
        rec.update_flops_cum = update_cum;
        rec.full_flops_cum = full_cum;
        if (config.stop_mode == StopMode::res_oracle) {
            double diff_sq = 0.0;
            for (Index j = 0; j < n; ++j) {
                const double d = state.x[j] - (*x_star)[j];
                diff_sq += d * d;
            }
            rec.res = diff_sq / x_star_norm_sq;
        }
        rec.wall_time_s =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report.history.push_back(rec);
        if (config.record_trace) {
            report.trace.iterates.push_back(state.x);
        }

        const bool met = config.stop_mode == StopMode::res_oracle
                             ? *rec.res < config.tol
                             : rec.normal_residual_norm <= config.tol * atb_norm;
        if (met) {
            report.converged = true;
            report.stop_reason = StopReason::tolerance;
            break;
        }
        if (rec.normal_residual_norm == 0.0) {
            report.converged = true;
            report.stop_reason = StopReason::exact;
            break;
        }
        if (state.k >= config.max_iters) {
            report.stop_reason = StopReason::iteration_cap;
            break;
        }

        StepResult step = [&] {
            switch (config.method) {
            case Method::grcd: return grcd_step(A, norms, state, s, rng);
            case Method::grcd_relaxed: return grcd_step(A, norms, state, s, rng, config.theta);
            case Method::gbgs: return gbgs_step(A, norms, state, s, config.theta);
            case Method::pgbgs: return pgbgs_step(A, norms, state, s, config.theta, config.omega);
            }
            throw ConfigError("unknown method");
        }();
        last_set_size = step.set.size();
        const std::uint64_t cost = update_flops(config.method, m, n, last_set_size);
        update_cum += cost;
        full_cum += cost + selection_cost;
        if (config.record_trace) {
            report.trace.sets.push_back(std::move(step.set));
        }
        if (state.k % config.refresh_period == 0) {
            refresh_residual(A, b, state);
        }
    }

    report.iterations = state.k;
    report.x = std::move(state.x);
    return report;
}

bool same_numerics(const SolveReport& a, const SolveReport& b)
{
    if (a.x != b.x || a.converged != b.converged || a.stop_reason != b.stop_reason ||
        a.iterations != b.iterations || a.history.size() != b.history.size() ||
        a.trace.iterates != b.trace.iterates || a.trace.sets != b.trace.sets) {
        return false;
    }
    for (std::size_t i = 0; i < a.history.size(); ++i) {
        const auto& ra = a.history[i];
        const auto& rb = b.history[i];
        if (ra.k != rb.k || ra.index_set_size != rb.index_set_size || ra.res != rb.res ||
            ra.normal_residual_norm != rb.normal_residual_norm ||
            ra.update_flops_cum != rb.update_flops_cum || ra.full_flops_cum != rb.full_flops_cum) {
            return false;
        }
    }
    return true;
}

double omega_discriminant(double sigma_max_sq_tilde, double frob_sq, std::size_t set_size,
                          double sigma_min_sq_A)
{
    if (!(sigma_max_sq_tilde > 0.0) || !(frob_sq > 0.0) || set_size == 0 ||
        !(sigma_min_sq_A > 0.0)) {
        throw ConfigError("omega_range inputs must be positive");
    }
    return 1.0 - sigma_max_sq_tilde * frob_sq / (static_cast<double>(set_size) * sigma_min_sq_A);
}

std::vector<OpenInterval> omega_range(double sigma_max_sq_tilde, double frob_sq,
                                      std::size_t set_size, double sigma_min_sq_A)
{
    const double delta = omega_discriminant(sigma_max_sq_tilde, frob_sq, set_size, sigma_min_sq_A);
    const double upper = 2.0 / sigma_max_sq_tilde;
    if (delta < 0.0) {
        return {{0.0, upper}};
    }
    const double root = std::sqrt(delta);
    return {{0.0, (1.0 - root) / sigma_max_sq_tilde}, {(1.0 + root) / sigma_max_sq_tilde, upper}};
}

} // namespace greedyls
