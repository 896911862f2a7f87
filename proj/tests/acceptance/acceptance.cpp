// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <greedyls/analysis.hpp>
#include <greedyls/bench.hpp>
#include <greedyls/io.hpp>
#include <greedyls/matrix_market.hpp>
#include <greedyls/select.hpp>
#include <greedyls/solvers.hpp>

#include "oracles.hpp"

#ifndef _WIN32
#include <sys/wait.h>
#endif

namespace fs = std::filesystem;
using namespace greedyls;

namespace {

struct Outcome
{
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* format, double a)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, format, a);
    return buf;
}

// ---------------------------------------------------------------------------
// 1 and 2: desk-scale replication

Outcome replication(Consistency consistency)
{
    constexpr int seeds = 10;
    constexpr int required = 9;
    constexpr double min_ratio = 5.0;
    const auto start = std::chrono::steady_clock::now();

    std::ostringstream detail;
    bool pass = true;
    for (Index cols : {Index{100}, Index{200}}) {
        int good = 0;
        double worst_ratio = INFINITY;
        double worst_flops_ratio = 0.0;
        for (int seed = 1; seed <= seeds; ++seed) {
            ProblemSpec spec;
            spec.source = RandomSource{500, cols, static_cast<std::uint64_t>(seed)};
            spec.consistency = consistency;
            spec.solution_seed = static_cast<std::uint64_t>(seed);
            const Problem p = gen_problem(spec);

            SolverConfig config;
            config.theta = 0.5;
            config.omega = 1.0;
            config.tol = 1e-6;
            config.max_iters = 200000;
            config.stop_mode = StopMode::res_oracle;
            config.seed = static_cast<std::uint64_t>(seed);

            SolveReport reports[3];
            const Method methods[3] = {Method::grcd, Method::gbgs, Method::pgbgs};
            bool converged = true;
            for (int i = 0; i < 3; ++i) {
                config.method = methods[i];
                reports[i] = run(p.A, p.b, config, p.x_star);
                converged = converged && reports[i].converged && *reports[i].history.back().res < 1e-6;
            }
            const auto& grcd = reports[0];
            const auto& gbgs = reports[1];
            const auto& pgbgs = reports[2];
            const double ratio = static_cast<double>(grcd.iterations) / static_cast<double>(gbgs.iterations);
            const double flops_ratio = static_cast<double>(pgbgs.history.back().update_flops_cum) /
                                       static_cast<double>(gbgs.history.back().update_flops_cum);
            const bool ok = converged && gbgs.iterations < grcd.iterations && ratio >= min_ratio &&
                            pgbgs.history.back().update_flops_cum < gbgs.history.back().update_flops_cum;
            good += ok ? 1 : 0;
            worst_ratio = std::min(worst_ratio, ratio);
            worst_flops_ratio = std::max(worst_flops_ratio, flops_ratio);
        }
        pass = pass && good >= required;
        detail << "500x" << cols << ": " << good << "/" << seeds << " seeds ok, min GRCD/GBGS iters "
               << fmt("%.1f", worst_ratio) << "x, max PGBGS/GBGS flops " << fmt("%.3f", worst_flops_ratio)
               << "; ";
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    pass = pass && elapsed < 120.0;
    detail << "runtime " << fmt("%.2f", elapsed) << " s";
    return {pass, detail.str()};
}

// ---------------------------------------------------------------------------
// 3: GBGS contraction bound

Outcome gbgs_bound()
{
    std::mt19937_64 rng(301);
    std::size_t steps = 0;
    std::size_t violations = 0;
    double worst = -INFINITY;
    for (int trial = 0; trial < 20; ++trial) {
        const auto A = testing::random_dense(30, 10, rng);
        const auto x_star = testing::normal_vector(10, rng);
        const auto b = A.multiply(x_star);
        SolverConfig config;
        config.method = Method::gbgs;
        config.theta = 0.5;
        config.tol = 1e-12;
        config.record_trace = true;
        const auto report = run(A, b, config, x_star);
        const auto bounds = gbgs_bound_report(A, x_star, report.trace, config.theta);
        steps += bounds.measured.size();
        violations += bounds.violations(1e-12);
        for (std::size_t k = 0; k < bounds.measured.size(); ++k) {
            worst = std::max(worst, bounds.measured[k] - bounds.theoretical[k]);
        }
    }
    return {violations == 0 && steps > 0,
            std::to_string(steps) + " steps, " + std::to_string(violations) +
                " violations, max(measured - factor) " + fmt("%.3e", worst)};
}

// ---------------------------------------------------------------------------
// 4: PGBGS contraction bound with omega from the sufficient ranges

Outcome pgbgs_bound()
{
    std::mt19937_64 rng(301);
    std::mt19937_64 omega_rng(401);
    std::size_t steps = 0;
    std::size_t violations = 0;
    double worst = -INFINITY;
    std::size_t split_ranges = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const auto A = testing::random_dense(30, 10, rng);
        const auto x_star = testing::normal_vector(10, rng);
        const auto b = A.multiply(x_star);
        const auto norms = column_norms(A);
        const double smin = sigma_min_sq(A);

        SolveState state = initial_state(A, b);
        SolveTrace trace;
        trace.iterates.push_back(state.x);
        std::vector<double> omegas;
        for (int k = 0; k < 400 && res(state.x, x_star) >= 1e-12; ++k) {
            const Vector s = correlation(A, state.r);
            const IndexSet set = greedy_index_set(s, norms, epsilon_k(s, norms, 0.5));
            const SetSpectra spectra = set_spectra(A, set);
            const auto ranges = omega_range(spectra.sigma_max_sq_tilde, norms.frob_sq, set.size(), smin);
            split_ranges += ranges.size() > 1 ? 1 : 0;
            std::uniform_int_distribution<std::size_t> pick(0, ranges.size() - 1);
            const OpenInterval interval = ranges[pick(omega_rng)];
            std::uniform_real_distribution<double> u(interval.lo, interval.hi);
            double omega = u(omega_rng);
            while (!interval.contains(omega)) {
                omega = u(omega_rng);
            }
            omegas.push_back(omega);
            StepResult step = pgbgs_step(A, norms, state, s, 0.5, omega);
            trace.sets.push_back(std::move(step.set));
            trace.iterates.push_back(state.x);
        }
        const auto bounds = pgbgs_bound_report(A, x_star, trace, omegas);
        steps += bounds.measured.size();
        violations += bounds.violations(1e-12);
        for (std::size_t k = 0; k < bounds.measured.size(); ++k) {
            worst = std::max(worst, bounds.measured[k] - bounds.theoretical[k]);
        }
    }
    return {violations == 0 && steps > 0,
            std::to_string(steps) + " steps (" + std::to_string(split_ranges) + " with two ranges), " +
                std::to_string(violations) + " violations, max(measured - factor) " + fmt("%.3e", worst)};
}

// ---------------------------------------------------------------------------
// 5: GBGS and GRCD sets coincide

std::vector<Index> brute_force_set(const Vector& s, const ColumnMatrix& A)
{
    double frob = 0.0;
    double s2 = 0.0;
    double best = 0.0;
    std::vector<double> col(A.cols());
    for (Index j = 0; j < A.cols(); ++j) {
        double c = 0.0;
        for (Index i = 0; i < A.rows(); ++i) c += A.coeff(i, j) * A.coeff(i, j);
        col[j] = c;
        frob += c;
        s2 += s[j] * s[j];
        best = std::max(best, s[j] * s[j] / c);
    }
    const double delta = 0.5 * (best / s2 + 1.0 / frob);
    std::vector<Index> out;
    for (Index j = 0; j < A.cols(); ++j) {
        if (s[j] * s[j] >= delta * s2 * col[j] * (1.0 - 1e-12)) out.push_back(j);
    }
    return out;
}

Outcome set_coincidence()
{
    std::mt19937_64 rng(501);
    std::uniform_int_distribution<Index> rows(2, 60);
    int mismatches = 0;
    int brute_mismatches = 0;
    int bad_sets = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const Index m = rows(rng);
        std::uniform_int_distribution<Index> cols(1, m);
        const Index n = cols(rng);
        const auto A = trial % 3 == 0 ? testing::random_sparse(m, n, 0.3, rng) : testing::random_dense(m, n, rng);
        const auto norms = column_norms(A);
        SolveState shared = initial_state(A, testing::normal_vector(m, rng), testing::normal_vector(n, rng));
        const Vector s = correlation(A, shared.r);
        if (norm_sq(s) == 0.0) continue;

        SolveState b = shared;
        Rng sample(static_cast<std::uint64_t>(trial));
        const IndexSet j_set = greedy_index_set(s, norms, epsilon_k(s, norms, 0.5));
        const StepResult grcd = grcd_step(A, norms, b, s, sample);
        if (!(j_set == grcd.set)) ++mismatches;
        if (!A.is_sparse()) {
            // Gaussian columns: every subset has full rank, so the block step runs
            SolveState a = shared;
            if (!(gbgs_step(A, norms, a, s, 0.5).set == grcd.set)) ++mismatches;
        }
        const auto brute = brute_force_set(s, A);
        if (!std::ranges::equal(j_set.indices(), brute)) ++brute_mismatches;

        Index argmax = 0;
        for (Index j = 1; j < n; ++j) {
            if (s[j] * s[j] / norms.col_norms_sq[j] > s[argmax] * s[argmax] / norms.col_norms_sq[argmax]) argmax = j;
        }
        const bool chosen_ok = grcd.chosen && grcd.set.contains(*grcd.chosen);
        if (j_set.size() == 0 || !j_set.contains(argmax) || !chosen_ok) ++bad_sets;
    }
    return {mismatches == 0 && brute_mismatches == 0 && bad_sets == 0,
            "1000 states: " + std::to_string(mismatches) + " GBGS/GRCD set mismatches, " +
                std::to_string(brute_mismatches) + " brute-force mismatches, " + std::to_string(bad_sets) +
                " sets empty or missing the argmax"};
}

// ---------------------------------------------------------------------------
// 6: least-squares subsolve against the SVD pseudoinverse

Outcome pseudoinverse_oracle()
{
    std::mt19937_64 rng(601);
    std::uniform_int_distribution<Index> rows(1, 50);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const Index m = rows(rng);
        const Index t = std::uniform_int_distribution<Index>(1, std::min<Index>(10, m))(rng);
        const Index n = t + std::uniform_int_distribution<Index>(0, 10)(rng);
        const auto A = testing::random_dense(m, n, rng);
        std::vector<Index> all(n);
        for (Index j = 0; j < n; ++j) all[j] = j;
        std::shuffle(all.begin(), all.end(), rng);
        std::vector<Index> members(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(t));
        std::sort(members.begin(), members.end());
        const IndexSet set(members);
        const auto r = testing::normal_vector(m, rng);

        const Vector y = ls_subsolve(A, set, r);
        Eigen::MatrixXd AJ(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(t));
        const Eigen::MatrixXd full = testing::to_eigen(A);
        for (Index c = 0; c < t; ++c) AJ.col(static_cast<Eigen::Index>(c)) = full.col(static_cast<Eigen::Index>(members[c]));
        const Vector expected = testing::from_eigen(testing::pinv_svd(AJ) * testing::to_eigen(r));
        worst = std::max(worst, testing::rel_diff(y, expected));
    }
    return {worst <= 1e-10, "100 submatrices, max relative difference " + fmt("%.3e", worst)};
}

// ---------------------------------------------------------------------------
// 7: flops model

Outcome flops_model()
{
    std::mt19937_64 rng(701);
    int mismatches = 0;
    int order = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const std::uint64_t n = std::uniform_int_distribution<std::uint64_t>(1, 2000)(rng);
        const std::uint64_t m = n + std::uniform_int_distribution<std::uint64_t>(0, 8000)(rng);
        const std::uint64_t t = std::uniform_int_distribution<std::uint64_t>(1, n)(rng);
        const std::uint64_t grcd = 2 * (m + n);
        const std::uint64_t gbgs = 2 * t * t * t + (4 * m - 3) * t * t + (m + 2 * n) * t;
        const std::uint64_t pgbgs = (2 * m + 2 * n + 1) * t;
        if (update_flops(Method::grcd, m, n, t) != grcd) ++mismatches;
        if (update_flops(Method::gbgs, m, n, t) != gbgs) ++mismatches;
        if (update_flops(Method::pgbgs, m, n, t) != pgbgs) ++mismatches;
        if (!(update_flops(Method::gbgs, m, n, t) > update_flops(Method::pgbgs, m, n, t))) ++order;
    }
    return {mismatches == 0 && order == 0,
            "50 points, " + std::to_string(mismatches) + " closed-form mismatches, " + std::to_string(order) +
                " points with GBGS <= PGBGS"};
}

// ---------------------------------------------------------------------------
// 8: toy trace

Outcome toy_trace()
{
    const auto A = testing::toy_matrix();
    const Vector b{1.0, 2.0, 3.0};
    const Vector x_star{1.0, 1.0};
    SolverConfig config;
    config.method = Method::gbgs;
    config.theta = 0.5;
    config.tol = 1e-12;
    config.record_trace = true;
    const auto report = run(A, b, config, x_star);

    bool ok = report.converged && report.iterations == 2 && *report.history.back().res == 0.0;
    ok = ok && report.trace.sets.size() == 2 && report.trace.sets[0] == IndexSet({1}) &&
         report.trace.sets[1] == IndexSet({0});
    double worst = 0.0;
    for (std::size_t k = 0; k < report.trace.sets.size(); ++k) {
        const Vector r = residual(A, report.trace.iterates[k + 1], b);
        for (Index j : report.trace.sets[k]) {
            worst = std::max(worst, std::abs(A.column_dot(j, r)));
        }
    }
    ok = ok && worst <= 1e-12;
    return {ok, std::to_string(report.iterations) + " iterations, final RES " +
                    fmt("%.1e", *report.history.back().res) + ", sets {col 2} then {col 1}: " +
                    (report.trace.sets.size() == 2 && report.trace.sets[0] == IndexSet({1}) &&
                             report.trace.sets[1] == IndexSet({0})
                         ? "yes"
                         : "no") +
                    ", max |A_J^T r_{k+1}| " + fmt("%.1e", worst)};
}

// ---------------------------------------------------------------------------
// 9: range lemma

Outcome range_lemma()
{
    std::mt19937_64 rng(901);
    std::uniform_int_distribution<Index> rows(5, 120);
    int failures = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const Index m = rows(rng);
        const Index n = std::uniform_int_distribution<Index>(1, std::min<Index>(m - 1, 40))(rng);
        const auto A = testing::random_dense(m, n, rng);
        const auto z = testing::normal_vector(n, rng);
        const auto x = A.multiply(z);
        if (!range_lemma_check(A, x, testing::sigma_min_sq_svd(A))) ++failures;
    }
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const auto A = testing::random_dense(60, 15, rng);
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(testing::to_eigen(A), Eigen::ComputeThinV);
        const auto x = A.multiply(testing::from_eigen(svd.matrixV().col(14)));
        const double smin = svd.singularValues()(14) * svd.singularValues()(14);
        const double lhs = norm_sq(correlation(A, x));
        const double rhs = smin * norm_sq(x);
        worst = std::max(worst, std::abs(lhs - rhs) / rhs);
        if (!range_lemma_check(A, x, smin)) ++failures;
    }
    return {failures == 0 && worst <= 1e-10,
            "1000 pairs, " + std::to_string(failures) + " failures, minimal direction relative gap " +
                fmt("%.3e", worst)};
}

// ---------------------------------------------------------------------------
// 10: I/O contracts and determinism

bool same_entries(const ColumnMatrix& A, const ColumnMatrix& B)
{
    if (A.rows() != B.rows() || A.cols() != B.cols() || A.stored_entries() != B.stored_entries()) return false;
    for (Index j = 0; j < A.cols(); ++j) {
        std::vector<std::pair<Index, double>> ea;
        std::vector<std::pair<Index, double>> eb;
        A.for_each_in_column(j, [&](Index i, double v) { ea.emplace_back(i, v); });
        B.for_each_in_column(j, [&](Index i, double v) { eb.emplace_back(i, v); });
        if (ea != eb) return false;
    }
    return true;
}

std::vector<std::string> split(const std::string& line)
{
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

// Returns an empty string when the file honors the column contract.
std::string check_history(const fs::path& path, const RunRecord& rec, Index m, Index n)
{
    std::ifstream in(path);
    std::string line;
    if (!std::getline(in, line) || line != history_csv_header) return "bad header";
    std::uint64_t flops = 0;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        const auto f = split(line);
        if (f.size() != 6) return "row " + std::to_string(row) + " has " + std::to_string(f.size()) + " fields";
        if (std::stoull(f[0]) != row) return "iter column out of order";
        const std::uint64_t t = std::stoull(f[1]);
        if (row == 0 ? t != 0 : t == 0) return "bad index_set_size";
        if (row > 0) flops += update_flops(rec.method, m, n, t);
        if (std::stoull(f[4]) != flops) return "cumulative flops mismatch at row " + std::to_string(row);
        const bool normal = rec.config.stop_mode == StopMode::normal_residual;
        if (normal != f[2].empty()) return "res field presence does not match the stop mode";
        if (std::stod(f[3]) < 0.0 || std::stod(f[5]) < 0.0) return "negative metric";
        ++row;
    }
    if (row != rec.report->iterations + 1) return "row count differs from iterations + 1";
    return {};
}

std::string read_file(const fs::path& path)
{
    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// History text with the wall-time column removed.
std::string strip_wall_time(const std::string& text)
{
    std::istringstream in(text);
    std::string out;
    for (std::string line; std::getline(in, line);) {
        out += line.substr(0, line.rfind(',')) + '\n';
    }
    return out;
}

Outcome io_contracts()
{
    std::vector<std::string> problems;
    const fs::path dir = fs::temp_directory_path() / "greedyls_acceptance";
    fs::remove_all(dir);
    fs::create_directories(dir);

    std::mt19937_64 rng(1001);
    int round_trips = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const auto A = trial % 2 ? testing::random_dense(40, 12, rng) : testing::random_sparse(80, 30, 0.1, rng);
        const fs::path file = dir / ("m" + std::to_string(trial) + ".mtx");
        write_matrix_market(file, A);
        if (!same_entries(A, read_matrix_market(file))) problems.push_back("matrix round trip " + std::to_string(trial));
        const auto v = testing::normal_vector(17, rng);
        write_vector(dir / "v.txt", v);
        if (read_vector(dir / "v.txt") != v) problems.push_back("vector round trip " + std::to_string(trial));
        ++round_trips;
    }

    std::vector<Problem> batch;
    for (std::uint64_t seed : {11u, 12u}) {
        ProblemSpec spec;
        spec.source = RandomSource{80, 20, seed};
        spec.consistency = seed % 2 ? Consistency::inconsistent : Consistency::consistent;
        spec.solution_seed = seed;
        batch.push_back(gen_problem(spec));
    }
    const std::vector<Method> methods{Method::grcd, Method::grcd_relaxed, Method::gbgs, Method::pgbgs};
    std::vector<SolverConfig> grid(2);
    grid[0].tol = 1e-8;
    grid[0].seed = 5;
    grid[1].stop_mode = StopMode::normal_residual;
    grid[1].tol = 1e-8;
    grid[1].theta = 0.3;
    grid[1].omega = 0.9;
    grid[1].seed = 6;
    ExperimentOptions options;
    options.out_dir = dir / "runs";
    const auto records = run_experiment(batch, methods, grid, options);
    std::size_t files = 0;
    for (const auto& rec : records) {
        if (!rec.ok()) {
            problems.push_back("run failed: " + rec.error);
            continue;
        }
        const std::string issue = check_history(rec.history_file, rec, 80, 20);
        if (!issue.empty()) problems.push_back(rec.history_file.filename().string() + ": " + issue);
        ++files;
    }

    // same configuration twice in one process
    const auto again = run_experiment(batch, methods, grid, ExperimentOptions{dir / "runs_again"});
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (!records[i].report || !again[i].report || !same_numerics(*records[i].report, *again[i].report) ||
            records[i].report->x != again[i].report->x) {
            problems.push_back("run " + std::to_string(i) + " differs between repetitions");
        }
        if (strip_wall_time(read_file(records[i].history_file)) !=
            strip_wall_time(read_file(again[i].history_file))) {
            problems.push_back("history " + std::to_string(i) + " differs between repetitions");
        }
    }

    // and across separate CLI processes
    std::string cli_note;
#ifdef GREEDYLS_CLI_PATH
    {
        const std::string cli = GREEDYLS_CLI_PATH;
        const std::string prefix = (dir / "cli").string();
        auto sh = [](const std::string& cmd) {
            const int status = std::system((cmd + " > /dev/null 2>&1").c_str());
            return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        };
        int codes = sh(cli + " gen --rows 120 --cols 30 --seed 9 --inconsistent --out " + prefix);
        for (int i = 0; i < 2; ++i) {
            for (const char* m : {"grcd", "pgbgs"}) {
                codes += sh(cli + " solve --matrix " + prefix + "_A.mtx --rhs " + prefix + "_b.txt --xstar " + prefix +
                            "_xstar.txt --method " + m + " --tol 1e-8 --seed 3 --history " + prefix + "_" + m +
                            std::to_string(i) + ".csv --solution " + prefix + "_" + m + std::to_string(i) + "_x.txt");
            }
        }
        if (codes != 0) problems.push_back("CLI invocations failed");
        for (const char* m : {"grcd", "pgbgs"}) {
            const std::string a = prefix + "_" + m + "0";
            const std::string b = prefix + "_" + m + "1";
            if (strip_wall_time(read_file(a + ".csv")) != strip_wall_time(read_file(b + ".csv")) ||
                read_file(a + "_x.txt") != read_file(b + "_x.txt") || read_file(a + "_x.txt").empty()) {
                problems.push_back(std::string("CLI ") + m + " runs differ across processes");
            }
        }
        cli_note = ", CLI cross-process runs compared";
    }
#endif

    std::string detail = std::to_string(round_trips) + " round trips, " + std::to_string(files) +
                         " history files checked, " + std::to_string(records.size()) + " runs repeated" + cli_note;
    if (!problems.empty()) detail += "; first problem: " + problems.front();
    return {problems.empty() && files == records.size(), detail};
}

} // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"desk-scale replication, consistent", [] { return replication(Consistency::consistent); }},
        {"desk-scale replication, inconsistent", [] { return replication(Consistency::inconsistent); }},
        {"GBGS per-step contraction bound", gbgs_bound},
        {"PGBGS per-step contraction bound", pgbgs_bound},
        {"GBGS and GRCD index sets coincide", set_coincidence},
        {"least-squares subsolve vs SVD pseudoinverse", pseudoinverse_oracle},
        {"update flops model", flops_model},
        {"3x2 worked trace", toy_trace},
        {"range lemma", range_lemma},
        {"I/O round trip, CSV contract, determinism", io_contracts},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome outcome;
        try {
            outcome = criteria[i].second();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        failed += outcome.pass ? 0 : 1;
        std::cout << "criterion " << (i + 1) << " [" << criteria[i].first << "]: " << (outcome.pass ? "PASS" : "FAIL")
                  << " (" << outcome.detail << ")" << std::endl;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
              << " criteria passed" << std::endl;
    return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
