#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <greedyls/bench.hpp>
#include <greedyls/errors.hpp>
#include <greedyls/io.hpp>
#include <greedyls/matrix_market.hpp>
#include <greedyls/solvers.hpp>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_numerical = 2;

struct GenArgs
{
    greedyls::Index rows = 0;
    greedyls::Index cols = 0;
    std::uint64_t seed = 0;
    bool consistent = false;
    bool inconsistent = false;
    std::string prefix;
};

struct SolveArgs
{
    std::string matrix;
    std::string rhs;
    std::string xstar;
    std::string method = "gbgs";
    std::string stop;
    std::string history;
    std::string solution;
    greedyls::SolverConfig config;
};

struct BenchArgs
{
    std::string config;
    std::string out;
};

int run_gen(const GenArgs& args)
{
    greedyls::ProblemSpec spec;
    spec.source = greedyls::RandomSource{args.rows, args.cols, args.seed};
    spec.consistency = args.inconsistent ? greedyls::Consistency::inconsistent
                                         : greedyls::Consistency::consistent;
    spec.solution_seed = args.seed;
    const greedyls::Problem problem = greedyls::gen_problem(spec);

    greedyls::write_matrix_market(args.prefix + "_A.mtx", problem.A);
    greedyls::write_vector(args.prefix + "_b.txt", problem.b);
    greedyls::write_vector(args.prefix + "_xstar.txt", problem.x_star);
    std::cout << problem.descriptor.dump() << '\n';
    return exit_ok;
}

int run_solve(SolveArgs args)
{
    const greedyls::ColumnMatrix A = greedyls::read_matrix_market(args.matrix);
    const greedyls::Vector b = greedyls::read_vector(args.rhs);
    std::optional<greedyls::Vector> x_star;
    if (!args.xstar.empty()) {
        x_star = greedyls::read_vector(args.xstar);
    }

    greedyls::SolverConfig& config = args.config;
    config.method = greedyls::parse_method(args.method);
    if (args.stop.empty()) {
        config.stop_mode = x_star ? greedyls::StopMode::res_oracle : greedyls::StopMode::normal_residual;
    } else {
        config.stop_mode = greedyls::parse_stop_mode(args.stop);
    }
    config.validate();

    std::optional<std::span<const double>> oracle;
    if (x_star) {
        oracle = std::span<const double>(*x_star);
    }
    const greedyls::SolveReport report = greedyls::run(A, b, config, oracle);

    if (!args.history.empty()) {
        std::ofstream out(args.history);
        if (!out) {
            throw greedyls::FormatError("cannot write " + args.history);
        }
        greedyls::write_history_csv(out, report);
    }
    if (!args.solution.empty()) {
        greedyls::write_vector(args.solution, report.x);
    }

    const greedyls::IterationRecord& last = report.history.back();
    nlohmann::json summary = {{"method", greedyls::to_string(config.method)},
                              {"converged", report.converged},
                              {"stop_reason", greedyls::to_string(report.stop_reason)},
                              {"iterations", report.iterations},
                              {"normal_residual_norm", last.normal_residual_norm},
                              {"update_flops_cum", last.update_flops_cum},
                              {"wall_time_s", last.wall_time_s}};
    summary["res"] = last.res ? nlohmann::json(*last.res) : nlohmann::json(nullptr);
    std::cout << summary.dump() << '\n';
    if (!report.converged) {
        std::cerr << "greedyls: no convergence within " << config.max_iters << " iterations\n";
        return exit_numerical;
    }
    return exit_ok;
}

int run_bench(const BenchArgs& args)
{
    std::ifstream in(args.config);
    if (!in) {
        throw greedyls::ConfigError("cannot open " + args.config);
    }
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw greedyls::FormatError(args.config + ": " + e.what());
    }
    const greedyls::ExperimentPlan plan = greedyls::experiment_plan_from_json(j);

    std::vector<greedyls::Problem> problems;
    problems.reserve(plan.problems.size());
    for (const auto& spec : plan.problems) {
        problems.push_back(greedyls::gen_problem(spec));
    }
    greedyls::ExperimentOptions options;
    options.out_dir = args.out;
    options.compute_bounds = plan.compute_bounds;
    options.full_flops_column = plan.full_flops_column;
    const auto records = greedyls::run_experiment(problems, plan.methods, plan.grid, options);

    std::size_t failed = 0;
    for (const auto& rec : records) {
        if (!rec.ok()) {
            std::cerr << "greedyls: run failed (" << greedyls::to_string(rec.method) << "): " << rec.error
                      << '\n';
            ++failed;
        }
    }
    std::cout << records.size() << " runs, " << failed << " failed\n";
    return failed == 0 ? exit_ok : exit_numerical;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Greedy block Gauss-Seidel least-squares solvers"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a random test problem");
    gen_cmd->add_option("--rows", gen.rows, "Rows m")->required();
    gen_cmd->add_option("--cols", gen.cols, "Columns n")->required();
    gen_cmd->add_option("--seed", gen.seed, "Matrix and solution seed")->required();
    auto* consistent = gen_cmd->add_flag("--consistent", gen.consistent, "b = A x*");
    auto* inconsistent = gen_cmd->add_flag("--inconsistent", gen.inconsistent, "b = A x* + r0, A^T r0 = 0");
    consistent->excludes(inconsistent);
    gen_cmd->add_option("--out", gen.prefix, "Output prefix")->required();

    SolveArgs solve;
    auto* solve_cmd = app.add_subcommand("solve", "Solve min ||Ax - b|| from files");
    solve_cmd->add_option("--matrix", solve.matrix, "Matrix Market file")->required()->check(CLI::ExistingFile);
    solve_cmd->add_option("--rhs", solve.rhs, "Right-hand side vector file")->required()->check(CLI::ExistingFile);
    solve_cmd->add_option("--xstar", solve.xstar, "Reference solution for RES")->check(CLI::ExistingFile);
    solve_cmd->add_option("--method", solve.method, "grcd|grcd-relaxed|gbgs|pgbgs")
        ->check(CLI::IsMember({"grcd", "grcd-relaxed", "grcd_relaxed", "gbgs", "pgbgs"}));
    solve_cmd->add_option("--theta", solve.config.theta, "Greedy threshold weight in [0, 1]");
    solve_cmd->add_option("--omega", solve.config.omega, "PGBGS relaxation");
    solve_cmd->add_option("--tol", solve.config.tol, "Stopping tolerance");
    solve_cmd->add_option("--max-iters", solve.config.max_iters, "Iteration cap");
    solve_cmd->add_option("--stop", solve.stop, "res|normal (default res with --xstar, else normal)")
        ->check(CLI::IsMember({"res", "normal"}));
    solve_cmd->add_option("--seed", solve.config.seed, "Sampling seed");
    solve_cmd->add_option("--refresh-period", solve.config.refresh_period, "Full residual refresh period");
    solve_cmd->add_option("--history", solve.history, "History CSV output");
    solve_cmd->add_option("--solution", solve.solution, "Write the final iterate here");

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand("bench", "Run a batch of experiments");
    bench_cmd->add_option("--config", bench.config, "Experiment JSON")->required()->check(CLI::ExistingFile);
    bench_cmd->add_option("--out", bench.out, "Output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }
    if (gen_cmd->parsed() && !gen.consistent && !gen.inconsistent) {
        std::cerr << "greedyls gen: one of --consistent or --inconsistent is required\n";
        return exit_usage;
    }

    try {
        if (gen_cmd->parsed()) return run_gen(gen);
        if (solve_cmd->parsed()) return run_solve(solve);
        return run_bench(bench);
    } catch (const greedyls::NumericalError& e) {
        std::cerr << "greedyls: numerical failure: " << e.what() << '\n';
        return exit_numerical;
    } catch (const std::exception& e) {
        std::cerr << "greedyls: " << e.what() << '\n';
        return exit_usage;
    }
}
