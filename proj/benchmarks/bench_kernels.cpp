#include <benchmark/benchmark.h>

#include <greedyls/bench.hpp>
#include <greedyls/select.hpp>
#include <greedyls/solvers.hpp>

namespace {

using namespace greedyls;

Problem make_problem(benchmark::State& state)
{
    ProblemSpec spec;
    spec.source = RandomSource{static_cast<Index>(state.range(0)), static_cast<Index>(state.range(1)), 1};
    spec.solution_seed = 1;
    return gen_problem(spec);
}

void BM_Correlation(benchmark::State& state)
{
    const Problem p = make_problem(state);
    Vector s(p.A.cols());
    for (auto _ : state) {
        correlation_into(p.A, p.b, s);
        benchmark::DoNotOptimize(s.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(p.A.stored_entries()));
}

void BM_GreedyIndexSet(benchmark::State& state)
{
    const Problem p = make_problem(state);
    const auto norms = column_norms(p.A);
    const Vector s = correlation(p.A, p.b);
    for (auto _ : state) {
        benchmark::DoNotOptimize(greedy_index_set(s, norms, delta_k(s, norms)));
    }
}

template <Method M>
void BM_Step(benchmark::State& state)
{
    const Problem p = make_problem(state);
    const auto norms = column_norms(p.A);
    Rng rng(7);
    SolveState solve = initial_state(p.A, p.b);
    std::size_t total_set = 0;
    for (auto _ : state) {
        if (solve.k >= 200) {
            state.PauseTiming();
            solve = initial_state(p.A, p.b);
            state.ResumeTiming();
        }
        StepResult step = [&] {
            if constexpr (M == Method::gbgs) return gbgs_step(p.A, norms, solve, 0.5);
            else if constexpr (M == Method::pgbgs) return pgbgs_step(p.A, norms, solve, 0.5, 1.0);
            else return grcd_step(p.A, norms, solve, rng);
        }();
        total_set += step.set.size();
        benchmark::DoNotOptimize(solve.x.data());
    }
    state.counters["avg_set"] = benchmark::Counter(static_cast<double>(total_set),
                                                   benchmark::Counter::kAvgIterations);
}

void BM_Solve(benchmark::State& state)
{
    const Problem p = make_problem(state);
    SolverConfig config;
    config.method = static_cast<Method>(state.range(2));
    for (auto _ : state) {
        const SolveReport report = run(p.A, p.b, config, p.x_star);
        state.counters["iterations"] = static_cast<double>(report.iterations);
    }
}

} // namespace

BENCHMARK(BM_Correlation)->Args({500, 100})->Args({500, 200})->Args({5000, 1000});
BENCHMARK(BM_GreedyIndexSet)->Args({500, 100})->Args({5000, 1000});
BENCHMARK(BM_Step<Method::grcd>)->Name("BM_Step/grcd")->Args({500, 100})->Args({500, 200});
BENCHMARK(BM_Step<Method::gbgs>)->Name("BM_Step/gbgs")->Args({500, 100})->Args({500, 200});
BENCHMARK(BM_Step<Method::pgbgs>)->Name("BM_Step/pgbgs")->Args({500, 100})->Args({500, 200});
BENCHMARK(BM_Solve)
    ->ArgsProduct({{500}, {100}, {static_cast<long>(Method::grcd), static_cast<long>(Method::gbgs),
                                  static_cast<long>(Method::pgbgs)}})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
