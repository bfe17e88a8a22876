#include "iwso/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

#include "iwso/error.hpp"

namespace iwso {

namespace {

/// Calls task(i) for i in [0, count) on up to `threads` workers. The first
/// exception (lowest index) is rethrown after all workers have joined.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& task) {
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            task(i);
        }
        return;
    }

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::mutex error_mutex;
    std::exception_ptr error;
    std::size_t error_index = count;

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count || failed.load()) {
                return;
            }
            try {
                task(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (i < error_index) {
                    error_index = i;
                    error = std::current_exception();
                }
                failed.store(true);
            }
        }
    };
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back(worker);
    }
    pool.clear();
    if (error) {
        std::rethrow_exception(error);
    }
}

void check_runs(int n_runs) {
    if (n_runs < 1) {
        throw InvalidArgument("n_runs must be at least 1");
    }
}

} // namespace

StatsSummary summarize(std::string algorithm, std::string function, std::vector<RunRecord> per_run) {
    if (per_run.empty()) {
        throw InvalidArgument("summarize: no runs");
    }
    StatsSummary s;
    s.algorithm = std::move(algorithm);
    s.function = std::move(function);
    s.n_runs = static_cast<int>(per_run.size());

    const double n = static_cast<double>(per_run.size());
    double sum = 0.0;
    double runtime = 0.0;
    s.best = per_run.front().best_fitness;
    for (const RunRecord& r : per_run) {
        sum += r.best_fitness;
        runtime += r.runtime.count();
        s.best = std::min(s.best, r.best_fitness);
    }
    s.mean = sum / n;
    if (per_run.size() > 1) {
        double ss = 0.0;
        for (const RunRecord& r : per_run) {
            const double d = r.best_fitness - s.mean;
            ss += d * d;
        }
        s.std = std::sqrt(ss / (n - 1.0));
    }
    s.mean_runtime = std::chrono::duration<double>(runtime / n);
    s.per_run = std::move(per_run);
    return s;
}

StatsSummary run_replicates(const Optimizer& optimizer, const WeightedObjective& objective,
                            const SearchSpace& space, std::string function_label, int n_runs,
                            std::uint64_t base_seed, const HarnessOptions& options) {
    check_runs(n_runs);
    const auto count = static_cast<std::size_t>(n_runs);
    std::vector<RunResult> results(count);
    parallel_for(count, options.threads, [&](std::size_t i) {
        results[i] = optimizer.run(objective, space, base_seed + i);
    });

    std::vector<RunRecord> rows;
    rows.reserve(count);
    for (const RunResult& r : results) {
        rows.push_back(RunRecord{r.seed, r.best_fitness, r.runtime, r.evaluations, r.stop_reason});
    }
    StatsSummary summary = summarize(optimizer.name(), std::move(function_label), std::move(rows));
    if (options.keep_runs) {
        summary.runs = std::move(results);
    }
    return summary;
}

StatsSummary run_replicates(const Optimizer& optimizer, bench::FunctionId function, int n_runs,
                            std::uint64_t base_seed, const HarnessOptions& options) {
    return run_replicates(optimizer, bench::objective(function), bench::search_space(function),
                          bench::to_string(function), n_runs, base_seed, options);
}

std::vector<StatsSummary> compare(std::span<const Optimizer* const> optimizers,
                                  bench::FunctionId function, int n_runs, std::uint64_t base_seed,
                                  const HarnessOptions& options) {
    if (optimizers.empty()) {
        throw InvalidArgument("compare: no algorithms given");
    }
    std::set<std::string> names;
    for (const Optimizer* opt : optimizers) {
        if (opt == nullptr) {
            throw InvalidArgument("compare: null optimizer");
        }
        if (!names.insert(opt->name()).second) {
            throw InvalidArgument("compare: algorithm '" + opt->name() + "' listed twice");
        }
        if (!(opt->budget() == optimizers.front()->budget())) {
            throw InvalidArgument("compare: all algorithms must share the same population and "
                                  "iteration budget");
        }
    }
    check_runs(n_runs);
    std::vector<StatsSummary> out;
    out.reserve(optimizers.size());
    for (const Optimizer* opt : optimizers) {
        out.push_back(run_replicates(*opt, function, n_runs, base_seed, options));
    }
    return out;
}

std::size_t SweepReport::cell_count() const {
    std::size_t total = 0;
    for (const auto& row : cells) {
        total += row.size();
    }
    return total;
}

SweepReport sensitivity_sweep_tmax(std::span<const bench::FunctionId> functions,
                                   std::span<const int> grid, int n_runs, std::uint64_t base_seed,
                                   const IwsoParams& base, const HarnessOptions& options) {
    if (functions.empty() || grid.empty()) {
        throw InvalidArgument("sensitivity_sweep_tmax: empty function set or grid");
    }
    check_runs(n_runs);
    SweepReport report;
    report.swept_parameter = "t_max";
    report.functions.assign(functions.begin(), functions.end());
    std::vector<IwsoOptimizer> optimizers;
    for (int t_max : grid) {
        IwsoParams p = base;
        p.t_max = t_max;
        optimizers.emplace_back(p);
        report.grid.push_back(std::to_string(t_max));
    }
    for (bench::FunctionId f : functions) {
        auto& row = report.cells.emplace_back();
        for (std::size_t g = 0; g < optimizers.size(); ++g) {
            StatsSummary s = run_replicates(optimizers[g], f, n_runs, base_seed, options);
            s.algorithm = "iwso@t_max=" + report.grid[g];
            row.push_back(std::move(s));
        }
    }
    return report;
}

SweepReport sensitivity_sweep_matchmaker(std::span<const bench::FunctionId> functions,
                                         std::span<const MatchmakerCase> cases, int n_runs,
                                         std::uint64_t base_seed, const IwsoParams& base,
                                         const HarnessOptions& options) {
    if (functions.empty() || cases.empty()) {
        throw InvalidArgument("sensitivity_sweep_matchmaker: empty function set or case list");
    }
    check_runs(n_runs);
    SweepReport report;
    report.swept_parameter = "matchmaker";
    report.functions.assign(functions.begin(), functions.end());
    std::vector<IwsoOptimizer> optimizers;
    for (const MatchmakerCase& c : cases) {
        IwsoParams p = base;
        p.m_max = c.m_max;
        p.m_min = c.m_min;
        optimizers.emplace_back(p);
        report.grid.emplace_back(c.name);
    }
    for (bench::FunctionId f : functions) {
        auto& row = report.cells.emplace_back();
        for (std::size_t g = 0; g < optimizers.size(); ++g) {
            StatsSummary s = run_replicates(optimizers[g], f, n_runs, base_seed, options);
            s.algorithm = "iwso@" + report.grid[g];
            row.push_back(std::move(s));
        }
    }
    return report;
}

} // namespace iwso
