#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "iwso/benchmarks.hpp"
#include "iwso/iwso.hpp"
#include "iwso/optimizer.hpp"

namespace iwso {

struct RunRecord {
    std::uint64_t seed = 0;
    double best_fitness = 0.0;
    std::chrono::duration<double> runtime{0.0};
    std::uint64_t evaluations = 0;
    StopReason stop_reason = StopReason::budget;
};

/// Cross-replicate aggregate. `std` is the sample standard deviation
/// (divisor n - 1, zero for a single run).
struct StatsSummary {
    std::string algorithm;
    std::string function;
    int n_runs = 0;
    double mean = 0.0;
    double std = 0.0;
    double best = 0.0;
    std::chrono::duration<double> mean_runtime{0.0};
    std::vector<RunRecord> per_run;
    /// Full per-run results (traces included); filled only with keep_runs.
    std::vector<RunResult> runs;
};

/// Computes mean/std/best/mean runtime from per-run rows. Throws on empty input.
StatsSummary summarize(std::string algorithm, std::string function, std::vector<RunRecord> per_run);

struct HarnessOptions {
    /// Worker threads; 0 uses the hardware concurrency.
    unsigned threads = 1;
    /// Retain every RunResult (with traces) in StatsSummary::runs.
    bool keep_runs = false;
};

/// Runs seeds base_seed .. base_seed + n_runs - 1. Results do not depend on
/// the thread count. Any failing run aborts the whole summary.
StatsSummary run_replicates(const Optimizer& optimizer, const WeightedObjective& objective,
                            const SearchSpace& space, std::string function_label, int n_runs,
                            std::uint64_t base_seed, const HarnessOptions& options = {});

/// Benchmark-registry convenience (default dimension).
StatsSummary run_replicates(const Optimizer& optimizer, bench::FunctionId function, int n_runs,
                            std::uint64_t base_seed, const HarnessOptions& options = {});

/// One summary per optimizer, all on matched seeds. Requires identical budgets
/// and distinct names (InvalidArgument otherwise).
std::vector<StatsSummary> compare(std::span<const Optimizer* const> optimizers,
                                  bench::FunctionId function, int n_runs, std::uint64_t base_seed,
                                  const HarnessOptions& options = {});

struct SweepReport {
    std::string swept_parameter;
    std::vector<std::string> grid;
    std::vector<bench::FunctionId> functions;
    /// cells[f][g]: function f at grid entry g.
    std::vector<std::vector<StatsSummary>> cells;

    [[nodiscard]] std::size_t cell_count() const;
};

inline constexpr std::array<int, 4> kTmaxGrid{125, 250, 375, 500};

struct MatchmakerCase {
    const char* name;
    double m_max;
    double m_min;
};

/// Matchmaker sensitivity cases C1..C4.
inline constexpr std::array<MatchmakerCase, 4> kMatchmakerCases{{
    {"C1", 1.2, 0.3},
    {"C2", 1.4, 0.2},
    {"C3", 1.8, 0.05},
    {"C4", 2.0, 1.0},
}};

/// IWSO at each T_max in `grid`, other parameters from `base`.
SweepReport sensitivity_sweep_tmax(std::span<const bench::FunctionId> functions,
                                   std::span<const int> grid, int n_runs, std::uint64_t base_seed,
                                   const IwsoParams& base = {}, const HarnessOptions& options = {});

/// IWSO at each (M_max, M_min) case, other parameters from `base`.
SweepReport sensitivity_sweep_matchmaker(std::span<const bench::FunctionId> functions,
                                         std::span<const MatchmakerCase> cases, int n_runs,
                                         std::uint64_t base_seed, const IwsoParams& base = {},
                                         const HarnessOptions& options = {});

} // namespace iwso
