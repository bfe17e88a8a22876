#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "iwso/search_space.hpp"

namespace iwso {

enum class StopReason { budget, stall, target };

std::string_view to_string(StopReason reason) noexcept;
/// Throws LookupError for unknown names.
StopReason parse_stop_reason(std::string_view name);

/// One row of the per-iteration trace. Schedule fields (m, alpha, e_match,
/// eliminated) are zero for algorithms that have no such quantity.
struct TraceRecord {
    int iteration = 0;
    double best_fitness = 0.0;
    double mean_fitness = 0.0;
    double m = 0.0;
    double alpha = 0.0;
    double e_match = 0.0;
    int eliminated = 0;

    friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

struct RunResult {
    std::vector<double> best_point;
    double best_fitness = 0.0;
    std::vector<TraceRecord> trace;
    std::chrono::duration<double> runtime{0.0};
    std::uint64_t evaluations = 0;
    std::uint64_t seed = 0;
    StopReason stop_reason = StopReason::budget;
};

/// Population size and iteration count shared by every algorithm.
struct Budget {
    int pop_size = 0;
    int t_max = 0;

    friend bool operator==(const Budget&, const Budget&) = default;
};

/// Common interface for IWSO and the baselines. Implementations are
/// stateless between runs, so one instance may serve concurrent runs.
class Optimizer {
  public:
    virtual ~Optimizer() = default;

    [[nodiscard]] virtual std::string name() const = 0;
    [[nodiscard]] virtual Budget budget() const = 0;

    virtual RunResult run(const WeightedObjective& objective, const SearchSpace& space,
                          std::uint64_t seed) const = 0;
};

} // namespace iwso
