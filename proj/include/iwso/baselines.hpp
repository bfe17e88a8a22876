#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "iwso/optimizer.hpp"

namespace iwso {

enum class BaselineKind { ga, pso, de };

std::string_view to_string(BaselineKind kind) noexcept;
/// Accepts "ga", "pso", "de" (case-insensitive). Throws LookupError.
BaselineKind parse_baseline_kind(std::string_view name);

/// Knobs for the three reference algorithms. Defaults follow the standard
/// comparison setup: population 30, 50 generations; GA crossover 0.8 and
/// mutation 0.1; PSO w = 0.5, c1 = c2 = 1.5, |v| <= 2; DE F = 0.5, CR = 0.9.
struct BaselineParams {
    BaselineKind algorithm = BaselineKind::de;
    int pop_size = 30;
    int t_max = 50;

    double crossover_rate = 0.8;
    double mutation_rate = 0.1;
    /// Gaussian mutation sigma as a fraction of each axis' range.
    double mutation_scale = 0.1;
    int tournament_size = 2;

    double w = 0.5;
    double c1 = 1.5;
    double c2 = 1.5;
    double velocity_max = 2.0;

    double f = 0.5;
    double cr = 0.9;

    static BaselineParams defaults(BaselineKind kind);

    /// Throws InvalidArgument.
    void validate() const;
};

/// Runs the configured algorithm for t_max generations. The trace's best
/// series is the running best, so it never increases.
RunResult run_baseline(const BaselineParams& params, const WeightedObjective& objective,
                       const SearchSpace& space, std::uint64_t seed);

class BaselineOptimizer final : public Optimizer {
  public:
    explicit BaselineOptimizer(BaselineParams params);

    [[nodiscard]] std::string name() const override;
    [[nodiscard]] const BaselineParams& params() const noexcept { return params_; }

    [[nodiscard]] Budget budget() const override { return {params_.pop_size, params_.t_max}; }

    RunResult run(const WeightedObjective& objective, const SearchSpace& space,
                  std::uint64_t seed) const override;

  private:
    BaselineParams params_;
};

} // namespace iwso
