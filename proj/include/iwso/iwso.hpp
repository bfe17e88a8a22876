#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "iwso/optimizer.hpp"
#include "iwso/random.hpp"
#include "iwso/search_space.hpp"

namespace iwso {

/// Control parameters. Defaults are the reference configuration:
/// n = 30, T_max = 50, M in [0.05, 1.2], alpha in [0.5, 1.5], beta = 0.3, gamma = 0.5.
struct IwsoParams {
    int pop_size = 30;
    int t_max = 50;
    double m_max = 1.2;
    double m_min = 0.05;
    double alpha_min = 0.5;
    double alpha_max = 1.5;
    double beta = 0.3;
    double gamma = 0.5;
    /// Iterations without improvement (> kImprovementEpsilon) before stopping.
    std::optional<int> stall_limit;
    /// Stop once the best fitness is <= this value.
    std::optional<double> target_fitness;
    /// Fixed attraction coefficient r1; drawn U[0,1) per candidate when unset.
    std::optional<double> fixed_r1;

    /// Throws InvalidArgument on hard violations.
    void validate() const;

    /// Human-readable notes for values outside the recommended beta/gamma ranges.
    [[nodiscard]] std::vector<std::string> soft_warnings() const;
};

inline constexpr double kImprovementEpsilon = 1e-12;
inline constexpr double kZeroSumGuard = 1e-300;

struct OptimizerState {
    std::vector<Candidate> population;
    int t = 0;
    Candidate global_best;
    double last_m = 0.0;
    double last_alpha = 0.0;
    double last_e_match = 0.0;
    int eliminated_this_step = 0;
    std::uint64_t evaluations = 0;
};

/// M(t) = M_max - (t / T_max)(M_max - M_min). Throws for t outside [0, T_max].
double matchmaker_factor(int t, const IwsoParams& params);

/// alpha(t) = alpha_min + (t / T_max)(alpha_max - alpha_min). Same domain.
double elimination_factor(int t, const IwsoParams& params);

/// E_match = F_best / sum_i F(X_i) on signed values; 0 when |sum| < 1e-300.
double expected_match(std::span<const double> fitnesses, double best_fitness);

/// Matchmaker-guided move: clamp(x + r1 (best - x) + m * eps), one scalar r1
/// per call and eps ~ U[-1,1] per dimension. The returned fitness is NaN;
/// the caller evaluates.
Candidate update_candidate(const Candidate& x, const Candidate& best, double m, DrawSource& draws,
                           const SearchSpace& space, std::optional<double> fixed_r1 = std::nullopt);

/// Guided reinitialization:
/// clamp(LB + u (UB - LB) + beta (best - mean) + gamma * eps), u ~ U[0,1), eps ~ N(0,1).
/// Fitness is NaN; the caller evaluates.
Candidate reinitialize_candidate(const Candidate& best, std::span<const double> pop_mean,
                                 const IwsoParams& params, DrawSource& draws,
                                 const SearchSpace& space);

/// Minimization with ties kept by the incumbent. NaN on either side throws.
const Candidate& elitist_select(const Candidate& incumbent, const Candidate& challenger);

/// Samples and evaluates the initial population and picks the first best.
OptimizerState initialize_state(const WeightedObjective& objective, const SearchSpace& space,
                                 const IwsoParams& params, DrawSource& draws);

/// One iteration of the main loop. Returns the trace row it produced.
/// On an evaluation failure the exception propagates and `state` is untouched.
TraceRecord step(OptimizerState& state, const WeightedObjective& objective,
                 const IwsoParams& params, DrawSource& draws, const SearchSpace& space);

/// Full run from a seed.
RunResult optimize(const WeightedObjective& objective, const SearchSpace& space,
                   const IwsoParams& params, std::uint64_t seed);

class IwsoOptimizer final : public Optimizer {
  public:
    explicit IwsoOptimizer(IwsoParams params = {});

    [[nodiscard]] std::string name() const override { return "iwso"; }
    [[nodiscard]] const IwsoParams& params() const noexcept { return params_; }

    [[nodiscard]] Budget budget() const override { return {params_.pop_size, params_.t_max}; }

    RunResult run(const WeightedObjective& objective, const SearchSpace& space,
                  std::uint64_t seed) const override;

  private:
    IwsoParams params_;
};

} // namespace iwso
