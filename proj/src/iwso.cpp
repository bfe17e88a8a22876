#include "iwso/iwso.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <string>

#include "iwso/error.hpp"

namespace iwso {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void check_iteration(int t, const IwsoParams& params, const char* who) {
    if (t < 0 || t > params.t_max) {
        throw InvalidArgument(std::string(who) + ": iteration " + std::to_string(t) +
                              " outside [0, " + std::to_string(params.t_max) + "]");
    }
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
    double acc = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        const double d = a[j] - b[j];
        acc += d * d;
    }
    return acc;
}

} // namespace

void IwsoParams::validate() const {
    if (pop_size < 2) {
        throw InvalidArgument("pop_size must be at least 2");
    }
    if (t_max < 1) {
        throw InvalidArgument("t_max must be positive");
    }
    if (!std::isfinite(m_min) || !std::isfinite(m_max) || !(m_min > 0.0) || m_max < m_min) {
        throw InvalidArgument("matchmaker bounds require m_max >= m_min > 0");
    }
    if (!std::isfinite(alpha_min) || !std::isfinite(alpha_max) || !(alpha_min > 0.0) ||
        alpha_max < alpha_min) {
        throw InvalidArgument("elimination bounds require alpha_max >= alpha_min > 0");
    }
    if (!std::isfinite(beta) || beta < 0.0) {
        throw InvalidArgument("beta must be finite and nonnegative");
    }
    if (!std::isfinite(gamma) || gamma < 0.0) {
        throw InvalidArgument("gamma must be finite and nonnegative");
    }
    if (stall_limit && *stall_limit < 1) {
        throw InvalidArgument("stall_limit must be positive when set");
    }
    if (target_fitness && std::isnan(*target_fitness)) {
        throw InvalidArgument("target_fitness must not be NaN");
    }
    if (fixed_r1 && !(*fixed_r1 >= 0.0 && *fixed_r1 <= 1.0)) {
        throw InvalidArgument("fixed_r1 must lie in [0, 1]");
    }
}

std::vector<std::string> IwsoParams::soft_warnings() const {
    std::vector<std::string> notes;
    if (beta < 0.1 || beta > 0.5) {
        notes.push_back("beta = " + std::to_string(beta) + " is outside the recommended [0.1, 0.5]");
    }
    if (gamma < 0.2 || gamma > 0.8) {
        notes.push_back("gamma = " + std::to_string(gamma) +
                        " is outside the recommended [0.2, 0.8]");
    }
    return notes;
}

double matchmaker_factor(int t, const IwsoParams& params) {
    check_iteration(t, params, "matchmaker_factor");
    if (t == params.t_max) {
        return params.m_min;
    }
    const double frac = static_cast<double>(t) / static_cast<double>(params.t_max);
    return params.m_max - frac * (params.m_max - params.m_min);
}

double elimination_factor(int t, const IwsoParams& params) {
    check_iteration(t, params, "elimination_factor");
    if (t == params.t_max) {
        return params.alpha_max;
    }
    const double frac = static_cast<double>(t) / static_cast<double>(params.t_max);
    return params.alpha_min + frac * (params.alpha_max - params.alpha_min);
}

double expected_match(std::span<const double> fitnesses, double best_fitness) {
    double sum = 0.0;
    for (double f : fitnesses) {
        sum += f;
    }
    if (std::abs(sum) < kZeroSumGuard) {
        return 0.0;
    }
    return best_fitness / sum;
}

Candidate update_candidate(const Candidate& x, const Candidate& best, double m, DrawSource& draws,
                           const SearchSpace& space, std::optional<double> fixed_r1) {
    const std::size_t dim = space.dim();
    if (x.position.size() != dim || best.position.size() != dim) {
        throw InvalidArgument("update_candidate: dimension mismatch");
    }
    const double r1 = fixed_r1 ? *fixed_r1 : draws.uniform01();
    Candidate out{std::vector<double>(dim), kNaN};
    for (std::size_t j = 0; j < dim; ++j) {
        const double eps = draws.uniform_signed();
        out.position[j] = x.position[j] + r1 * (best.position[j] - x.position[j]) + m * eps;
    }
    clamp_in_place(out.position, space);
    return out;
}

Candidate reinitialize_candidate(const Candidate& best, std::span<const double> pop_mean,
                                 const IwsoParams& params, DrawSource& draws,
                                 const SearchSpace& space) {
    const std::size_t dim = space.dim();
    if (best.position.size() != dim || pop_mean.size() != dim) {
        throw InvalidArgument("reinitialize_candidate: dimension mismatch");
    }
    const auto lo = space.lower();
    const auto hi = space.upper();
    Candidate out{std::vector<double>(dim), kNaN};
    for (std::size_t j = 0; j < dim; ++j) {
        const double u = draws.uniform01();
        const double eps = draws.normal();
        out.position[j] = lo[j] + u * (hi[j] - lo[j]) +
                          params.beta * (best.position[j] - pop_mean[j]) + params.gamma * eps;
    }
    clamp_in_place(out.position, space);
    return out;
}

const Candidate& elitist_select(const Candidate& incumbent, const Candidate& challenger) {
    if (std::isnan(incumbent.fitness) || std::isnan(challenger.fitness)) {
        throw EvaluationError("elitist_select: NaN fitness");
    }
    return incumbent.fitness <= challenger.fitness ? incumbent : challenger;
}

OptimizerState initialize_state(const WeightedObjective& objective, const SearchSpace& space,
                                 const IwsoParams& params, DrawSource& draws) {
    params.validate();
    OptimizerState state;
    state.population.reserve(static_cast<std::size_t>(params.pop_size));
    for (int i = 0; i < params.pop_size; ++i) {
        Candidate c{sample_uniform_point(space, draws), 0.0};
        c.fitness = weighted_fitness(objective, c.position, draws);
        state.population.push_back(std::move(c));
    }
    state.evaluations = state.population.size();

    std::size_t best = 0;
    for (std::size_t i = 1; i < state.population.size(); ++i) {
        if (state.population[i].fitness < state.population[best].fitness) {
            best = i;
        }
    }
    state.global_best = state.population[best];
    state.last_m = matchmaker_factor(0, params);
    state.last_alpha = elimination_factor(0, params);
    return state;
}

TraceRecord step(OptimizerState& state, const WeightedObjective& objective,
                 const IwsoParams& params, DrawSource& draws, const SearchSpace& space) {
    if (state.t >= params.t_max) {
        throw InvalidArgument("step: iteration budget already exhausted");
    }
    const std::size_t n = state.population.size();
    const std::size_t dim = space.dim();
    const Candidate& best = state.global_best;

    // Schedules use the 1-based loop index.
    const int t = state.t + 1;
    const double m = matchmaker_factor(t, params);
    const double alpha = elimination_factor(t, params);

    std::vector<Candidate> trial;
    trial.reserve(n);
    for (const Candidate& x : state.population) {
        trial.push_back(update_candidate(x, best, m, draws, space, params.fixed_r1));
    }

    // Cached fitnesses are those of the population before this iteration's moves.
    std::vector<double> cached(n);
    for (std::size_t i = 0; i < n; ++i) {
        cached[i] = state.population[i].fitness;
    }
    const double e_match = expected_match(cached, best.fitness);
    const double threshold = alpha * e_match;

    int eliminated = 0;
    if (threshold > 0.0) {
        std::vector<double> position_sum(dim, 0.0);
        for (const Candidate& c : trial) {
            for (std::size_t j = 0; j < dim; ++j) {
                position_sum[j] += c.position[j];
            }
        }
        std::vector<double> mean(dim);
        const double threshold_sq = threshold * threshold;
        for (Candidate& c : trial) {
            if (!(squared_distance(c.position, best.position) < threshold_sq)) {
                continue;
            }
            for (std::size_t j = 0; j < dim; ++j) {
                mean[j] = position_sum[j] / static_cast<double>(n);
            }
            Candidate fresh = reinitialize_candidate(best, mean, params, draws, space);
            for (std::size_t j = 0; j < dim; ++j) {
                position_sum[j] += fresh.position[j] - c.position[j];
            }
            c = std::move(fresh);
            ++eliminated;
        }
    }

    double fitness_sum = 0.0;
    for (Candidate& c : trial) {
        c.fitness = weighted_fitness(objective, c.position, draws);
        fitness_sum += c.fitness;
    }

    // Nothing below throws for finite fitness values: commit.
    for (std::size_t i = 0; i < n; ++i) {
        if (&elitist_select(state.population[i], trial[i]) == &trial[i]) {
            state.population[i] = std::move(trial[i]);
        }
    }
    for (const Candidate& c : state.population) {
        if (c.fitness < state.global_best.fitness) {
            state.global_best = c;
        }
    }

    state.t = t;
    state.last_m = m;
    state.last_alpha = alpha;
    state.last_e_match = e_match;
    state.eliminated_this_step = eliminated;
    state.evaluations += n;

    return TraceRecord{t,          state.global_best.fitness,
                       fitness_sum / static_cast<double>(n),
                       m,          alpha,
                       e_match,    eliminated};
}

RunResult optimize(const WeightedObjective& objective, const SearchSpace& space,
                   const IwsoParams& params, std::uint64_t seed) {
    params.validate();
    if (objective.dim() != 0 && objective.dim() != space.dim()) {
        throw InvalidArgument("optimize: objective dimension " + std::to_string(objective.dim()) +
                              " does not match search space dimension " +
                              std::to_string(space.dim()));
    }
    const auto started = std::chrono::steady_clock::now();

    RandomSource rng(seed);
    OptimizerState state = initialize_state(objective, space, params, rng);

    RunResult result;
    result.seed = seed;
    result.trace.reserve(static_cast<std::size_t>(params.t_max));

    int stalled = 0;
    while (state.t < params.t_max) {
        const double previous = state.global_best.fitness;
        result.trace.push_back(step(state, objective, params, rng, space));

        if (params.target_fitness && state.global_best.fitness <= *params.target_fitness) {
            result.stop_reason = StopReason::target;
            break;
        }
        if (params.stall_limit) {
            stalled = (previous - state.global_best.fitness > kImprovementEpsilon) ? 0 : stalled + 1;
            if (stalled >= *params.stall_limit) {
                result.stop_reason = StopReason::stall;
                break;
            }
        }
    }

    result.best_point = state.global_best.position;
    result.best_fitness = state.global_best.fitness;
    result.evaluations = state.evaluations;
    result.runtime = std::chrono::steady_clock::now() - started;
    return result;
}

IwsoOptimizer::IwsoOptimizer(IwsoParams params) : params_(std::move(params)) {
    params_.validate();
}

RunResult IwsoOptimizer::run(const WeightedObjective& objective, const SearchSpace& space,
                             std::uint64_t seed) const {
    return optimize(objective, space, params_, seed);
}

} // namespace iwso
