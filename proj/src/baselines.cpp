#include "iwso/baselines.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <string>
#include <vector>

#include "iwso/error.hpp"
#include "iwso/random.hpp"

namespace iwso {

namespace {

struct Member {
    std::vector<double> x;
    double fitness = 0.0;
};

/// Shared bookkeeping: evaluation counting, running best and trace rows.
class RunRecorder {
  public:
    RunRecorder(const WeightedObjective& objective, RandomSource& rng, int t_max)
        : objective_(objective), rng_(rng) {
        trace_.reserve(static_cast<std::size_t>(t_max));
    }

    double evaluate(std::span<const double> x) {
        ++evaluations_;
        const double value = weighted_fitness(objective_, x, rng_);
        if (best_.empty() || value < best_fitness_) {
            best_.assign(x.begin(), x.end());
            best_fitness_ = value;
        }
        return value;
    }

    void record(int iteration, const std::vector<Member>& population) {
        double sum = 0.0;
        for (const Member& m : population) {
            sum += m.fitness;
        }
        trace_.push_back(TraceRecord{iteration, best_fitness_,
                                     sum / static_cast<double>(population.size()), 0.0, 0.0,
                                     0.0, 0});
    }

    RunResult finish(std::uint64_t seed, std::chrono::steady_clock::time_point started) {
        RunResult out;
        out.best_point = std::move(best_);
        out.best_fitness = best_fitness_;
        out.trace = std::move(trace_);
        out.evaluations = evaluations_;
        out.seed = seed;
        out.stop_reason = StopReason::budget;
        out.runtime = std::chrono::steady_clock::now() - started;
        return out;
    }

  private:
    const WeightedObjective& objective_;
    RandomSource& rng_;
    std::vector<double> best_;
    double best_fitness_ = 0.0;
    std::vector<TraceRecord> trace_;
    std::uint64_t evaluations_ = 0;
};

std::vector<Member> initial_population(const BaselineParams& params, const SearchSpace& space,
                                       RandomSource& rng, RunRecorder& recorder) {
    std::vector<Member> pop(static_cast<std::size_t>(params.pop_size));
    for (Member& m : pop) {
        m.x = sample_uniform_point(space, rng);
        m.fitness = recorder.evaluate(m.x);
    }
    return pop;
}

std::size_t tournament(const std::vector<Member>& pop, int size, RandomSource& rng) {
    std::size_t winner = rng.index(pop.size());
    for (int k = 1; k < size; ++k) {
        const std::size_t other = rng.index(pop.size());
        if (pop[other].fitness < pop[winner].fitness) {
            winner = other;
        }
    }
    return winner;
}

// Tournament selection, uniform crossover, Gaussian mutation, one elite.
void run_ga(const BaselineParams& p, const SearchSpace& space, RandomSource& rng,
            RunRecorder& recorder) {
    const std::size_t dim = space.dim();
    std::vector<double> sigma(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        sigma[j] = p.mutation_scale * (space.upper()[j] - space.lower()[j]);
    }

    std::vector<Member> pop = initial_population(p, space, rng, recorder);
    std::vector<Member> next;
    next.reserve(pop.size());
    for (int gen = 1; gen <= p.t_max; ++gen) {
        next.clear();
        next.push_back(*std::min_element(pop.begin(), pop.end(), [](const Member& a, const Member& b) {
            return a.fitness < b.fitness;
        }));
        while (next.size() < pop.size()) {
            const Member& a = pop[tournament(pop, p.tournament_size, rng)];
            const Member& b = pop[tournament(pop, p.tournament_size, rng)];
            Member child{a.x, 0.0};
            if (rng.uniform01() < p.crossover_rate) {
                for (std::size_t j = 0; j < dim; ++j) {
                    if (rng.uniform01() < 0.5) {
                        child.x[j] = b.x[j];
                    }
                }
            }
            for (std::size_t j = 0; j < dim; ++j) {
                if (rng.uniform01() < p.mutation_rate) {
                    child.x[j] += sigma[j] * rng.normal();
                }
            }
            clamp_in_place(child.x, space);
            child.fitness = recorder.evaluate(child.x);
            next.push_back(std::move(child));
        }
        pop.swap(next);
        recorder.record(gen, pop);
    }
}

// Global-best topology, zero initial velocity, velocity clamp.
void run_pso(const BaselineParams& p, const SearchSpace& space, RandomSource& rng,
             RunRecorder& recorder) {
    const std::size_t dim = space.dim();
    std::vector<Member> pop = initial_population(p, space, rng, recorder);
    std::vector<Member> personal = pop;
    std::vector<std::vector<double>> velocity(pop.size(), std::vector<double>(dim, 0.0));
    std::size_t leader = 0;
    for (std::size_t i = 1; i < personal.size(); ++i) {
        if (personal[i].fitness < personal[leader].fitness) {
            leader = i;
        }
    }
    Member global = personal[leader];

    for (int gen = 1; gen <= p.t_max; ++gen) {
        for (std::size_t i = 0; i < pop.size(); ++i) {
            Member& m = pop[i];
            for (std::size_t j = 0; j < dim; ++j) {
                const double r1 = rng.uniform01();
                const double r2 = rng.uniform01();
                double v = p.w * velocity[i][j] + p.c1 * r1 * (personal[i].x[j] - m.x[j]) +
                           p.c2 * r2 * (global.x[j] - m.x[j]);
                v = std::clamp(v, -p.velocity_max, p.velocity_max);
                velocity[i][j] = v;
                m.x[j] += v;
            }
            clamp_in_place(m.x, space);
            m.fitness = recorder.evaluate(m.x);
            if (m.fitness < personal[i].fitness) {
                personal[i] = m;
            }
        }
        for (const Member& best : personal) {
            if (best.fitness < global.fitness) {
                global = best;
            }
        }
        recorder.record(gen, pop);
    }
}

// rand/1/bin with generational replacement.
void run_de(const BaselineParams& p, const SearchSpace& space, RandomSource& rng,
            RunRecorder& recorder) {
    const std::size_t dim = space.dim();
    const std::size_t n = static_cast<std::size_t>(p.pop_size);
    std::vector<Member> pop = initial_population(p, space, rng, recorder);
    std::vector<Member> next(n);

    for (int gen = 1; gen <= p.t_max; ++gen) {
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t r1, r2, r3;
            do { r1 = rng.index(n); } while (r1 == i);
            do { r2 = rng.index(n); } while (r2 == i || r2 == r1);
            do { r3 = rng.index(n); } while (r3 == i || r3 == r1 || r3 == r2);
            const std::size_t forced = rng.index(dim);

            Member trial{pop[i].x, 0.0};
            for (std::size_t j = 0; j < dim; ++j) {
                if (j == forced || rng.uniform01() < p.cr) {
                    trial.x[j] = pop[r1].x[j] + p.f * (pop[r2].x[j] - pop[r3].x[j]);
                }
            }
            clamp_in_place(trial.x, space);
            trial.fitness = recorder.evaluate(trial.x);
            next[i] = trial.fitness <= pop[i].fitness ? std::move(trial) : pop[i];
        }
        pop.swap(next);
        recorder.record(gen, pop);
    }
}

} // namespace

std::string_view to_string(BaselineKind kind) noexcept {
    switch (kind) {
    case BaselineKind::ga:
        return "ga";
    case BaselineKind::pso:
        return "pso";
    case BaselineKind::de:
        return "de";
    }
    return "de";
}

BaselineKind parse_baseline_kind(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "ga") {
        return BaselineKind::ga;
    }
    if (lower == "pso") {
        return BaselineKind::pso;
    }
    if (lower == "de") {
        return BaselineKind::de;
    }
    throw LookupError("unknown baseline algorithm '" + std::string(name) + "'");
}

BaselineParams BaselineParams::defaults(BaselineKind kind) {
    BaselineParams p;
    p.algorithm = kind;
    return p;
}

void BaselineParams::validate() const {
    auto unit = [](double v) { return v >= 0.0 && v <= 1.0; };
    auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
    if (pop_size < 2) {
        throw InvalidArgument("pop_size must be at least 2");
    }
    if (algorithm == BaselineKind::de && pop_size < 4) {
        throw InvalidArgument("DE rand/1 needs pop_size >= 4");
    }
    if (t_max < 1) {
        throw InvalidArgument("t_max must be positive");
    }
    if (!unit(crossover_rate) || !unit(mutation_rate) || !unit(cr)) {
        throw InvalidArgument("rates and probabilities must lie in [0, 1]");
    }
    if (!positive(mutation_scale)) {
        throw InvalidArgument("mutation_scale must be positive");
    }
    if (tournament_size < 1) {
        throw InvalidArgument("tournament_size must be positive");
    }
    if (!positive(w) || !positive(c1) || !positive(c2) || !positive(f)) {
        throw InvalidArgument("w, c1, c2 and f must be positive");
    }
    if (!positive(velocity_max)) {
        throw InvalidArgument("velocity_max must be positive");
    }
}

RunResult run_baseline(const BaselineParams& params, const WeightedObjective& objective,
                       const SearchSpace& space, std::uint64_t seed) {
    params.validate();
    if (objective.dim() != 0 && objective.dim() != space.dim()) {
        throw InvalidArgument("run_baseline: objective and search space dimensions differ");
    }
    const auto started = std::chrono::steady_clock::now();
    RandomSource rng(seed);
    RunRecorder recorder(objective, rng, params.t_max);
    switch (params.algorithm) {
    case BaselineKind::ga:
        run_ga(params, space, rng, recorder);
        break;
    case BaselineKind::pso:
        run_pso(params, space, rng, recorder);
        break;
    case BaselineKind::de:
        run_de(params, space, rng, recorder);
        break;
    }
    return recorder.finish(seed, started);
}

BaselineOptimizer::BaselineOptimizer(BaselineParams params) : params_(params) {
    params_.validate();
}

std::string BaselineOptimizer::name() const { return std::string(to_string(params_.algorithm)); }

RunResult BaselineOptimizer::run(const WeightedObjective& objective, const SearchSpace& space,
                                 std::uint64_t seed) const {
    return run_baseline(params_, objective, space, seed);
}

} // namespace iwso
