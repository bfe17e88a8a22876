#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "iwso/random.hpp"

namespace iwso {

/// Axis-aligned box [lower, upper] in R^D. Immutable after construction.
class SearchSpace {
  public:
    /// Throws InvalidArgument on length mismatch, empty bounds, non-finite
    /// bounds or lower[j] >= upper[j].
    SearchSpace(std::vector<double> lower, std::vector<double> upper);

    /// Same [lower, upper] interval on every one of `dim` axes.
    static SearchSpace uniform(std::size_t dim, double lower, double upper);

    [[nodiscard]] std::size_t dim() const noexcept { return lower_.size(); }
    [[nodiscard]] std::span<const double> lower() const noexcept { return lower_; }
    [[nodiscard]] std::span<const double> upper() const noexcept { return upper_; }

    [[nodiscard]] bool contains(std::span<const double> point) const;

  private:
    std::vector<double> lower_;
    std::vector<double> upper_;
};

/// A position together with its cached objective value.
struct Candidate {
    std::vector<double> position;
    double fitness = 0.0;
};

/// One objective component. Deterministic functions ignore the draw source;
/// noisy ones consume it so whole runs stay seed-reproducible.
using ObjectiveFn = std::function<double(std::span<const double>, DrawSource&)>;

/// F(x) = sum_k w_k f_k(x), with w_k >= 0 and sum_k w_k == 1 (abs tol 1e-12).
class WeightedObjective {
  public:
    /// `dim` is the required input dimension, 0 when any dimension is accepted.
    WeightedObjective(std::vector<ObjectiveFn> components, std::vector<double> weights,
                      std::size_t dim = 0);

    /// Single-objective convenience: K = 1, w = [1].
    static WeightedObjective single(ObjectiveFn fn, std::size_t dim = 0);
    static WeightedObjective single(std::function<double(std::span<const double>)> fn,
                                    std::size_t dim = 0);

    [[nodiscard]] std::size_t size() const noexcept { return components_.size(); }
    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] std::span<const double> weights() const noexcept { return weights_; }
    [[nodiscard]] const ObjectiveFn& component(std::size_t k) const { return components_.at(k); }

  private:
    std::vector<ObjectiveFn> components_;
    std::vector<double> weights_;
    std::size_t dim_;
};

inline constexpr double kWeightSumTolerance = 1e-12;

/// Component-wise projection onto the box.
std::vector<double> clamp(std::span<const double> point, const SearchSpace& space);

/// In-place variant used on hot paths.
void clamp_in_place(std::span<double> point, const SearchSpace& space);

/// Evaluates the weighted sum. Throws EvaluationError carrying k when f_k is
/// non-finite, InvalidArgument on dimension mismatch.
double weighted_fitness(const WeightedObjective& objective, std::span<const double> point,
                        DrawSource& draws);

/// LB + u * (UB - LB), u ~ U[0,1) independently per dimension.
std::vector<double> sample_uniform_point(const SearchSpace& space, DrawSource& draws);

} // namespace iwso
