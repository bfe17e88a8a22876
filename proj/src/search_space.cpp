#include "iwso/search_space.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "iwso/error.hpp"

namespace iwso {

SearchSpace::SearchSpace(std::vector<double> lower, std::vector<double> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (lower_.empty()) {
        throw InvalidArgument("SearchSpace: dimension must be positive");
    }
    if (lower_.size() != upper_.size()) {
        throw InvalidArgument("SearchSpace: lower has " + std::to_string(lower_.size()) +
                              " entries, upper has " + std::to_string(upper_.size()));
    }
    for (std::size_t j = 0; j < lower_.size(); ++j) {
        if (!std::isfinite(lower_[j]) || !std::isfinite(upper_[j]) || !(lower_[j] < upper_[j])) {
            throw InvalidArgument("SearchSpace: dimension " + std::to_string(j) +
                                  " requires finite lower < upper");
        }
    }
}

SearchSpace SearchSpace::uniform(std::size_t dim, double lower, double upper) {
    return SearchSpace(std::vector<double>(dim, lower), std::vector<double>(dim, upper));
}

bool SearchSpace::contains(std::span<const double> point) const {
    if (point.size() != dim()) {
        return false;
    }
    for (std::size_t j = 0; j < point.size(); ++j) {
        if (!(point[j] >= lower_[j] && point[j] <= upper_[j])) {
            return false;
        }
    }
    return true;
}

WeightedObjective::WeightedObjective(std::vector<ObjectiveFn> components,
                                     std::vector<double> weights, std::size_t dim)
    : components_(std::move(components)), weights_(std::move(weights)), dim_(dim) {
    if (components_.empty()) {
        throw InvalidArgument("WeightedObjective: at least one component is required");
    }
    if (components_.size() != weights_.size()) {
        throw InvalidArgument("WeightedObjective: one weight per component is required");
    }
    for (std::size_t k = 0; k < components_.size(); ++k) {
        if (!components_[k]) {
            throw InvalidArgument("WeightedObjective: component " + std::to_string(k) + " is empty");
        }
        if (!std::isfinite(weights_[k]) || weights_[k] < 0.0) {
            throw InvalidArgument("WeightedObjective: weight " + std::to_string(k) +
                                  " must be finite and nonnegative");
        }
    }
    const double sum = std::accumulate(weights_.begin(), weights_.end(), 0.0);
    if (std::abs(sum - 1.0) > kWeightSumTolerance) {
        throw InvalidArgument("WeightedObjective: weights must sum to 1");
    }
}

WeightedObjective WeightedObjective::single(ObjectiveFn fn, std::size_t dim) {
    return WeightedObjective({std::move(fn)}, {1.0}, dim);
}

WeightedObjective WeightedObjective::single(std::function<double(std::span<const double>)> fn,
                                            std::size_t dim) {
    if (!fn) {
        throw InvalidArgument("WeightedObjective: component 0 is empty");
    }
    return single(ObjectiveFn([f = std::move(fn)](std::span<const double> x, DrawSource&) {
                      return f(x);
                  }),
                  dim);
}

std::vector<double> clamp(std::span<const double> point, const SearchSpace& space) {
    std::vector<double> out(point.begin(), point.end());
    clamp_in_place(out, space);
    return out;
}

void clamp_in_place(std::span<double> point, const SearchSpace& space) {
    if (point.size() != space.dim()) {
        throw InvalidArgument("clamp: point has " + std::to_string(point.size()) +
                              " components, space has " + std::to_string(space.dim()));
    }
    const auto lo = space.lower();
    const auto hi = space.upper();
    for (std::size_t j = 0; j < point.size(); ++j) {
        point[j] = std::min(hi[j], std::max(lo[j], point[j]));
    }
}

double weighted_fitness(const WeightedObjective& objective, std::span<const double> point,
                        DrawSource& draws) {
    if (objective.dim() != 0 && point.size() != objective.dim()) {
        throw InvalidArgument("weighted_fitness: objective expects dimension " +
                              std::to_string(objective.dim()) + ", got " +
                              std::to_string(point.size()));
    }
    const auto weights = objective.weights();
    double total = 0.0;
    for (std::size_t k = 0; k < objective.size(); ++k) {
        const double value = objective.component(k)(point, draws);
        if (!std::isfinite(value)) {
            throw EvaluationError("objective component " + std::to_string(k) +
                                      " returned a non-finite value",
                                  k);
        }
        total += weights[k] * value;
    }
    return total;
}

std::vector<double> sample_uniform_point(const SearchSpace& space, DrawSource& draws) {
    const auto lo = space.lower();
    const auto hi = space.upper();
    std::vector<double> point(space.dim());
    for (std::size_t j = 0; j < point.size(); ++j) {
        point[j] = lo[j] + draws.uniform01() * (hi[j] - lo[j]);
        if (point[j] >= hi[j]) {
            // u close to 1 can round up onto the upper bound
            point[j] = std::nextafter(hi[j], lo[j]);
        }
    }
    return point;
}

} // namespace iwso
