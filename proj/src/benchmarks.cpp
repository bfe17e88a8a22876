#include "iwso/benchmarks.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "iwso/error.hpp"

namespace iwso::bench {

namespace {

using std::numbers::e;
using std::numbers::pi;

double ackley(std::span<const double> x) {
    const double d = static_cast<double>(x.size());
    double sq = 0.0;
    double cs = 0.0;
    for (double v : x) {
        sq += v * v;
        cs += std::cos(2.0 * pi * v);
    }
    return -20.0 * std::exp(-0.2 * std::sqrt(sq / d)) - std::exp(cs / d) + 20.0 + e;
}

// Ackley N.2.
double ackley_2(std::span<const double> x) {
    return -200.0 * std::exp(-0.02 * std::sqrt(x[0] * x[0] + x[1] * x[1]));
}

double booth(std::span<const double> x) {
    const double a = x[0] + 2.0 * x[1] - 7.0;
    const double b = 2.0 * x[0] + x[1] - 5.0;
    return a * a + b * b;
}

// Cosine mixture, minimization form: sum x^2 - 0.1 sum cos(5 pi x).
double cosine_mixture(std::span<const double> x) {
    double acc = 0.0;
    for (double v : x) {
        acc += v * v - 0.1 * std::cos(5.0 * pi * v);
    }
    return acc;
}

double dixon_price(std::span<const double> x) {
    double acc = (x[0] - 1.0) * (x[0] - 1.0);
    for (std::size_t i = 1; i < x.size(); ++i) {
        const double t = 2.0 * x[i] * x[i] - x[i - 1];
        acc += static_cast<double>(i + 1) * t * t;
    }
    return acc;
}

// Shekel's foxholes (De Jong F5).
double foxholes(std::span<const double> x) {
    static constexpr std::array<double, 5> grid{-32.0, -16.0, 0.0, 16.0, 32.0};
    double acc = 1.0 / 500.0;
    for (int j = 0; j < 25; ++j) {
        const double a1 = grid[static_cast<std::size_t>(j % 5)];
        const double a2 = grid[static_cast<std::size_t>(j / 5)];
        acc += 1.0 / (static_cast<double>(j + 1) + std::pow(x[0] - a1, 6) + std::pow(x[1] - a2, 6));
    }
    return 1.0 / acc;
}

double griewank(std::span<const double> x) {
    double sum = 0.0;
    double prod = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sum += x[i] * x[i];
        prod *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
    }
    return 1.0 + sum / 4000.0 - prod;
}

double levy(std::span<const double> x) {
    const std::size_t d = x.size();
    auto w = [&](std::size_t i) { return 1.0 + (x[i] - 1.0) / 4.0; };
    const double s0 = std::sin(pi * w(0));
    double acc = s0 * s0;
    for (std::size_t i = 0; i + 1 < d; ++i) {
        const double wi = w(i);
        const double s = std::sin(pi * wi + 1.0);
        acc += (wi - 1.0) * (wi - 1.0) * (1.0 + 10.0 * s * s);
    }
    const double wd = w(d - 1);
    const double sd = std::sin(2.0 * pi * wd);
    return acc + (wd - 1.0) * (wd - 1.0) * (1.0 + sd * sd);
}

// Steepness m = 10.
double michalewicz(std::span<const double> x) {
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double inner = std::sin(static_cast<double>(i + 1) * x[i] * x[i] / pi);
        acc -= std::sin(x[i]) * std::pow(inner, 20);
    }
    return acc;
}

// sum x^2 - 10 sum cos(2 pi x); minimum -10 D at the origin.
double multimodal_sphere(std::span<const double> x) {
    double acc = 0.0;
    for (double v : x) {
        acc += v * v - 10.0 * std::cos(2.0 * pi * v);
    }
    return acc;
}

double quartic(std::span<const double> x) {
    double acc = 0.0;
    for (double v : x) {
        const double sq = v * v;
        acc += sq * sq;
    }
    return acc;
}

double sphere(std::span<const double> x) {
    double acc = 0.0;
    for (double v : x) {
        acc += v * v;
    }
    return acc;
}

double powell_sum(std::span<const double> x) {
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        acc += std::pow(std::abs(x[i]), static_cast<double>(i + 2));
    }
    return acc;
}

double rastrigin(std::span<const double> x) {
    double acc = 10.0 * static_cast<double>(x.size());
    for (double v : x) {
        acc += v * v - 10.0 * std::cos(2.0 * pi * v);
    }
    return acc;
}

double rosenbrock(std::span<const double> x) {
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double a = x[i + 1] - x[i] * x[i];
        const double b = x[i] - 1.0;
        acc += 100.0 * a * a + b * b;
    }
    return acc;
}

double salomon(std::span<const double> x) {
    const double r = std::sqrt(sphere(x));
    return 1.0 - std::cos(2.0 * pi * r) + 0.1 * r;
}

double schwefel(std::span<const double> x) {
    double acc = 418.9829 * static_cast<double>(x.size());
    for (double v : x) {
        acc -= v * std::sin(std::sqrt(std::abs(v)));
    }
    return acc;
}

// -sum sin(x); minimum -D at x = pi/2.
double sine_wave(std::span<const double> x) {
    double acc = 0.0;
    for (double v : x) {
        acc -= std::sin(v);
    }
    return acc;
}

double three_hump_camel(std::span<const double> x) {
    const double a = x[0];
    const double b = x[1];
    const double a2 = a * a;
    return 2.0 * a2 - 1.05 * a2 * a2 + a2 * a2 * a2 / 6.0 + a * b + b * b;
}

double xin_she_yang_4(std::span<const double> x) {
    double sin_sq = 0.0;
    double sq = 0.0;
    double sin_sqrt = 0.0;
    for (double v : x) {
        const double s = std::sin(v);
        sin_sq += s * s;
        sq += v * v;
        const double t = std::sin(std::sqrt(std::abs(v)));
        sin_sqrt += t * t;
    }
    return (sin_sq - std::exp(-sq)) * std::exp(-sin_sqrt);
}

double zakharov(std::span<const double> x) {
    double sq = 0.0;
    double lin = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sq += x[i] * x[i];
        lin += 0.5 * static_cast<double>(i + 1) * x[i];
    }
    const double lin2 = lin * lin;
    return sq + lin2 + lin2 * lin2;
}

constexpr auto M = Modality::multimodal;
constexpr auto U = Modality::unimodal;
constexpr auto S = Separability::separable;
constexpr auto N = Separability::nonseparable;

std::vector<double> filled(std::size_t dim, double value) { return std::vector<double>(dim, value); }

std::vector<double> dixon_price_minimizer(std::size_t dim) {
    std::vector<double> x(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const double p = std::exp2(static_cast<double>(i + 1));
        x[i] = std::exp2(-(p - 2.0) / p);
    }
    return x;
}

constexpr double kFoxholesMin = 0.998003837794450258;
constexpr double kSchwefelArgmin = 420.968746359982027;
constexpr double kSchwefelPerDim = 418.982887272433706;

std::vector<FunctionSpec> build_registry() {
    std::vector<FunctionSpec> r;
    r.reserve(kFunctionCount);
    auto add = [&](FunctionId id, std::string name, Modality mod, Separability sep,
                   std::size_t dim, double lo, double hi, std::optional<KnownOptimum> opt = {}) {
        r.push_back(FunctionSpec{id, std::move(name), mod, sep, dim, lo, hi, false, false, false,
                                 std::move(opt)});
        return &r.back();
    };
    using F = FunctionId;
    add(F::f1, "ackley", M, N, 30, -32.768, 32.768, KnownOptimum{filled(30, 0.0), 0.0});
    auto* f2 = add(F::f2, "ackley_2", M, N, 2, -32.768, 32.768, KnownOptimum{filled(2, 0.0), -200.0});
    f2->fixed_dim = true;
    f2->ambiguous = true;
    add(F::f3, "booth", U, N, 2, -10.0, 10.0, KnownOptimum{{1.0, 3.0}, 0.0})->fixed_dim = true;
    add(F::f4, "cosine matrix", M, N, 30, -10.0, 10.0, KnownOptimum{filled(30, 0.0), -3.0})
        ->ambiguous = true;
    add(F::f5, "dixon-price", U, N, 30, -10.0, 10.0, KnownOptimum{dixon_price_minimizer(30), 0.0});
    add(F::f6, "foxholes", M, N, 2, -65.536, 65.536,
        KnownOptimum{{-31.978334835656970, -31.978334837300795}, kFoxholesMin})
        ->fixed_dim = true;
    add(F::f7, "griewank", M, N, 30, -600.0, 600.0, KnownOptimum{filled(30, 0.0), 0.0});
    add(F::f8, "levy function", M, N, 30, -10.0, 10.0, KnownOptimum{filled(30, 1.0), 0.0});
    add(F::f9, "michalewicz", M, N, 10, 0.0, pi);
    add(F::f10, "multimodal sphere", M, S, 30, -10.0, 10.0, KnownOptimum{filled(30, 0.0), -300.0})
        ->ambiguous = true;
    auto* f11 = add(F::f11, "noisy quadratic", U, S, 30, -10.0, 10.0);
    f11->noisy = true;
    f11->ambiguous = true;
    auto* f12 = add(F::f12, "noisy sphere", U, S, 30, -10.0, 10.0);
    f12->noisy = true;
    f12->ambiguous = true;
    add(F::f13, "powell sum", U, S, 30, -1.0, 1.0, KnownOptimum{filled(30, 0.0), 0.0});
    add(F::f14, "rastrigin", M, S, 30, -5.12, 5.12, KnownOptimum{filled(30, 0.0), 0.0});
    add(F::f15, "rastrigin_2", M, S, 30, -5.12, 5.12, KnownOptimum{filled(30, 0.0), 0.0})
        ->ambiguous = true;
    add(F::f16, "rosenbrock", U, N, 30, -5.0, 10.0, KnownOptimum{filled(30, 1.0), 0.0});
    add(F::f17, "salomon", M, S, 30, -100.0, 100.0, KnownOptimum{filled(30, 0.0), 0.0});
    add(F::f18, "schwefel", M, S, 30, -500.0, 500.0,
        KnownOptimum{filled(30, kSchwefelArgmin), 30.0 * (418.9829 - kSchwefelPerDim)});
    add(F::f19, "sine wave", M, S, 30, -pi, pi, KnownOptimum{filled(30, pi / 2.0), -30.0})
        ->ambiguous = true;
    add(F::f20, "sphere function", U, S, 30, -5.12, 5.12, KnownOptimum{filled(30, 0.0), 0.0});
    add(F::f21, "three hump camel", U, N, 2, -5.0, 5.0, KnownOptimum{filled(2, 0.0), 0.0})
        ->fixed_dim = true;
    add(F::f22, "xin-she yang 4", M, N, 30, -10.0, 10.0, KnownOptimum{filled(30, 0.0), -1.0});
    add(F::f23, "zakharov", U, N, 30, -5.0, 10.0, KnownOptimum{filled(30, 0.0), 0.0});
    return r;
}

const std::vector<FunctionSpec>& registry() {
    static const std::vector<FunctionSpec> instance = build_registry();
    return instance;
}

constexpr std::array<FunctionId, kFunctionCount> kAllIds = [] {
    std::array<FunctionId, kFunctionCount> ids{};
    for (std::size_t i = 0; i < kFunctionCount; ++i) {
        ids[i] = static_cast<FunctionId>(i + 1);
    }
    return ids;
}();

std::size_t index_of(FunctionId id) {
    const auto raw = static_cast<int>(id);
    if (raw < 1 || raw > static_cast<int>(kFunctionCount)) {
        throw LookupError("unknown benchmark function id " + std::to_string(raw));
    }
    return static_cast<std::size_t>(raw - 1);
}

double evaluate_plain(FunctionId id, std::span<const double> x) {
    switch (id) {
    case FunctionId::f1: return ackley(x);
    case FunctionId::f2: return ackley_2(x);
    case FunctionId::f3: return booth(x);
    case FunctionId::f4: return cosine_mixture(x);
    case FunctionId::f5: return dixon_price(x);
    case FunctionId::f6: return foxholes(x);
    case FunctionId::f7: return griewank(x);
    case FunctionId::f8: return levy(x);
    case FunctionId::f9: return michalewicz(x);
    case FunctionId::f10: return multimodal_sphere(x);
    case FunctionId::f11: return quartic(x);
    case FunctionId::f12: return sphere(x);
    case FunctionId::f13: return powell_sum(x);
    case FunctionId::f14:
    case FunctionId::f15: return rastrigin(x);
    case FunctionId::f16: return rosenbrock(x);
    case FunctionId::f17: return salomon(x);
    case FunctionId::f18: return schwefel(x);
    case FunctionId::f19: return sine_wave(x);
    case FunctionId::f20: return sphere(x);
    case FunctionId::f21: return three_hump_camel(x);
    case FunctionId::f22: return xin_she_yang_4(x);
    case FunctionId::f23: return zakharov(x);
    }
    throw LookupError("unknown benchmark function id");
}

void check_point(const FunctionSpec& spec, std::span<const double> point) {
    if (point.empty()) {
        throw InvalidArgument(spec.name + ": point must have at least one component");
    }
    if (spec.fixed_dim && point.size() != spec.default_dim) {
        throw InvalidArgument(spec.name + " is defined only for dimension " +
                              std::to_string(spec.default_dim) + ", got " +
                              std::to_string(point.size()));
    }
}

} // namespace

std::span<const FunctionId> all_functions() { return kAllIds; }

std::vector<FunctionId> unambiguous_functions() {
    std::vector<FunctionId> out;
    for (const FunctionSpec& spec : registry()) {
        if (!spec.ambiguous) {
            out.push_back(spec.id);
        }
    }
    return out;
}

const FunctionSpec& function_spec(FunctionId id) { return registry()[index_of(id)]; }

FunctionId parse_function_id(std::string_view text) {
    if (text.size() >= 2 && (text[0] == 'f' || text[0] == 'F')) {
        int value = 0;
        bool digits = true;
        for (char c : text.substr(1)) {
            if (c < '0' || c > '9') {
                digits = false;
                break;
            }
            value = value * 10 + (c - '0');
            if (value > 1000) {
                break;
            }
        }
        if (digits && value >= 1 && value <= static_cast<int>(kFunctionCount)) {
            return static_cast<FunctionId>(value);
        }
    }
    for (const FunctionSpec& spec : registry()) {
        if (spec.name == text) {
            return spec.id;
        }
    }
    throw LookupError("unknown benchmark function '" + std::string(text) + "'");
}

std::string to_string(FunctionId id) { return "f" + std::to_string(index_of(id) + 1); }

double evaluate(FunctionId id, std::span<const double> point) {
    const FunctionSpec& spec = function_spec(id);
    if (spec.noisy) {
        throw InvalidArgument(spec.name + " is noisy and needs a draw source");
    }
    check_point(spec, point);
    return evaluate_plain(id, point);
}

double evaluate(FunctionId id, std::span<const double> point, DrawSource& draws) {
    const FunctionSpec& spec = function_spec(id);
    check_point(spec, point);
    const double value = evaluate_plain(id, point);
    return spec.noisy ? value + draws.uniform01() : value;
}

SearchSpace search_space(FunctionId id, std::size_t dim) {
    const FunctionSpec& spec = function_spec(id);
    if (dim == 0) {
        dim = spec.default_dim;
    }
    if (spec.fixed_dim && dim != spec.default_dim) {
        throw InvalidArgument(spec.name + " is defined only for dimension " +
                              std::to_string(spec.default_dim));
    }
    return SearchSpace::uniform(dim, spec.lower, spec.upper);
}

WeightedObjective objective(FunctionId id, std::size_t dim) {
    const FunctionSpec& spec = function_spec(id);
    if (dim == 0) {
        dim = spec.default_dim;
    }
    if (spec.fixed_dim && dim != spec.default_dim) {
        throw InvalidArgument(spec.name + " is defined only for dimension " +
                              std::to_string(spec.default_dim));
    }
    return WeightedObjective::single(
        ObjectiveFn([id](std::span<const double> x, DrawSource& draws) {
            return evaluate(id, x, draws);
        }),
        dim);
}

} // namespace iwso::bench
