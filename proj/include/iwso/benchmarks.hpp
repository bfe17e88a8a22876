#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "iwso/random.hpp"
#include "iwso/search_space.hpp"

namespace iwso::bench {

/// The 23 registry entries, in table order (f1 = ackley ... f23 = zakharov).
enum class FunctionId {
    f1 = 1, f2, f3, f4, f5, f6, f7, f8, f9, f10, f11, f12,
    f13, f14, f15, f16, f17, f18, f19, f20, f21, f22, f23
};

inline constexpr std::size_t kFunctionCount = 23;

enum class Modality { unimodal, multimodal };
enum class Separability { separable, nonseparable };

struct KnownOptimum {
    std::vector<double> point;
    double value = 0.0;
};

struct FunctionSpec {
    FunctionId id;
    std::string name;
    Modality modality;
    Separability separability;
    std::size_t default_dim;
    double lower;
    double upper;
    /// Functions that only accept their default dimension (f2, f3, f6, f21).
    bool fixed_dim = false;
    /// Evaluation consumes the caller's draw source (f11, f12).
    bool noisy = false;
    /// Formula is a reconstruction from the function name alone (f2, f4, f10, f11, f12, f15, f19).
    bool ambiguous = false;
    std::optional<KnownOptimum> known_optimum;
};

/// All ids in registry order.
std::span<const FunctionId> all_functions();

/// Registry entries whose formula is not ambiguous (16 entries).
std::vector<FunctionId> unambiguous_functions();

/// Throws LookupError for out-of-range ids.
const FunctionSpec& function_spec(FunctionId id);

/// "f7" or "griewank" (case-sensitive registry name). Throws LookupError.
FunctionId parse_function_id(std::string_view text);
std::string to_string(FunctionId id);

/// Deterministic evaluation. Throws InvalidArgument for noisy functions
/// (use the overload taking a draw source), empty points, or wrong dimension
/// on fixed-dimension functions.
double evaluate(FunctionId id, std::span<const double> point);

/// General evaluation; noisy functions add U[0,1) noise drawn from `draws`.
double evaluate(FunctionId id, std::span<const double> point, DrawSource& draws);

/// Box of the registry entry at `dim` (default dimension when 0).
SearchSpace search_space(FunctionId id, std::size_t dim = 0);

/// Single-component weighted objective wrapping `evaluate`.
WeightedObjective objective(FunctionId id, std::size_t dim = 0);

} // namespace iwso::bench
