#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace iwso {

/// Precondition or configuration violation raised before any work is done.
class InvalidArgument : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// An objective returned a non-finite value (or a fitness compared was NaN).
class EvaluationError : public std::runtime_error {
  public:
    explicit EvaluationError(const std::string& what, std::size_t component = npos)
        : std::runtime_error(what), component_(component) {}

    /// Index of the offending objective component, or npos when not applicable.
    [[nodiscard]] std::size_t component() const noexcept { return component_; }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  private:
    std::size_t component_;
};

/// Unknown identifier (function id, algorithm name, ...).
class LookupError : public std::out_of_range {
  public:
    using std::out_of_range::out_of_range;
};

} // namespace iwso
