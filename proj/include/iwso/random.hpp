#pragma once

#include <cstdint>
#include <random>

namespace iwso {

/// Source of the three draw primitives used by the optimizers.
///
/// The abstract base lets tests script exact draw sequences; production code
/// always uses RandomSource.
class DrawSource {
  public:
    virtual ~DrawSource() = default;

    /// Uniform on [0, 1).
    virtual double uniform01() = 0;
    /// Uniform on [-1, 1].
    virtual double uniform_signed() = 0;
    /// Standard normal N(0, 1).
    virtual double normal() = 0;
};

/// Seeded 64-bit generator. Same seed, same draw sequence.
///
/// Owned by exactly one run; never share an instance across threads.
class RandomSource final : public DrawSource {
  public:
    explicit RandomSource(std::uint64_t seed);

    double uniform01() override;
    double uniform_signed() override;
    double normal() override;

    /// Uniform integer in [0, bound). bound must be positive.
    std::size_t index(std::size_t bound);

    [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }

  private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

} // namespace iwso
