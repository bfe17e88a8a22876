#include "iwso/random.hpp"

#include "iwso/error.hpp"

namespace iwso {

RandomSource::RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

double RandomSource::uniform01() {
    // 53 high bits mapped onto the double grid of [0, 1); identical on every
    // platform, unlike std::uniform_real_distribution.
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RandomSource::uniform_signed() {
    // 2^53 + 1 equally spaced values covering both endpoints.
    constexpr std::uint64_t kSteps = (std::uint64_t{1} << 53) + 1;
    std::uniform_int_distribution<std::uint64_t> pick(0, kSteps - 1);
    return -1.0 + 2.0 * static_cast<double>(pick(engine_)) * 0x1.0p-53;
}

double RandomSource::normal() { return normal_(engine_); }

std::size_t RandomSource::index(std::size_t bound) {
    if (bound == 0) {
        throw InvalidArgument("RandomSource::index: bound must be positive");
    }
    std::uniform_int_distribution<std::size_t> pick(0, bound - 1);
    return pick(engine_);
}

} // namespace iwso
