#include <doctest.h>

#include <cmath>
#include <vector>

#include "iwso/error.hpp"
#include "iwso/random.hpp"
#include "iwso/search_space.hpp"
#include "scripted_draws.hpp"

using iwso::SearchSpace;
using iwso::WeightedObjective;
using iwso::testing::ScriptedDraws;

namespace {

double sphere(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) {
        s += v * v;
    }
    return s;
}

double constant(double c) { return c; }

} // namespace

TEST_CASE("search space validation") {
    CHECK_THROWS_AS(SearchSpace({0.0}, {0.0, 1.0}), iwso::InvalidArgument);
    CHECK_THROWS_AS(SearchSpace({}, {}), iwso::InvalidArgument);
    CHECK_THROWS_AS(SearchSpace({1.0}, {1.0}), iwso::InvalidArgument);
    CHECK_THROWS_AS(SearchSpace({2.0}, {1.0}), iwso::InvalidArgument);
    CHECK_THROWS_AS(SearchSpace({-INFINITY}, {1.0}), iwso::InvalidArgument);
    CHECK_THROWS_AS(SearchSpace({NAN}, {1.0}), iwso::InvalidArgument);
    const auto box = SearchSpace::uniform(3, -2.0, 2.0);
    CHECK(box.dim() == 3);
    CHECK(box.contains(std::vector<double>{-2.0, 0.0, 2.0}));
    CHECK_FALSE(box.contains(std::vector<double>{-2.1, 0.0, 2.0}));
    CHECK_FALSE(box.contains(std::vector<double>{0.0, 0.0}));
}

TEST_CASE("clamp examples") {
    const SearchSpace one({-1.0}, {1.0});
    CHECK(iwso::clamp(std::vector<double>{0.5}, one) == std::vector<double>{0.5});
    CHECK(iwso::clamp(std::vector<double>{-1.0}, one) == std::vector<double>{-1.0});
    const SearchSpace two({-1.0, -1.0}, {1.0, 1.0});
    CHECK(iwso::clamp(std::vector<double>{3.0, -3.0}, two) == std::vector<double>{1.0, -1.0});
    CHECK_THROWS_AS(iwso::clamp(std::vector<double>{0.0, 0.0}, one), iwso::InvalidArgument);
}

TEST_CASE("clamp is idempotent") {
    iwso::RandomSource rng(11);
    const SearchSpace box({-1.0, 0.0, 5.0}, {1.0, 2.0, 6.0});
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<double> x(3);
        for (double& v : x) {
            v = 20.0 * rng.uniform_signed();
        }
        const auto once = iwso::clamp(x, box);
        CHECK(iwso::clamp(once, box) == once);
        CHECK(box.contains(once));
        for (std::size_t j = 0; j < x.size(); ++j) {
            if (x[j] >= box.lower()[j] && x[j] <= box.upper()[j]) {
                CHECK(once[j] == x[j]);
            }
        }
    }
}

TEST_CASE("weighted fitness examples") {
    iwso::RandomSource rng(1);
    const auto single = WeightedObjective::single(sphere);
    CHECK(iwso::weighted_fitness(single, std::vector<double>{0.0, 0.0}, rng) == 0.0);

    const WeightedObjective half(
        {[](std::span<const double>, iwso::DrawSource&) { return constant(1.0); },
         [](std::span<const double>, iwso::DrawSource&) { return constant(3.0); }},
        {0.5, 0.5});
    CHECK(iwso::weighted_fitness(half, std::vector<double>{42.0}, rng) == 2.0);

    const WeightedObjective skew(
        {[](std::span<const double>, iwso::DrawSource&) { return constant(4.0); },
         [](std::span<const double>, iwso::DrawSource&) { return constant(0.0); }},
        {0.25, 0.75});
    CHECK(iwso::weighted_fitness(skew, std::vector<double>{-7.0, 1.0}, rng) == 1.0);
}

TEST_CASE("weighted fitness is linear in the weight for identical components") {
    iwso::RandomSource rng(5);
    const iwso::ObjectiveFn f = [](std::span<const double> x, iwso::DrawSource&) {
        return sphere(x) + 0.25;
    };
    const std::vector<double> point{0.3, -1.7, 2.2};
    const double expected = sphere(point) + 0.25;
    for (int i = 0; i <= 20; ++i) {
        const double w = i / 20.0;
        const WeightedObjective obj({f, f}, {w, 1.0 - w});
        CHECK(iwso::weighted_fitness(obj, point, rng) == doctest::Approx(expected).epsilon(1e-15));
    }
}

TEST_CASE("weighted objective validation") {
    const iwso::ObjectiveFn f = [](std::span<const double>, iwso::DrawSource&) { return 0.0; };
    CHECK_THROWS_AS(WeightedObjective({}, {}), iwso::InvalidArgument);
    CHECK_THROWS_AS(WeightedObjective({f}, {0.5}), iwso::InvalidArgument);
    CHECK_THROWS_AS(WeightedObjective({f, f}, {1.2, -0.2}), iwso::InvalidArgument);
    CHECK_THROWS_AS(WeightedObjective({f, f}, {1.0}), iwso::InvalidArgument);
    CHECK_NOTHROW(WeightedObjective({f, f, f}, {0.1, 0.2, 0.7}));
    CHECK_NOTHROW(WeightedObjective({f}, {1.0 + 5e-13}));
}

TEST_CASE("weighted fitness error paths") {
    iwso::RandomSource rng(1);
    const iwso::ObjectiveFn good = [](std::span<const double>, iwso::DrawSource&) { return 1.0; };
    const iwso::ObjectiveFn bad = [](std::span<const double>, iwso::DrawSource&) { return NAN; };
    const WeightedObjective obj({good, bad}, {0.5, 0.5});
    try {
        (void)iwso::weighted_fitness(obj, std::vector<double>{0.0}, rng);
        FAIL("expected EvaluationError");
    } catch (const iwso::EvaluationError& e) {
        CHECK(e.component() == 1);
    }
    const auto fixed = WeightedObjective::single(sphere, 2);
    CHECK_THROWS_AS(iwso::weighted_fitness(fixed, std::vector<double>{0.0}, rng),
                    iwso::InvalidArgument);
}

TEST_CASE("sample uniform point with scripted draws") {
    ScriptedDraws draws;
    draws.u01_default = 0.0;
    const SearchSpace box({-3.0, 1.0}, {5.0, 2.0});
    CHECK(iwso::sample_uniform_point(box, draws) == std::vector<double>{-3.0, 1.0});

    draws.u01_default = 0.5;
    const SearchSpace mid({-2.0}, {2.0});
    CHECK(iwso::sample_uniform_point(mid, draws) == std::vector<double>{0.0});
}

TEST_CASE("sample uniform point statistics") {
    iwso::RandomSource rng(2024);
    const auto box = SearchSpace::uniform(4, -1.0, 1.0);
    std::vector<double> sum(4, 0.0);
    constexpr int kDraws = 10000;
    for (int i = 0; i < kDraws; ++i) {
        const auto p = iwso::sample_uniform_point(box, rng);
        for (std::size_t j = 0; j < p.size(); ++j) {
            CHECK(p[j] >= -1.0);
            CHECK(p[j] < 1.0);
            sum[j] += p[j];
        }
    }
    for (double s : sum) {
        CHECK(std::abs(s / kDraws) <= 0.05);
    }
}

TEST_CASE("random source determinism and ranges") {
    iwso::RandomSource a(99);
    iwso::RandomSource b(99);
    for (int i = 0; i < 1000; ++i) {
        const double u = a.uniform01();
        CHECK(u == b.uniform01());
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        const double s = a.uniform_signed();
        CHECK(s == b.uniform_signed());
        CHECK(s >= -1.0);
        CHECK(s <= 1.0);
        CHECK(a.normal() == b.normal());
        CHECK(a.index(7) == b.index(7));
    }
    CHECK_THROWS_AS(a.index(0), iwso::InvalidArgument);
}
