#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <cmath>

#include "moeadcht/metrics.hpp"
#include "moeadcht/rng.hpp"

using namespace moeadcht;

namespace {

// Independent Monte Carlo estimate of the dominated volume: sample the box
// [componentwise front minimum, reference] and count dominated samples.
// Returns the estimate and its standard error.
std::pair<double, double> monte_carlo_hv(const std::vector<std::vector<double>>& front,
                                         const std::vector<double>& ref,
                                         std::size_t samples, std::uint64_t seed) {
    const std::size_t d = ref.size();
    std::vector<double> lo(d, std::numeric_limits<double>::infinity());
    for (const auto& p : front) {
        for (std::size_t j = 0; j < d; ++j) {
            lo[j] = std::min(lo[j], p[j]);
        }
    }
    double box = 1.0;
    for (std::size_t j = 0; j < d; ++j) {
        box *= ref[j] - lo[j];
    }
    if (front.empty() || box <= 0.0) {
        return {0.0, 0.0};
    }
    Rng rng(seed);
    std::size_t hits = 0;
    std::vector<double> x(d);
    for (std::size_t s = 0; s < samples; ++s) {
        for (std::size_t j = 0; j < d; ++j) {
            x[j] = rng.uniform(lo[j], ref[j]);
        }
        for (const auto& p : front) {
            bool dominated = true;
            for (std::size_t j = 0; j < d; ++j) {
                if (p[j] > x[j]) {
                    dominated = false;
                    break;
                }
            }
            if (dominated) {
                ++hits;
                break;
            }
        }
    }
    const double rate = static_cast<double>(hits) / static_cast<double>(samples);
    const double se = box * std::sqrt(rate * (1.0 - rate) / static_cast<double>(samples));
    return {box * rate, se};
}

std::vector<std::vector<double>> random_front(Rng& rng, std::size_t points,
                                              std::size_t dim) {
    std::vector<std::vector<double>> front(points, std::vector<double>(dim));
    for (auto& p : front) {
        for (auto& v : p) {
            v = rng.uniform();
        }
    }
    return front;
}

} // namespace

TEST_CASE("nondominated filtering") {
    SUBCASE("dominated point dropped") {
        const std::vector<std::vector<double>> pts{{0.2, 0.8}, {0.5, 0.5}, {0.6, 0.6}};
        CHECK(filter_nondominated(pts) ==
              std::vector<std::vector<double>>{{0.2, 0.8}, {0.5, 0.5}});
    }
    SUBCASE("single point survives") {
        const std::vector<std::vector<double>> pts{{0.3, 0.3}};
        CHECK(filter_nondominated(pts) == pts);
    }
    SUBCASE("duplicates keep the first occurrence only") {
        const std::vector<std::vector<double>> pts{{0.5, 0.5}, {0.5, 0.5}, {0.2, 0.8}};
        CHECK(filter_nondominated(pts) ==
              std::vector<std::vector<double>>{{0.5, 0.5}, {0.2, 0.8}});
    }
    SUBCASE("later point can evict an earlier one") {
        const std::vector<std::vector<double>> pts{{0.6, 0.6}, {0.5, 0.5}};
        CHECK(filter_nondominated(pts) == std::vector<std::vector<double>>{{0.5, 0.5}});
    }
    SUBCASE("dimension mismatch throws") {
        const std::vector<std::vector<double>> pts{{0.1, 0.2}, {0.1}};
        CHECK_THROWS_AS(filter_nondominated(pts), std::invalid_argument);
    }
}

TEST_CASE("hypervolume worked examples") {
    const std::vector<double> ref{1.1, 1.1};
    SUBCASE("single box") {
        CHECK(hypervolume({{0.0, 0.0}}, ref) == doctest::Approx(1.21).epsilon(1e-12));
    }
    SUBCASE("two-point staircase") {
        // union of [0.2,1.1]x[0.8,1.1] and [0.5,1.1]x[0.5,1.1]:
        // 0.27 + 0.36 - 0.18 overlap = 0.45
        const double hv = hypervolume({{0.2, 0.8}, {0.5, 0.5}}, ref);
        CHECK(hv == doctest::Approx(0.45).epsilon(1e-12));
        const auto [estimate, se] = monte_carlo_hv({{0.2, 0.8}, {0.5, 0.5}}, ref, 1000000, 7);
        CHECK(std::abs(hv - estimate) <= std::max(3.0 * se, 1e-4));
    }
    SUBCASE("empty front") {
        CHECK(hypervolume({}, ref) == 0.0);
    }
    SUBCASE("points at or beyond the reference contribute exactly zero") {
        CHECK(hypervolume({{1.1, 0.0}}, ref) == 0.0);
        CHECK(hypervolume({{1.2, 0.0}, {0.0, 1.1}}, ref) == 0.0);
        CHECK(hypervolume({{0.5, 0.5}, {1.3, 0.0}}, ref) ==
              doctest::Approx(0.36).epsilon(1e-12));
    }
    SUBCASE("reference dimension mismatch throws") {
        CHECK_THROWS_AS(hypervolume({{0.1, 0.2, 0.3}}, ref), std::invalid_argument);
    }
}

TEST_CASE("hypervolume is invariant to order and duplicates") {
    Rng rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t dim = 2 + rng.uniform_index(3);
        auto front = random_front(rng, 6, dim);
        const std::vector<double> ref(dim, 1.1);
        const double base = hypervolume(front, ref);

        auto shuffled = front;
        rng.shuffle(shuffled);
        CHECK(hypervolume(shuffled, ref) == doctest::Approx(base).epsilon(1e-12));

        auto duplicated = front;
        duplicated.push_back(front.front());
        duplicated.push_back(front.back());
        CHECK(hypervolume(duplicated, ref) == doctest::Approx(base).epsilon(1e-12));
    }
}

TEST_CASE("adding a point never decreases hypervolume") {
    Rng rng(32);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t dim = 2 + rng.uniform_index(3);
        auto front = random_front(rng, 5, dim);
        const std::vector<double> ref(dim, 1.1);
        const double base = hypervolume(front, ref);

        std::vector<double> extra(dim);
        for (auto& v : extra) {
            v = rng.uniform();
        }
        front.push_back(extra);
        CHECK(hypervolume(front, ref) >= base - 1e-12);
    }
}

TEST_CASE("2-D sweep equals the slicing algorithm on 2-D inputs") {
    Rng rng(33);
    for (int trial = 0; trial < 50; ++trial) {
        const auto front = random_front(rng, 1 + rng.uniform_index(8), 2);
        const std::vector<double> ref{1.1, 1.1};
        CHECK(hypervolume(front, ref) ==
              doctest::Approx(hypervolume_sliced(front, ref)).epsilon(1e-12));
    }
}

TEST_CASE("hypervolume matches a Monte Carlo oracle in 2-4 dimensions") {
    Rng rng(34);
    for (int trial = 0; trial < 12; ++trial) {
        const std::size_t dim = 2 + (trial % 3);
        const auto front = random_front(rng, 1 + rng.uniform_index(8), dim);
        const std::vector<double> ref(dim, 1.1);
        const double exact = hypervolume(front, ref);
        const auto [estimate, se] =
            monte_carlo_hv(front, ref, 200000, 1000 + static_cast<std::uint64_t>(trial));
        CHECK(std::abs(exact - estimate) <= std::max(3.0 * se, 5e-3));
    }
}

TEST_CASE("feasibility ratio") {
    auto solution_with = [](double violation) {
        Solution s;
        s.violation = violation;
        return s;
    };
    CHECK(feasibility_ratio({solution_with(0), solution_with(0)}) == 1.0);
    CHECK(feasibility_ratio({solution_with(1), solution_with(2)}) == 0.0);
    CHECK(feasibility_ratio({solution_with(0), solution_with(0), solution_with(0),
                             solution_with(0.5)}) == doctest::Approx(0.75));
    CHECK_THROWS_AS(feasibility_ratio({}), std::invalid_argument);
}
