#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <fstream>

#include <nlohmann/json.hpp>

#include "moeadcht/problems.hpp"
#include "moeadcht/rng.hpp"

using namespace moeadcht;

namespace {

DecisionVector midpoint(const ProblemDefinition& p) {
    DecisionVector x(p.n_var);
    for (int i = 0; i < p.n_var; ++i) {
        x[i] = 0.5 * (p.lower[i] + p.upper[i]);
    }
    return x;
}

DecisionVector random_point(const ProblemDefinition& p, Rng& rng) {
    DecisionVector x(p.n_var);
    for (int i = 0; i < p.n_var; ++i) {
        x[i] = rng.uniform(p.lower[i], p.upper[i]);
    }
    return x;
}

const std::vector<std::string> kCreNames{"cre21", "cre22", "cre23",
                                         "cre31", "cre32", "cre51"};

} // namespace

TEST_CASE("declared shapes match evaluator output") {
    const std::vector<std::array<int, 3>> expected{
        {3, 2, 3}, {4, 2, 4}, {4, 2, 4}, {7, 3, 10}, {6, 3, 9}, {3, 5, 7}};
    for (std::size_t i = 0; i < kCreNames.size(); ++i) {
        const auto p = problem_by_name(kCreNames[i]);
        CHECK(p.n_var == expected[i][0]);
        CHECK(p.n_obj == expected[i][1]);
        CHECK(p.n_con == expected[i][2]);
        for (int v = 0; v < p.n_var; ++v) {
            CHECK(p.lower[v] < p.upper[v]);
        }
        const Solution s = evaluate_solution(p, midpoint(p));
        CHECK(s.objectives.size() == static_cast<std::size_t>(p.n_obj));
        CHECK(s.constraints.size() == static_cast<std::size_t>(p.n_con));
    }
}

TEST_CASE("evaluators are deterministic") {
    for (const auto& name : kCreNames) {
        const auto p = problem_by_name(name);
        Rng rng(5);
        const DecisionVector x = random_point(p, rng);
        const Solution a = evaluate_solution(p, x);
        const Solution b = evaluate_solution(p, x);
        CHECK(a.objectives == b.objectives);
        CHECK(a.constraints == b.constraints);
        CHECK(a.violation == b.violation);
    }
}

TEST_CASE("evaluators are finite across the whole box") {
    for (const auto& name : kCreNames) {
        const auto p = problem_by_name(name);
        Rng rng(12345);
        for (int i = 0; i < 10000; ++i) {
            const Solution s = evaluate_solution(p, random_point(p, rng));
            for (double f : s.objectives) {
                REQUIRE(std::isfinite(f));
            }
            for (double g : s.constraints) {
                REQUIRE(std::isfinite(g));
            }
            REQUIRE(std::isfinite(s.violation));
            REQUIRE(s.violation >= 0.0);
        }
    }
}

TEST_CASE("violation is the positive-part sum of the constraints") {
    for (const auto& name : kCreNames) {
        const auto p = problem_by_name(name);
        Rng rng(99);
        for (int i = 0; i < 200; ++i) {
            const Solution s = evaluate_solution(p, random_point(p, rng));
            double expected = 0.0;
            for (double g : s.constraints) {
                expected += std::max(g, 0.0);
            }
            CHECK(s.violation == expected);
            CHECK(s.feasible() == (s.violation == 0.0));
        }
    }
}

TEST_CASE("pinned regression fixtures match to relative 1e-9") {
    std::ifstream in(std::string(MOEADCHT_TEST_DATA_DIR) + "/cre_regression.json");
    REQUIRE(in.good());
    const nlohmann::json fixtures = nlohmann::json::parse(in);
    REQUIRE(fixtures.size() == kCreNames.size());

    for (const auto& name : kCreNames) {
        REQUIRE(fixtures.contains(name));
        const auto p = problem_by_name(name);
        for (const auto& fixture : fixtures[name]) {
            const DecisionVector x = fixture["x"].get<DecisionVector>();
            const Solution s = evaluate_solution(p, x);
            const auto expected_f = fixture["objectives"].get<std::vector<double>>();
            const auto expected_g = fixture["constraints"].get<std::vector<double>>();
            REQUIRE(s.objectives.size() == expected_f.size());
            REQUIRE(s.constraints.size() == expected_g.size());
            for (std::size_t j = 0; j < expected_f.size(); ++j) {
                CHECK(s.objectives[j] ==
                      doctest::Approx(expected_f[j]).epsilon(1e-9));
            }
            for (std::size_t j = 0; j < expected_g.size(); ++j) {
                CHECK(s.constraints[j] ==
                      doctest::Approx(expected_g[j]).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("toy problem with a linear feasibility cut") {
    const auto p = toy_constrained("linear");
    CHECK(p.n_var == 1);
    CHECK(p.n_obj == 2);

    SUBCASE("feasible side") {
        for (double x : {0.3, 0.5, 1.0}) {
            const Solution s = evaluate_solution(p, {x});
            CHECK(s.objectives[0] == x);
            CHECK(s.objectives[1] == 1.0 - x);
            CHECK(s.feasible());
        }
    }
    SUBCASE("unfeasible side has violation 0.3 - x") {
        const Solution s = evaluate_solution(p, {0.1});
        CHECK(s.violation == doctest::Approx(0.2).epsilon(1e-12));
        CHECK_FALSE(s.feasible());
    }
    SUBCASE("boundary is feasible with g exactly zero") {
        const Solution s = evaluate_solution(p, {0.3});
        CHECK(s.constraints[0] == doctest::Approx(0.0));
        CHECK(s.feasible());
    }
}

TEST_CASE("toy registry") {
    CHECK(toy_constrained("slack").n_con == 1);
    CHECK(toy_constrained("quadratic").n_obj == 2);
    CHECK_THROWS_AS(toy_constrained("nope"), std::invalid_argument);
    CHECK(problem_by_name("toy:linear").name == "toy:linear");
    CHECK_THROWS_AS(problem_by_name("mazda"), std::invalid_argument);
    CHECK(problem_names().size() == 9);
}
