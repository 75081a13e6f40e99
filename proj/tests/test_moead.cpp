#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "moeadcht/moead.hpp"
#include "moeadcht/problems.hpp"

using namespace moeadcht;

namespace {

MoeadParams small_params(long long budget = 500) {
    MoeadParams params;
    params.lattice_h = 19; // population 20 for two objectives
    params.neighborhood_size = 5;
    params.budget = budget;
    return params;
}

bool same_population(const std::vector<Solution>& a, const std::vector<Solution>& b) {
    if (a.size() != b.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].decision != b[i].decision || a[i].objectives != b[i].objectives ||
            a[i].violation != b[i].violation) {
            return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("initialization evaluates one solution per weight inside the box") {
    const auto problem = problem_by_name("cre21");
    const auto params = small_params();
    const MoeadState state = initialize(problem, params, 7);

    CHECK(state.subproblems.size() == 20);
    CHECK(state.evaluations == 20);
    CHECK(state.generation == 0);
    for (const Subproblem& sp : state.subproblems) {
        REQUIRE(sp.incumbent.decision.size() == 3);
        for (int v = 0; v < problem.n_var; ++v) {
            CHECK(sp.incumbent.decision[v] >= problem.lower[v]);
            CHECK(sp.incumbent.decision[v] <= problem.upper[v]);
        }
        CHECK(std::find(sp.neighborhood.begin(), sp.neighborhood.end(),
                        &sp - state.subproblems.data()) != sp.neighborhood.end());
    }
    for (int j = 0; j < problem.n_obj; ++j) {
        double best = std::numeric_limits<double>::infinity();
        for (const Subproblem& sp : state.subproblems) {
            best = std::min(best, sp.incumbent.objectives[j]);
        }
        CHECK(state.ideal[j] == best);
    }
}

TEST_CASE("one generation under a fixed seed is bit-reproducible") {
    const auto problem = problem_by_name("toy:linear");
    const auto params = small_params();
    const ChtStrategy cht = StaticPenalty{1000.0};

    MoeadState a = initialize(problem, params, 99);
    MoeadState b = initialize(problem, params, 99);
    CHECK(same_population(a.population(), b.population()));

    run_generation(a, problem, cht, params);
    run_generation(b, problem, cht, params);
    CHECK(a.evaluations == b.evaluations);
    CHECK(a.ideal == b.ideal);
    CHECK(same_population(a.population(), b.population()));
}

TEST_CASE("nr=0 leaves the population unchanged except the ideal point") {
    const auto problem = problem_by_name("toy:linear");
    auto params = small_params();
    params.max_replacements = 0;
    MoeadState state = initialize(problem, params, 4);
    const auto before = state.population();
    const auto ideal_before = state.ideal;

    run_generation(state, problem, NoPenalty{}, params);
    CHECK(same_population(state.population(), before));
    for (std::size_t j = 0; j < state.ideal.size(); ++j) {
        CHECK(state.ideal[j] <= ideal_before[j]);
    }
    CHECK(state.evaluations == 40);
}

TEST_CASE("ideal point never increases over a run") {
    const auto problem = problem_by_name("cre23");
    const auto params = small_params(300);
    MoeadState state = initialize(problem, params, 21);
    auto previous = state.ideal;
    while (state.evaluations < params.budget) {
        run_generation(state, problem, DynamicPenalty{2.0, 2.0}, params);
        for (std::size_t j = 0; j < previous.size(); ++j) {
            CHECK(state.ideal[j] <= previous[j]);
        }
        previous = state.ideal;
    }
}

TEST_CASE("feasible-only problem makes every penalty equal to no penalty") {
    // the slack toy never violates, so replacement must reduce to the plain
    // scalarization comparison for any penalty rule
    const auto problem = problem_by_name("toy:slack");
    const auto params = small_params(400);
    const RunResult none = run(problem, NoPenalty{}, params, 31);
    const RunResult harsh = run(problem, StaticPenalty{1000.0}, params, 31);
    const RunResult staged = run(problem, ThreeStagePenalty{}, params, 31);

    CHECK(same_population(none.population, harsh.population));
    CHECK(same_population(none.population, staged.population));
    REQUIRE(none.trace.size() == harsh.trace.size());
    for (std::size_t g = 0; g < none.trace.size(); ++g) {
        CHECK(none.trace[g].hypervolume == harsh.trace[g].hypervolume);
        CHECK(none.trace[g].feasibility == 1.0);
    }
}

TEST_CASE("budget accounting is exact") {
    const auto problem = problem_by_name("toy:linear");

    SUBCASE("budget equal to the population size stops after initialization") {
        auto params = small_params(20);
        const RunResult result = run(problem, NoPenalty{}, params, 3);
        CHECK(result.trace.size() == 1);
        CHECK(result.evaluations == 20);
        CHECK(result.trace.front().generation == 0);
    }
    SUBCASE("partial generation stops issuing evaluations at the budget") {
        auto params = small_params(30); // room for half a generation
        const RunResult result = run(problem, NoPenalty{}, params, 3);
        CHECK(result.evaluations == 30);
        CHECK(result.trace.size() == 2);
        CHECK(result.trace.back().evaluations == 30);
    }
    SUBCASE("every evaluator call is counted") {
        auto problem_counted = problem;
        long long calls = 0;
        auto inner = problem.evaluate;
        problem_counted.evaluate = [&calls, inner](std::span<const double> x,
                                                   std::span<double> f,
                                                   std::span<double> g) {
            ++calls;
            inner(x, f, g);
        };
        auto params = small_params(137);
        const RunResult result = run(problem_counted, NoPenalty{}, params, 3);
        CHECK(result.evaluations == 137);
        CHECK(calls == 137);
    }
}

TEST_CASE("identical seeds give identical traces, different seeds differ") {
    const auto problem = problem_by_name("cre22");
    const auto params = small_params(400);
    const ChtStrategy cht = SelfAdaptivePenalty{};
    const RunResult a = run(problem, cht, params, 11);
    const RunResult b = run(problem, cht, params, 11);
    const RunResult c = run(problem, cht, params, 12);

    REQUIRE(a.trace.size() == b.trace.size());
    for (std::size_t g = 0; g < a.trace.size(); ++g) {
        CHECK(a.trace[g].hypervolume == b.trace[g].hypervolume);
        CHECK(a.trace[g].feasibility == b.trace[g].feasibility);
        CHECK(a.trace[g].evaluations == b.trace[g].evaluations);
    }
    CHECK(same_population(a.population, b.population));
    CHECK_FALSE(same_population(a.population, c.population));
}

TEST_CASE("initialization does not depend on the penalty rule") {
    const auto problem = problem_by_name("cre21");
    const auto params = small_params(40);
    const RunResult none = run(problem, NoPenalty{}, params, 5);
    const RunResult harsh = run(problem, StaticPenalty{1000.0}, params, 5);
    CHECK(none.trace.front().hypervolume == harsh.trace.front().hypervolume);
    CHECK(none.trace.front().feasibility == harsh.trace.front().feasibility);
}

TEST_CASE("trace has one record per generation and monotone evaluations") {
    const auto problem = problem_by_name("toy:quadratic");
    const auto params = small_params(200);
    const RunResult result = run(problem, DynamicPenalty{}, params, 17);
    CHECK(result.trace.size() == 10); // init + 9 generations of 20
    for (std::size_t g = 1; g < result.trace.size(); ++g) {
        CHECK(result.trace[g].generation ==
              result.trace[g - 1].generation + 1);
        CHECK(result.trace[g].evaluations > result.trace[g - 1].evaluations);
    }
}

TEST_CASE("parameter validation") {
    const auto problem = problem_by_name("toy:linear");
    MoeadParams params = small_params();

    SUBCASE("neighborhood bounds") {
        params.neighborhood_size = 1;
        CHECK_THROWS_AS(validate_params(problem, params), std::invalid_argument);
        params.neighborhood_size = 21;
        CHECK_THROWS_AS(validate_params(problem, params), std::invalid_argument);
    }
    SUBCASE("budget must cover initialization") {
        params.budget = 19;
        CHECK_THROWS_AS(validate_params(problem, params), std::invalid_argument);
    }
    SUBCASE("lattice resolution") {
        params.lattice_h = 0;
        CHECK_THROWS_AS(validate_params(problem, params), std::invalid_argument);
    }
    SUBCASE("delta range") {
        params.delta = 1.5;
        CHECK_THROWS_AS(validate_params(problem, params), std::invalid_argument);
    }
}
