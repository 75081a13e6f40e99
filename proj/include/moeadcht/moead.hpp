#pragma once

#include <cstdint>
#include <vector>

#include "moeadcht/cht.hpp"
#include "moeadcht/metrics.hpp"
#include "moeadcht/problem.hpp"
#include "moeadcht/rng.hpp"
#include "moeadcht/scaling.hpp"
#include "moeadcht/weights.hpp"

namespace moeadcht {

struct MoeadParams {
    int lattice_h = 0;           // simplex-lattice resolution; population = C(H+m-1, m-1)
    int neighborhood_size = 20;  // T
    double delta = 0.9;          // probability of mating within the neighborhood
    int max_replacements = 2;    // nr
    double eta_crossover = 20.0;
    double eta_mutation = 20.0;
    double crossover_prob = 1.0;
    double mutation_prob = -1.0; // negative means 1/n_var
    long long budget = 20000;    // total problem evaluations, initialization included
};

/// One decomposition subproblem: weight vector, neighbor indices (self
/// included, ascending by weight distance) and the current incumbent.
struct Subproblem {
    WeightVector weight;
    std::vector<std::size_t> neighborhood;
    Solution incumbent;
};

/// Full evolving state of a run. Owns its PRNG, so concurrent runs never
/// share random state.
struct MoeadState {
    std::vector<Subproblem> subproblems;
    std::vector<double> ideal; // raw objective units, +inf before first update
    int generation = 0;
    long long evaluations = 0;
    Rng rng;

    // Scaling reference for the anytime hypervolume protocol: bounds over
    // every feasible solution evaluated so far, plus the per-generation
    // feasible nondominated fronts for retrospective evaluation.
    bool any_feasible = false;
    std::vector<double> feasible_obj_min;
    std::vector<double> feasible_obj_max;
    std::vector<std::vector<std::vector<double>>> generation_fronts;
    std::vector<double> generation_feasibility;

    std::vector<Solution> population() const;
};

struct RunResult {
    std::vector<Solution> population;
    AnytimeTrace trace;
    long long evaluations = 0;
};

/// Validates parameters against the problem (lattice resolution, T range,
/// budget, operator parameters); throws std::invalid_argument.
void validate_params(const ProblemDefinition& problem, const MoeadParams& params);

/// Builds the initial state: weights, neighborhoods, a uniform random
/// population evaluated within bounds, and the ideal point.
MoeadState initialize(const ProblemDefinition& problem, const MoeadParams& params,
                      std::uint64_t seed);

/// Advances one generation: one offspring per subproblem in ascending order
/// (stopping when the evaluation budget is exhausted), per-iteration
/// normalization over new + incumbent, then neighborhood replacement driven
/// by the penalty rule, capped at max_replacements per offspring.
void run_generation(MoeadState& state, const ProblemDefinition& problem,
                    const ChtStrategy& cht, const MoeadParams& params);

/// Full run: initialization plus generations until the budget is reached.
/// The trace holds one record per generation including initialization, with
/// hypervolume computed retrospectively against the fixed per-run scaling
/// reference (bounds of all feasible solutions the run ever evaluated) and
/// reference point (1.1, ..., 1.1).
RunResult run(const ProblemDefinition& problem, const ChtStrategy& cht,
              const MoeadParams& params, std::uint64_t seed);

inline constexpr double kHvReferenceCoordinate = 1.1;

} // namespace moeadcht
