#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace moeadcht {

using DecisionVector = std::vector<double>;

/// One evaluated candidate: decision variables, raw objectives, raw
/// constraint values (g <= 0 means satisfied) and the total violation
/// sum(max(g_i, 0)).
struct Solution {
    DecisionVector decision;
    std::vector<double> objectives;
    std::vector<double> constraints;
    double violation = 0.0;

    bool feasible() const { return violation == 0.0; }
};

/// Box-bounded evaluator producing objectives and constraint values.
/// Constraint convention: g_i(x) <= 0 iff constraint i is satisfied.
struct ProblemDefinition {
    std::string name;
    int n_var = 0;
    int n_obj = 0;
    int n_con = 0;
    std::vector<double> lower;
    std::vector<double> upper;
    std::function<void(std::span<const double> x,
                       std::span<double> objectives,
                       std::span<double> constraints)>
        evaluate;
};

/// Runs the evaluator and assembles a Solution (including the violation sum).
Solution evaluate_solution(const ProblemDefinition& problem, DecisionVector x);

/// Total violation of a raw constraint vector: sum of max(g_i, 0).
double total_violation(std::span<const double> constraints);

} // namespace moeadcht
