#pragma once

#include <string>
#include <vector>

#include "moeadcht/problem.hpp"

namespace moeadcht {

// Analytic constrained design problems, transcribed from their published
// formulations with all constraints rewritten to the g <= 0 convention.
ProblemDefinition cre21(); // two bar truss          (2 obj, 3 var, 3 con)
ProblemDefinition cre22(); // welded beam            (2 obj, 4 var, 4 con)
ProblemDefinition cre23(); // disc brake             (2 obj, 4 var, 4 con)
ProblemDefinition cre31(); // car side impact        (3 obj, 7 var, 10 con)
ProblemDefinition cre32(); // bulk carrier design    (3 obj, 6 var, 9 con)
ProblemDefinition cre51(); // water resource plan    (5 obj, 3 var, 7 con)

/// Small synthetic constrained problems with closed-form feasible fronts,
/// used as test oracles. Known names: "linear", "slack", "quadratic".
/// Unknown names throw std::invalid_argument.
ProblemDefinition toy_constrained(const std::string& name);

/// Resolves "cre21".."cre51" and "toy:<name>". Unknown names throw.
ProblemDefinition problem_by_name(const std::string& name);

/// Names problem_by_name accepts, in listing order.
std::vector<std::string> problem_names();

} // namespace moeadcht
