#pragma once

#include <span>
#include <utility>

#include "moeadcht/problem.hpp"
#include "moeadcht/rng.hpp"

namespace moeadcht {

/// Simulated binary crossover with bound handling. Each variable pair is
/// crossed with probability pc and copied unchanged otherwise; children are
/// clamped to the box. The lower child is assigned to the lower parent, so
/// for eta_x -> infinity children converge to their parents componentwise.
std::pair<DecisionVector, DecisionVector>
sbx_crossover(const DecisionVector& parent1, const DecisionVector& parent2,
              std::span<const double> lower, std::span<const double> upper,
              double eta_x, double pc, Rng& rng);

/// Polynomial mutation with bound handling. Each variable mutates with
/// probability pm; result stays in the box.
DecisionVector polynomial_mutation(const DecisionVector& parent,
                                   std::span<const double> lower,
                                   std::span<const double> upper,
                                   double eta_m, double pm, Rng& rng);

} // namespace moeadcht
