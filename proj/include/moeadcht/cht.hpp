#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

namespace moeadcht {

/// Population-level search state a penalty rule may condition on.
struct SearchState {
    int generation = 0;            // t, 0 at initialization
    double feasibility_ratio = 0;  // feasible fraction of the population
    int feasible_count = 0;
    int unfeasible_count = 0;
};

/// Everything a penalty rule sees for one solution under one subproblem:
/// the scaled aggregation (weighted Tchebycheff of scaled objectives), the
/// same aggregation min-max rescaled to [0,1] over the current union, the
/// scaled total violation, the raw constraint values and the search state.
struct PenaltyInput {
    double aggregation = 0.0;
    double aggregation_norm = 0.0;
    double violation_scaled = 0.0;
    std::span<const double> raw_constraints{};
    SearchState state{};
};

struct NoPenalty {};

struct StaticPenalty {
    double beta = 1.0;
};

/// Distinct static coefficients for multiple levels of violation. Level
/// thresholds are strictly increasing and partition [0, inf): a violation v
/// falls in level k when thresholds[k-2] <= v < thresholds[k-1] (1-based).
/// Each coefficient row holds either one entry per constraint or a single
/// entry broadcast to all constraints.
struct MultiStagedPenalty {
    std::vector<double> level_thresholds;
    std::vector<std::vector<double>> coefficients;
};

/// Penalty (C*t)^alpha growing with the generation counter.
struct DynamicPenalty {
    double c = 0.5;
    double alpha = 1.0;
};

/// Parameter-free distance-plus-penalty rule driven by the feasibility ratio.
struct SelfAdaptivePenalty {};

/// No penalty until generation t1, a low penalty until t2, then a high one.
struct ThreeStagePenalty {
    int t1 = 25;
    int t2 = 50;
    double p1 = 0.0;
    double p2 = 10.0;
    double p3 = 1000.0;
};

using ChtStrategy = std::variant<NoPenalty, StaticPenalty, MultiStagedPenalty,
                                 DynamicPenalty, SelfAdaptivePenalty,
                                 ThreeStagePenalty>;

/// Throws std::invalid_argument when the strategy parameters violate their
/// constraints (negative beta, nonpositive C/alpha, unordered stages, ...).
void validate(const ChtStrategy& strategy);

double no_penalty(const PenaltyInput& in);
double static_penalty(const PenaltyInput& in, double beta);
double multi_staged_penalty(const PenaltyInput& in,
                            const std::vector<double>& level_thresholds,
                            const std::vector<std::vector<double>>& coefficients);
double dynamic_penalty(const PenaltyInput& in, double c, double alpha);
double self_adaptive_fitness(const PenaltyInput& in);
double three_stage_penalty(const PenaltyInput& in, int t1, int t2, double p1,
                           double p2, double p3);

/// Dispatches to the variant's rule.
double penalized_fitness(const ChtStrategy& strategy, const PenaltyInput& in);

/// True when the rule needs the rescaled aggregation (aggregation_norm).
bool needs_aggregation_norm(const ChtStrategy& strategy);

/// Canonical lower-case name of the variant ("none", "static", ...).
std::string cht_name(const ChtStrategy& strategy);

} // namespace moeadcht
