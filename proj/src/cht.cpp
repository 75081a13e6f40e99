#include "moeadcht/cht.hpp"

#include <cmath>
#include <stdexcept>

namespace moeadcht {

namespace {

void check_unit_interval(double v, const char* what) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw std::invalid_argument(std::string(what) + " outside [0,1]");
    }
}

} // namespace

void validate(const ChtStrategy& strategy) {
    std::visit(
        [](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, StaticPenalty>) {
                if (s.beta < 0.0) {
                    throw std::invalid_argument("static penalty: beta must be >= 0");
                }
            } else if constexpr (std::is_same_v<T, MultiStagedPenalty>) {
                if (s.coefficients.size() != s.level_thresholds.size() + 1) {
                    throw std::invalid_argument(
                        "multi-staged penalty: need one coefficient row per level");
                }
                for (std::size_t k = 1; k < s.level_thresholds.size(); ++k) {
                    if (!(s.level_thresholds[k] > s.level_thresholds[k - 1])) {
                        throw std::invalid_argument(
                            "multi-staged penalty: thresholds must be strictly increasing");
                    }
                }
                for (const auto& row : s.coefficients) {
                    if (row.empty()) {
                        throw std::invalid_argument(
                            "multi-staged penalty: empty coefficient row");
                    }
                }
            } else if constexpr (std::is_same_v<T, DynamicPenalty>) {
                if (s.c <= 0.0 || s.alpha <= 0.0) {
                    throw std::invalid_argument("dynamic penalty: C and alpha must be > 0");
                }
            } else if constexpr (std::is_same_v<T, ThreeStagePenalty>) {
                if (!(0 < s.t1 && s.t1 < s.t2)) {
                    throw std::invalid_argument("three stage penalty: need 0 < t1 < t2");
                }
                if (!(s.p1 <= s.p2 && s.p2 <= s.p3) || s.p1 < 0.0) {
                    throw std::invalid_argument(
                        "three stage penalty: need 0 <= P1 <= P2 <= P3");
                }
            }
        },
        strategy);
}

double no_penalty(const PenaltyInput& in) {
    return in.aggregation;
}

double static_penalty(const PenaltyInput& in, double beta) {
    if (beta < 0.0) {
        throw std::invalid_argument("static penalty: beta must be >= 0");
    }
    return in.aggregation + beta * in.violation_scaled;
}

double multi_staged_penalty(const PenaltyInput& in,
                            const std::vector<double>& level_thresholds,
                            const std::vector<std::vector<double>>& coefficients) {
    if (coefficients.size() != level_thresholds.size() + 1) {
        throw std::invalid_argument("multi-staged penalty: malformed coefficient matrix");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < in.raw_constraints.size(); ++i) {
        const double v = std::max(in.raw_constraints[i], 0.0);
        if (v <= 0.0) {
            continue;
        }
        // level of this constraint: count of thresholds at or below v
        std::size_t level = 0;
        while (level < level_thresholds.size() && v >= level_thresholds[level]) {
            ++level;
        }
        const auto& row = coefficients[level];
        if (row.size() != 1 && row.size() != in.raw_constraints.size()) {
            throw std::invalid_argument("multi-staged penalty: malformed coefficient row");
        }
        const double r = row.size() == 1 ? row[0] : row[i];
        sum += r * v * v;
    }
    return in.aggregation + sum;
}

double dynamic_penalty(const PenaltyInput& in, double c, double alpha) {
    if (c <= 0.0 || alpha <= 0.0) {
        throw std::invalid_argument("dynamic penalty: C and alpha must be > 0");
    }
    if (in.state.generation < 0) {
        throw std::invalid_argument("dynamic penalty: negative generation");
    }
    const double factor = std::pow(c * in.state.generation, alpha);
    return in.aggregation + factor * in.violation_scaled;
}

double self_adaptive_fitness(const PenaltyInput& in) {
    check_unit_interval(in.aggregation_norm, "self-adaptive: aggregation_norm");
    check_unit_interval(in.violation_scaled, "self-adaptive: violation_scaled");
    check_unit_interval(in.state.feasibility_ratio, "self-adaptive: feasibility_ratio");

    const double rf = in.state.feasibility_ratio;
    const double v = in.violation_scaled;
    const double fn = in.aggregation_norm;

    const double distance = rf == 0.0 ? v : std::sqrt(fn * fn + v * v);
    const double m = rf == 0.0 ? 0.0 : v;
    const double n = v == 0.0 ? 0.0 : fn;
    const double penalty = (1.0 - rf) * m + rf * n;
    return distance + penalty;
}

double three_stage_penalty(const PenaltyInput& in, int t1, int t2, double p1,
                           double p2, double p3) {
    if (!(0 < t1 && t1 < t2)) {
        throw std::invalid_argument("three stage penalty: need 0 < t1 < t2");
    }
    if (!(p1 <= p2 && p2 <= p3)) {
        throw std::invalid_argument("three stage penalty: need P1 <= P2 <= P3");
    }
    const int t = in.state.generation;
    const double p = t < t1 ? p1 : (t < t2 ? p2 : p3);
    return in.aggregation + in.violation_scaled * p;
}

double penalized_fitness(const ChtStrategy& strategy, const PenaltyInput& in) {
    return std::visit(
        [&](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, NoPenalty>) {
                return no_penalty(in);
            } else if constexpr (std::is_same_v<T, StaticPenalty>) {
                return static_penalty(in, s.beta);
            } else if constexpr (std::is_same_v<T, MultiStagedPenalty>) {
                return multi_staged_penalty(in, s.level_thresholds, s.coefficients);
            } else if constexpr (std::is_same_v<T, DynamicPenalty>) {
                return dynamic_penalty(in, s.c, s.alpha);
            } else if constexpr (std::is_same_v<T, SelfAdaptivePenalty>) {
                return self_adaptive_fitness(in);
            } else {
                return three_stage_penalty(in, s.t1, s.t2, s.p1, s.p2, s.p3);
            }
        },
        strategy);
}

bool needs_aggregation_norm(const ChtStrategy& strategy) {
    return std::holds_alternative<SelfAdaptivePenalty>(strategy);
}

std::string cht_name(const ChtStrategy& strategy) {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, NoPenalty>) return "none";
            else if constexpr (std::is_same_v<T, StaticPenalty>) return "static";
            else if constexpr (std::is_same_v<T, MultiStagedPenalty>) return "multistaged";
            else if constexpr (std::is_same_v<T, DynamicPenalty>) return "dynamic";
            else if constexpr (std::is_same_v<T, SelfAdaptivePenalty>) return "selfadaptive";
            else return "threestage";
        },
        strategy);
}

} // namespace moeadcht
