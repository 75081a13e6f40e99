#pragma once

#include <span>
#include <vector>

#include "moeadcht/problem.hpp"
#include "moeadcht/weights.hpp"

namespace moeadcht {

/// Per-iteration linear scaling reference, recomputed every generation from
/// the union of the new and the incumbent populations.
struct NormalizationSnapshot {
    std::vector<double> obj_min;
    std::vector<double> obj_max;
    double viol_min = 0.0;
    double viol_max = 0.0;

    /// Scaled value of one objective component. Degenerate range maps to 0.
    double scale_objective(std::size_t j, double value) const;

    /// Scaled total violation. Degenerate range maps to 0.
    double scale_violation(double value) const;

    /// Scales a full raw objective vector.
    std::vector<double> scale_objectives_of(std::span<const double> raw) const;
};

/// Min-max scales every objective column over the union of the two
/// populations. Returns one scaled row per solution (new first, then
/// incumbent) along with the snapshot used.
std::pair<std::vector<std::vector<double>>, NormalizationSnapshot>
scale_objectives(const std::vector<Solution>& fresh,
                 const std::vector<Solution>& incumbent);

/// Min-max scales the total violations over the union (new first, then
/// incumbent). Also fills the violation fields of the snapshot.
std::vector<double> scale_violations(const std::vector<Solution>& fresh,
                                     const std::vector<Solution>& incumbent,
                                     NormalizationSnapshot& snapshot);

/// Weighted Tchebycheff value max_i(max(w_i, eps) * |f_i - z_i|) with
/// eps = 1e-6 guarding zero weights.
double tchebycheff(std::span<const double> f_scaled,
                   std::span<const double> weight,
                   std::span<const double> z_scaled);

/// Componentwise minimum update of the ideal point from raw objectives.
void update_ideal(std::vector<double>& ideal, std::span<const double> objectives);

inline constexpr double kTchebycheffWeightFloor = 1e-6;

} // namespace moeadcht
