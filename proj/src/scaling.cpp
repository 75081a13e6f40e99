#include "moeadcht/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace moeadcht {

double NormalizationSnapshot::scale_objective(std::size_t j, double value) const {
    const double range = obj_max[j] - obj_min[j];
    if (range <= 0.0) {
        return 0.0;
    }
    return (value - obj_min[j]) / range;
}

double NormalizationSnapshot::scale_violation(double value) const {
    const double range = viol_max - viol_min;
    if (range <= 0.0) {
        return 0.0;
    }
    return (value - viol_min) / range;
}

std::vector<double>
NormalizationSnapshot::scale_objectives_of(std::span<const double> raw) const {
    std::vector<double> scaled(raw.size());
    for (std::size_t j = 0; j < raw.size(); ++j) {
        scaled[j] = scale_objective(j, raw[j]);
    }
    return scaled;
}

std::pair<std::vector<std::vector<double>>, NormalizationSnapshot>
scale_objectives(const std::vector<Solution>& fresh,
                 const std::vector<Solution>& incumbent) {
    if (fresh.empty() && incumbent.empty()) {
        throw std::invalid_argument("scale_objectives: empty union");
    }
    const Solution& first = fresh.empty() ? incumbent.front() : fresh.front();
    const std::size_t m = first.objectives.size();

    NormalizationSnapshot snapshot;
    snapshot.obj_min.assign(m, std::numeric_limits<double>::infinity());
    snapshot.obj_max.assign(m, -std::numeric_limits<double>::infinity());
    auto widen = [&](const Solution& s) {
        for (std::size_t j = 0; j < m; ++j) {
            snapshot.obj_min[j] = std::min(snapshot.obj_min[j], s.objectives[j]);
            snapshot.obj_max[j] = std::max(snapshot.obj_max[j], s.objectives[j]);
        }
    };
    for (const Solution& s : fresh) widen(s);
    for (const Solution& s : incumbent) widen(s);

    std::vector<std::vector<double>> scaled;
    scaled.reserve(fresh.size() + incumbent.size());
    for (const Solution& s : fresh) scaled.push_back(snapshot.scale_objectives_of(s.objectives));
    for (const Solution& s : incumbent) scaled.push_back(snapshot.scale_objectives_of(s.objectives));
    return {std::move(scaled), std::move(snapshot)};
}

std::vector<double> scale_violations(const std::vector<Solution>& fresh,
                                     const std::vector<Solution>& incumbent,
                                     NormalizationSnapshot& snapshot) {
    if (fresh.empty() && incumbent.empty()) {
        throw std::invalid_argument("scale_violations: empty union");
    }
    snapshot.viol_min = std::numeric_limits<double>::infinity();
    snapshot.viol_max = -std::numeric_limits<double>::infinity();
    auto widen = [&](const Solution& s) {
        snapshot.viol_min = std::min(snapshot.viol_min, s.violation);
        snapshot.viol_max = std::max(snapshot.viol_max, s.violation);
    };
    for (const Solution& s : fresh) widen(s);
    for (const Solution& s : incumbent) widen(s);

    std::vector<double> scaled;
    scaled.reserve(fresh.size() + incumbent.size());
    for (const Solution& s : fresh) scaled.push_back(snapshot.scale_violation(s.violation));
    for (const Solution& s : incumbent) scaled.push_back(snapshot.scale_violation(s.violation));
    return scaled;
}

double tchebycheff(std::span<const double> f_scaled,
                   std::span<const double> weight,
                   std::span<const double> z_scaled) {
    if (f_scaled.size() != weight.size() || f_scaled.size() != z_scaled.size()) {
        throw std::invalid_argument("tchebycheff: length mismatch");
    }
    double value = 0.0;
    for (std::size_t j = 0; j < f_scaled.size(); ++j) {
        const double w = std::max(weight[j], kTchebycheffWeightFloor);
        value = std::max(value, w * std::abs(f_scaled[j] - z_scaled[j]));
    }
    return value;
}

void update_ideal(std::vector<double>& ideal, std::span<const double> objectives) {
    if (ideal.size() != objectives.size()) {
        throw std::invalid_argument("update_ideal: dimension mismatch");
    }
    for (std::size_t j = 0; j < ideal.size(); ++j) {
        ideal[j] = std::min(ideal[j], objectives[j]);
    }
}

} // namespace moeadcht
