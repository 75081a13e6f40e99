#pragma once

#include <vector>

#include "moeadcht/problem.hpp"

namespace moeadcht {

/// Maximal mutually nondominated subset (minimization), keeping the first
/// occurrence of duplicates, in order of first appearance.
std::vector<std::vector<double>>
filter_nondominated(const std::vector<std::vector<double>>& points);

/// Exact hypervolume of a minimization front against a reference point.
/// Points with any coordinate >= the reference contribute nothing. Uses the
/// 2-D sweep for two objectives and recursive slicing for 3-5.
double hypervolume(const std::vector<std::vector<double>>& front,
                   const std::vector<double>& reference);

/// The recursive slicing algorithm for any dimension >= 2 (also valid on
/// 2-D inputs; used to cross-check the sweep).
double hypervolume_sliced(const std::vector<std::vector<double>>& front,
                          const std::vector<double>& reference);

/// Fraction of solutions with zero violation. Errors on an empty population.
double feasibility_ratio(const std::vector<Solution>& population);

/// One anytime record: state of a run after a given generation.
struct TraceRecord {
    int generation = 0;
    long long evaluations = 0;
    double hypervolume = 0.0;
    double feasibility = 0.0;
};

using AnytimeTrace = std::vector<TraceRecord>;

} // namespace moeadcht
