#pragma once

#include <cstddef>
#include <vector>

namespace moeadcht {

using WeightVector = std::vector<double>;

/// All simplex-lattice weight vectors (i_1/H, ..., i_m/H) with the integer
/// parts summing to H, in lexicographic order of the integer tuples.
/// Count is C(H+m-1, m-1).
std::vector<WeightVector> generate_weights(int m, int H);

/// Number of lattice vectors generate_weights(m, H) produces.
std::size_t weight_count(int m, int H);

/// For each weight, the indices of its T nearest weights by Euclidean
/// distance (self included), sorted ascending by distance, ties broken by
/// lower index.
std::vector<std::vector<std::size_t>>
compute_neighborhoods(const std::vector<WeightVector>& weights, int T);

} // namespace moeadcht
