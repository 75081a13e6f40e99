#include "moeadcht/weights.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace moeadcht {

std::size_t weight_count(int m, int H) {
    if (m < 2 || H < 1) {
        throw std::invalid_argument("weight lattice requires m >= 2 and H >= 1");
    }
    // C(H+m-1, m-1)
    std::size_t count = 1;
    for (int i = 1; i <= m - 1; ++i) {
        count = count * static_cast<std::size_t>(H + i) / static_cast<std::size_t>(i);
    }
    return count;
}

namespace {

void fill_lattice(std::vector<int>& parts, int position, int remaining, int H,
                  std::vector<WeightVector>& out) {
    const int m = static_cast<int>(parts.size());
    if (position == m - 1) {
        parts[position] = remaining;
        WeightVector w(m);
        for (int j = 0; j < m; ++j) {
            w[j] = static_cast<double>(parts[j]) / H;
        }
        out.push_back(std::move(w));
        return;
    }
    for (int v = 0; v <= remaining; ++v) {
        parts[position] = v;
        fill_lattice(parts, position + 1, remaining - v, H, out);
    }
}

} // namespace

std::vector<WeightVector> generate_weights(int m, int H) {
    const std::size_t expected = weight_count(m, H);
    std::vector<WeightVector> out;
    out.reserve(expected);
    std::vector<int> parts(m, 0);
    fill_lattice(parts, 0, H, H, out);
    return out;
}

std::vector<std::vector<std::size_t>>
compute_neighborhoods(const std::vector<WeightVector>& weights, int T) {
    const std::size_t n = weights.size();
    if (T < 1 || static_cast<std::size_t>(T) > n) {
        throw std::invalid_argument("neighborhood size T must be in [1, #weights]");
    }
    std::vector<std::vector<std::size_t>> neighborhoods(n);
    std::vector<std::pair<double, std::size_t>> by_distance(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double d2 = 0.0;
            for (std::size_t k = 0; k < weights[i].size(); ++k) {
                const double diff = weights[i][k] - weights[j][k];
                d2 += diff * diff;
            }
            by_distance[j] = {d2, j};
        }
        std::sort(by_distance.begin(), by_distance.end());
        neighborhoods[i].reserve(T);
        for (int t = 0; t < T; ++t) {
            neighborhoods[i].push_back(by_distance[t].second);
        }
    }
    return neighborhoods;
}

} // namespace moeadcht
