#include "moeadcht/metrics.hpp"

#include <algorithm>
#include <stdexcept>

namespace moeadcht {

namespace {

// p dominates q (minimization): p <= q everywhere, strictly somewhere.
bool dominates(const std::vector<double>& p, const std::vector<double>& q) {
    bool strict = false;
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (p[j] > q[j]) return false;
        if (p[j] < q[j]) strict = true;
    }
    return strict;
}

} // namespace

std::vector<std::vector<double>>
filter_nondominated(const std::vector<std::vector<double>>& points) {
    if (points.empty()) {
        return {};
    }
    const std::size_t dim = points.front().size();
    for (const auto& p : points) {
        if (p.size() != dim) {
            throw std::invalid_argument("filter_nondominated: dimension mismatch");
        }
    }
    std::vector<std::vector<double>> kept;
    for (const auto& candidate : points) {
        bool drop = false;
        for (const auto& k : kept) {
            if (k == candidate || dominates(k, candidate)) {
                drop = true;
                break;
            }
        }
        if (drop) {
            continue;
        }
        std::erase_if(kept, [&](const std::vector<double>& k) {
            return dominates(candidate, k);
        });
        kept.push_back(candidate);
    }
    return kept;
}

namespace {

double sweep_2d(std::vector<std::vector<double>> pts, const std::vector<double>& ref) {
    std::sort(pts.begin(), pts.end());
    // keep the staircase: ascending x, strictly descending y
    std::vector<std::pair<double, double>> stair;
    double best_y = ref[1];
    for (const auto& p : pts) {
        if (p[1] < best_y) {
            stair.emplace_back(p[0], p[1]);
            best_y = p[1];
        }
    }
    double volume = 0.0;
    for (std::size_t i = 0; i < stair.size(); ++i) {
        const double next_x = i + 1 < stair.size() ? stair[i + 1].first : ref[0];
        volume += (next_x - stair[i].first) * (ref[1] - stair[i].second);
    }
    return volume;
}

// Recursive slicing over the last coordinate; correct for any point set
// (dominated members cannot change the union of boxes).
double sliced(std::vector<std::vector<double>> pts, const std::vector<double>& ref,
              std::size_t dim) {
    if (pts.empty()) {
        return 0.0;
    }
    if (dim == 2) {
        for (auto& p : pts) p.resize(2);
        return sweep_2d(std::move(pts), ref);
    }
    std::sort(pts.begin(), pts.end(),
              [&](const auto& a, const auto& b) { return a[dim - 1] < b[dim - 1]; });
    double volume = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const double top = i + 1 < pts.size() ? pts[i + 1][dim - 1] : ref[dim - 1];
        const double depth = top - pts[i][dim - 1];
        if (depth <= 0.0) {
            continue;
        }
        std::vector<std::vector<double>> slab(pts.begin(), pts.begin() + i + 1);
        volume += depth * sliced(std::move(slab), ref, dim - 1);
    }
    return volume;
}

std::vector<std::vector<double>>
clip_to_reference(const std::vector<std::vector<double>>& front,
                  const std::vector<double>& reference) {
    std::vector<std::vector<double>> pts;
    pts.reserve(front.size());
    for (const auto& p : front) {
        if (p.size() != reference.size()) {
            throw std::invalid_argument("hypervolume: reference dimension mismatch");
        }
        bool inside = true;
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (p[j] >= reference[j]) {
                inside = false;
                break;
            }
        }
        if (inside) {
            pts.push_back(p);
        }
    }
    return pts;
}

} // namespace

double hypervolume(const std::vector<std::vector<double>>& front,
                   const std::vector<double>& reference) {
    if (reference.size() < 2) {
        throw std::invalid_argument("hypervolume: need at least two objectives");
    }
    auto pts = clip_to_reference(front, reference);
    if (pts.empty()) {
        return 0.0;
    }
    if (reference.size() == 2) {
        return sweep_2d(std::move(pts), reference);
    }
    return sliced(std::move(pts), reference, reference.size());
}

double hypervolume_sliced(const std::vector<std::vector<double>>& front,
                          const std::vector<double>& reference) {
    if (reference.size() < 2) {
        throw std::invalid_argument("hypervolume: need at least two objectives");
    }
    auto pts = clip_to_reference(front, reference);
    if (pts.empty()) {
        return 0.0;
    }
    return sliced(std::move(pts), reference, reference.size());
}

double feasibility_ratio(const std::vector<Solution>& population) {
    if (population.empty()) {
        throw std::invalid_argument("feasibility_ratio: empty population");
    }
    std::size_t feasible = 0;
    for (const Solution& s : population) {
        if (s.feasible()) ++feasible;
    }
    return static_cast<double>(feasible) / static_cast<double>(population.size());
}

} // namespace moeadcht
