#include "moeadcht/variation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace moeadcht {

namespace {

double clamp(double v, double lo, double hi) {
    return std::min(std::max(v, lo), hi);
}

// Bounded spread factor of simulated binary crossover.
double spread_factor(double u, double beta, double eta) {
    const double alpha = 2.0 - std::pow(beta, -(eta + 1.0));
    if (u <= 1.0 / alpha) {
        return std::pow(u * alpha, 1.0 / (eta + 1.0));
    }
    return std::pow(1.0 / (2.0 - u * alpha), 1.0 / (eta + 1.0));
}

} // namespace

std::pair<DecisionVector, DecisionVector>
sbx_crossover(const DecisionVector& parent1, const DecisionVector& parent2,
              std::span<const double> lower, std::span<const double> upper,
              double eta_x, double pc, Rng& rng) {
    if (parent1.size() != parent2.size() || parent1.size() != lower.size() ||
        parent1.size() != upper.size()) {
        throw std::invalid_argument("sbx_crossover: length mismatch");
    }
    DecisionVector child1 = parent1;
    DecisionVector child2 = parent2;
    for (std::size_t i = 0; i < parent1.size(); ++i) {
        if (rng.uniform() > pc) {
            continue;
        }
        if (std::abs(parent1[i] - parent2[i]) < 1e-14) {
            continue;
        }
        const double y1 = std::min(parent1[i], parent2[i]);
        const double y2 = std::max(parent1[i], parent2[i]);
        const double u = rng.uniform();

        double beta = 1.0 + 2.0 * (y1 - lower[i]) / (y2 - y1);
        const double low = clamp(0.5 * ((y1 + y2) - spread_factor(u, beta, eta_x) * (y2 - y1)),
                                 lower[i], upper[i]);
        beta = 1.0 + 2.0 * (upper[i] - y2) / (y2 - y1);
        const double high = clamp(0.5 * ((y1 + y2) + spread_factor(u, beta, eta_x) * (y2 - y1)),
                                  lower[i], upper[i]);

        if (parent1[i] <= parent2[i]) {
            child1[i] = low;
            child2[i] = high;
        } else {
            child1[i] = high;
            child2[i] = low;
        }
    }
    return {std::move(child1), std::move(child2)};
}

DecisionVector polynomial_mutation(const DecisionVector& parent,
                                   std::span<const double> lower,
                                   std::span<const double> upper,
                                   double eta_m, double pm, Rng& rng) {
    if (parent.size() != lower.size() || parent.size() != upper.size()) {
        throw std::invalid_argument("polynomial_mutation: length mismatch");
    }
    DecisionVector child = parent;
    for (std::size_t i = 0; i < child.size(); ++i) {
        if (rng.uniform() > pm) {
            continue;
        }
        const double span = upper[i] - lower[i];
        const double u = rng.uniform();
        const double mut_pow = 1.0 / (eta_m + 1.0);
        double deltaq;
        if (u < 0.5) {
            const double xy = 1.0 - (child[i] - lower[i]) / span;
            const double val = 2.0 * u + (1.0 - 2.0 * u) * std::pow(xy, eta_m + 1.0);
            deltaq = std::pow(val, mut_pow) - 1.0;
        } else {
            const double xy = 1.0 - (upper[i] - child[i]) / span;
            const double val = 2.0 * (1.0 - u) + 2.0 * (u - 0.5) * std::pow(xy, eta_m + 1.0);
            deltaq = 1.0 - std::pow(val, mut_pow);
        }
        child[i] = clamp(child[i] + deltaq * span, lower[i], upper[i]);
    }
    return child;
}

} // namespace moeadcht
