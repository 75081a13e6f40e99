#include "moeadcht/problems.hpp"

#include <cmath>
#include <stdexcept>

namespace moeadcht {

double total_violation(std::span<const double> constraints) {
    double sum = 0.0;
    for (double g : constraints) {
        sum += std::max(g, 0.0);
    }
    return sum;
}

Solution evaluate_solution(const ProblemDefinition& problem, DecisionVector x) {
    Solution s;
    s.decision = std::move(x);
    s.objectives.assign(problem.n_obj, 0.0);
    s.constraints.assign(problem.n_con, 0.0);
    problem.evaluate(s.decision, s.objectives, s.constraints);
    s.violation = total_violation(s.constraints);
    return s;
}

ProblemDefinition cre21() {
    ProblemDefinition p;
    p.name = "cre21";
    p.n_var = 3;
    p.n_obj = 2;
    p.n_con = 3;
    p.lower = {0.00001, 0.00001, 1.0};
    p.upper = {100.0, 100.0, 3.0};
    p.evaluate = [](std::span<const double> x, std::span<double> f, std::span<double> g) {
        const double x1 = x[0], x2 = x[1], x3 = x[2];
        f[0] = x1 * std::sqrt(16.0 + x3 * x3) + x2 * std::sqrt(1.0 + x3 * x3);
        f[1] = (20.0 * std::sqrt(16.0 + x3 * x3)) / (x1 * x3);
        g[0] = f[0] - 0.1;                                           // volume <= 0.1
        g[1] = f[1] - 100000.0;                                      // member AC stress
        g[2] = (80.0 * std::sqrt(1.0 + x3 * x3)) / (x3 * x2) - 100000.0; // member BC stress
    };
    return p;
}

ProblemDefinition cre22() {
    ProblemDefinition p;
    p.name = "cre22";
    p.n_var = 4;
    p.n_obj = 2;
    p.n_con = 4;
    p.lower = {0.125, 0.1, 0.1, 0.125};
    p.upper = {5.0, 10.0, 10.0, 5.0};
    p.evaluate = [](std::span<const double> x, std::span<double> f, std::span<double> g) {
        const double x1 = x[0], x2 = x[1], x3 = x[2], x4 = x[3];
        constexpr double load = 6000.0;
        constexpr double beam_length = 14.0;
        constexpr double young = 30.0e6;
        constexpr double shear_mod = 12.0e6;

        f[0] = 1.10471 * x1 * x1 * x2 + 0.04811 * x3 * x4 * (14.0 + x2);
        f[1] = (4.0 * load * beam_length * beam_length * beam_length) /
               (young * x4 * x3 * x3 * x3);

        const double moment = load * (beam_length + x2 / 2.0);
        const double half = (x1 + x3) / 2.0;
        const double radius = std::sqrt(x2 * x2 / 4.0 + half * half);
        const double polar = 2.0 * std::sqrt(2.0) * x1 * x2 * (x2 * x2 / 12.0 + half * half);
        const double tau2 = moment * radius / polar;
        const double tau1 = load / (std::sqrt(2.0) * x1 * x2);
        const double tau =
            std::sqrt(tau1 * tau1 + (2.0 * tau1 * tau2 * x2) / (2.0 * radius) + tau2 * tau2);
        const double sigma = (6.0 * load * beam_length) / (x4 * x3 * x3);
        const double buckling =
            (4.013 * young * std::sqrt(x3 * x3 * std::pow(x4, 6.0) / 36.0) /
             (beam_length * beam_length)) *
            (1.0 - (x3 / (2.0 * beam_length)) * std::sqrt(young / (4.0 * shear_mod)));

        g[0] = tau - 13600.0;
        g[1] = sigma - 30000.0;
        g[2] = x1 - x4;
        g[3] = load - buckling;
    };
    return p;
}

ProblemDefinition cre23() {
    ProblemDefinition p;
    p.name = "cre23";
    p.n_var = 4;
    p.n_obj = 2;
    p.n_con = 4;
    p.lower = {55.0, 75.0, 1000.0, 11.0};
    p.upper = {80.0, 110.0, 3000.0, 20.0};
    p.evaluate = [](std::span<const double> x, std::span<double> f, std::span<double> g) {
        const double x1 = x[0], x2 = x[1], x3 = x[2], x4 = x[3];
        const double ring = x2 * x2 - x1 * x1;
        const double cubes = x2 * x2 * x2 - x1 * x1 * x1;
        f[0] = 4.9e-5 * ring * (x4 - 1.0);
        f[1] = 9.82e6 * ring / (x3 * x4 * cubes);
        g[0] = 20.0 - (x2 - x1);
        g[1] = x3 / (3.14 * ring) - 0.4;
        g[2] = 2.22e-3 * x3 * cubes / (ring * ring) - 1.0;
        g[3] = 900.0 - 2.66e-2 * x3 * x4 * cubes / ring;
    };
    return p;
}

ProblemDefinition cre31() {
    ProblemDefinition p;
    p.name = "cre31";
    p.n_var = 7;
    p.n_obj = 3;
    p.n_con = 10;
    p.lower = {0.5, 0.45, 0.5, 0.5, 0.875, 0.4, 0.4};
    p.upper = {1.5, 1.35, 1.5, 1.5, 2.625, 1.2, 1.2};
    p.evaluate = [](std::span<const double> x, std::span<double> f, std::span<double> g) {
        const double x1 = x[0], x2 = x[1], x3 = x[2], x4 = x[3];
        const double x5 = x[4], x6 = x[5], x7 = x[6];
        // material gauges of the original model, fixed in the 7-variable form
        constexpr double m1 = 0.345;
        constexpr double m2 = 0.192;

        f[0] = 1.98 + 4.9 * x1 + 6.67 * x2 + 6.98 * x3 + 4.01 * x4 + 1.78 * x5 +
               0.00001 * x6 + 2.73 * x7;
        const double pubic_force = 4.72 - 0.5 * x4 - 0.19 * x2 * x3;
        const double v_mbp = 10.58 - 0.674 * x1 * x2 - 1.95 * x2 * m1;
        const double v_fd = 16.45 - 0.489 * x3 * x7 - 0.843 * x5 * x6;
        f[1] = pubic_force;
        f[2] = 0.5 * (v_mbp + v_fd);

        g[0] = (1.16 - 0.3717 * x2 * x4 - 0.484 * x3 * m2) - 1.0;
        g[1] = (0.261 - 0.0159 * x1 * x2 - 0.188 * x1 * m1 - 0.019 * x2 * x7 +
                0.0144 * x3 * x5 + 0.08045 * x6 * m2) -
               0.32;
        g[2] = (0.214 + 0.00817 * x5 - 0.131 * x1 * m1 - 0.0704 * x1 * m2 +
                0.03099 * x2 * x6 - 0.018 * x2 * x7 + 0.0208 * x3 * m1 +
                0.121 * x3 * m2 - 0.00364 * x5 * x6 - 0.018 * x2 * x2) -
               0.32;
        g[3] = (0.74 - 0.61 * x2 - 0.163 * x3 * m1 - 0.166 * x7 * m2 + 0.227 * x2 * x2) - 0.32;
        g[4] = (28.98 + 3.818 * x3 - 4.2 * x1 * x2 + 6.63 * x6 * m2 - 7.77 * x7 * m1) - 32.0;
        g[5] = (33.86 + 2.95 * x3 - 5.057 * x1 * x2 - 11.0 * x2 * m1 - 9.98 * x7 * m1 +
                22.0 * m1 * m2) -
               32.0;
        g[6] = (46.36 - 9.9 * x2 - 12.9 * x1 * m1) - 32.0;
        g[7] = pubic_force - 4.0;
        g[8] = v_mbp - 9.9;
        g[9] = v_fd - 15.7;
    };
    return p;
}

ProblemDefinition cre32() {
    ProblemDefinition p;
    p.name = "cre32";
    p.n_var = 6;
    p.n_obj = 3;
    p.n_con = 9;
    p.lower = {150.0, 20.0, 13.0, 10.0, 14.0, 0.63};
    p.upper = {274.32, 32.31, 25.0, 11.71, 18.0, 0.75};
    p.evaluate = [](std::span<const double> x, std::span<double> f, std::span<double> g) {
        const double length = x[0], beam = x[1], depth = x[2], draft = x[3];
        const double speed_kn = x[4], block = x[5];

        const double displacement = 1.025 * length * beam * draft * block;
        const double speed_ms = 0.5144 * speed_kn;
        const double froude = speed_ms / std::sqrt(9.8065 * length);
        const double a = 4977.06 * block * block - 8105.61 * block + 4456.51;
        const double b = -10847.2 * block * block + 12817.0 * block - 6960.32;

        const double power = std::pow(displacement, 2.0 / 3.0) *
                             speed_kn * speed_kn * speed_kn / (a + b * froude);
        const double outfit = std::pow(length, 0.8) * std::pow(beam, 0.6) *
                              std::pow(depth, 0.3) * std::pow(block, 0.1);
        const double steel = 0.034 * std::pow(length, 1.7) * std::pow(beam, 0.7) *
                             std::pow(depth, 0.4) * std::pow(block, 0.5);
        const double machinery = 0.17 * std::pow(power, 0.9);
        const double light_ship = steel + outfit + machinery;

        const double ship_cost = 1.3 * (2000.0 * std::pow(steel, 0.85) +
                                        3500.0 * outfit + 2400.0 * std::pow(power, 0.8));
        const double capital = 0.2 * ship_cost;

        const double deadweight = displacement - light_ship;
        const double running = 40000.0 * std::pow(deadweight, 0.3);

        const double sea_days = (5000.0 / 24.0) / speed_kn;
        const double daily_fuel = 0.19 * power * 24.0 / 1000.0 + 0.2;
        const double fuel_cost = 1.05 * daily_fuel * sea_days * 100.0;
        const double port_cost = 6.3 * std::pow(deadweight, 0.8);

        const double fuel_carried = daily_fuel * (sea_days + 5.0);
        const double cargo = deadweight - fuel_carried - 2.0 * std::sqrt(deadweight);
        const double port_days = 2.0 * (cargo / 8000.0 + 0.5);
        const double trips_per_year = 350.0 / (sea_days + port_days);

        const double annual_cost = capital + running + (fuel_cost + port_cost) * trips_per_year;
        const double annual_cargo = cargo * trips_per_year;

        f[0] = annual_cost / annual_cargo;
        f[1] = light_ship;
        f[2] = -annual_cargo; // capacity maximized

        g[0] = 6.0 - length / beam;
        g[1] = length / depth - 15.0;
        g[2] = length / draft - 19.0;
        g[3] = draft - 0.45 * std::pow(deadweight, 0.31);
        g[4] = draft - (0.7 * depth + 0.7);
        g[5] = deadweight - 500000.0;
        g[6] = 3000.0 - deadweight;
        g[7] = froude - 0.32;
        g[8] = 0.07 * beam - (0.53 * draft +
                              (0.085 * block - 0.002) * beam * beam / (draft * block) -
                              (1.0 + 0.52 * depth));
    };
    return p;
}

ProblemDefinition cre51() {
    ProblemDefinition p;
    p.name = "cre51";
    p.n_var = 3;
    p.n_obj = 5;
    p.n_con = 7;
    p.lower = {0.01, 0.01, 0.01};
    p.upper = {0.45, 0.10, 0.10};
    p.evaluate = [](std::span<const double> x, std::span<double> f, std::span<double> g) {
        const double x1 = x[0], x2 = x[1], x3 = x[2];
        f[0] = 106780.37 * (x2 + x3) + 61704.67;
        f[1] = 3000.0 * x1;
        f[2] = 305700.0 * 2289.0 * x2 / std::pow(0.06 * 2289.0, 0.65);
        f[3] = 250.0 * 2289.0 * std::exp(-39.75 * x2 + 9.9 * x3 + 2.74);
        f[4] = 25.0 * (1.39 / (x1 * x2) + 4940.0 * x3 - 80.0);
        g[0] = (0.00139 / (x1 * x2) + 4.94 * x3 - 0.08) - 1.0;
        g[1] = (0.000306 / (x1 * x2) + 1.082 * x3 - 0.0986) - 1.0;
        g[2] = (12.307 / (x1 * x2) + 49408.24 * x3 + 4051.02) - 50000.0;
        g[3] = (2.098 / (x1 * x2) + 8046.33 * x3 - 696.71) - 16000.0;
        g[4] = (2.138 / (x1 * x2) + 7883.39 * x3 - 705.04) - 10000.0;
        g[5] = (0.417 * x1 * x2 + 1721.26 * x3 - 136.54) - 2000.0;
        g[6] = (0.164 / (x1 * x2) + 631.13 * x3 - 54.48) - 550.0;
    };
    return p;
}

ProblemDefinition toy_constrained(const std::string& name) {
    if (name == "linear") {
        // f = (x, 1-x) on [0,1] with x >= 0.3; the feasible front is the
        // whole segment x in [0.3, 1].
        ProblemDefinition p;
        p.name = "toy:linear";
        p.n_var = 1;
        p.n_obj = 2;
        p.n_con = 1;
        p.lower = {0.0};
        p.upper = {1.0};
        p.evaluate = [](std::span<const double> x, std::span<double> f, std::span<double> g) {
            f[0] = x[0];
            f[1] = 1.0 - x[0];
            g[0] = 0.3 - x[0];
        };
        return p;
    }
    if (name == "slack") {
        // same objectives with a constraint that never binds; every point is
        // feasible, so penalty rules must reduce to the plain aggregation.
        ProblemDefinition p;
        p.name = "toy:slack";
        p.n_var = 1;
        p.n_obj = 2;
        p.n_con = 1;
        p.lower = {0.0};
        p.upper = {1.0};
        p.evaluate = [](std::span<const double> x, std::span<double> f, std::span<double> g) {
            f[0] = x[0];
            f[1] = 1.0 - x[0];
            g[0] = -0.1;
        };
        return p;
    }
    if (name == "quadratic") {
        // f = (x^2, (1-x)^2) on [0,1] with x >= 0.25.
        ProblemDefinition p;
        p.name = "toy:quadratic";
        p.n_var = 1;
        p.n_obj = 2;
        p.n_con = 1;
        p.lower = {0.0};
        p.upper = {1.0};
        p.evaluate = [](std::span<const double> x, std::span<double> f, std::span<double> g) {
            f[0] = x[0] * x[0];
            f[1] = (1.0 - x[0]) * (1.0 - x[0]);
            g[0] = 0.25 - x[0];
        };
        return p;
    }
    throw std::invalid_argument("unknown toy problem: " + name);
}

ProblemDefinition problem_by_name(const std::string& name) {
    if (name == "cre21") return cre21();
    if (name == "cre22") return cre22();
    if (name == "cre23") return cre23();
    if (name == "cre31") return cre31();
    if (name == "cre32") return cre32();
    if (name == "cre51") return cre51();
    if (name.rfind("toy:", 0) == 0) return toy_constrained(name.substr(4));
    throw std::invalid_argument("unknown problem: " + name);
}

std::vector<std::string> problem_names() {
    return {"cre21", "cre22", "cre23", "cre31", "cre32", "cre51",
            "toy:linear", "toy:slack", "toy:quadratic"};
}

} // namespace moeadcht
