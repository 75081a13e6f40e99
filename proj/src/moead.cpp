#include "moeadcht/moead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "moeadcht/metrics.hpp"
#include "moeadcht/variation.hpp"

namespace moeadcht {

std::vector<Solution> MoeadState::population() const {
    std::vector<Solution> out;
    out.reserve(subproblems.size());
    for (const Subproblem& sp : subproblems) {
        out.push_back(sp.incumbent);
    }
    return out;
}

void validate_params(const ProblemDefinition& problem, const MoeadParams& params) {
    if (problem.n_obj < 2) {
        throw std::invalid_argument("problem must have at least two objectives");
    }
    if (params.lattice_h < 1) {
        throw std::invalid_argument("lattice resolution H must be >= 1");
    }
    const std::size_t n = weight_count(problem.n_obj, params.lattice_h);
    if (params.neighborhood_size < 2 ||
        static_cast<std::size_t>(params.neighborhood_size) > n) {
        throw std::invalid_argument("neighborhood size T must be in [2, population]");
    }
    if (params.delta < 0.0 || params.delta > 1.0) {
        throw std::invalid_argument("delta must be in [0, 1]");
    }
    if (params.max_replacements < 0) {
        throw std::invalid_argument("max_replacements must be >= 0");
    }
    if (params.crossover_prob < 0.0 || params.crossover_prob > 1.0) {
        throw std::invalid_argument("crossover probability must be in [0, 1]");
    }
    if (params.mutation_prob > 1.0) {
        throw std::invalid_argument("mutation probability must be <= 1");
    }
    if (params.eta_crossover <= 0.0 || params.eta_mutation <= 0.0) {
        throw std::invalid_argument("distribution indices must be > 0");
    }
    if (params.budget < static_cast<long long>(n)) {
        throw std::invalid_argument("budget must cover at least the initial population");
    }
}

namespace {

void note_feasible(MoeadState& state, const Solution& s) {
    if (!s.feasible()) {
        return;
    }
    if (!state.any_feasible) {
        state.any_feasible = true;
        state.feasible_obj_min = s.objectives;
        state.feasible_obj_max = s.objectives;
        return;
    }
    for (std::size_t j = 0; j < s.objectives.size(); ++j) {
        state.feasible_obj_min[j] = std::min(state.feasible_obj_min[j], s.objectives[j]);
        state.feasible_obj_max[j] = std::max(state.feasible_obj_max[j], s.objectives[j]);
    }
}

void record_generation(MoeadState& state) {
    std::vector<std::vector<double>> feasible_objs;
    std::size_t feasible = 0;
    for (const Subproblem& sp : state.subproblems) {
        if (sp.incumbent.feasible()) {
            ++feasible;
            feasible_objs.push_back(sp.incumbent.objectives);
        }
    }
    state.generation_fronts.push_back(filter_nondominated(feasible_objs));
    state.generation_feasibility.push_back(static_cast<double>(feasible) /
                                           static_cast<double>(state.subproblems.size()));
}

} // namespace

MoeadState initialize(const ProblemDefinition& problem, const MoeadParams& params,
                      std::uint64_t seed) {
    validate_params(problem, params);

    auto weights = generate_weights(problem.n_obj, params.lattice_h);
    auto neighborhoods = compute_neighborhoods(weights, params.neighborhood_size);

    MoeadState state{.rng = Rng(seed)};
    state.ideal.assign(problem.n_obj, std::numeric_limits<double>::infinity());
    state.subproblems.resize(weights.size());

    for (std::size_t i = 0; i < weights.size(); ++i) {
        Subproblem& sp = state.subproblems[i];
        sp.weight = std::move(weights[i]);
        sp.neighborhood = std::move(neighborhoods[i]);

        DecisionVector x(problem.n_var);
        for (int v = 0; v < problem.n_var; ++v) {
            x[v] = state.rng.uniform(problem.lower[v], problem.upper[v]);
        }
        sp.incumbent = evaluate_solution(problem, std::move(x));
        ++state.evaluations;
        update_ideal(state.ideal, sp.incumbent.objectives);
        note_feasible(state, sp.incumbent);
    }
    record_generation(state);
    return state;
}

void run_generation(MoeadState& state, const ProblemDefinition& problem,
                    const ChtStrategy& cht, const MoeadParams& params) {
    const std::size_t n = state.subproblems.size();
    const double pm = params.mutation_prob >= 0.0 ? params.mutation_prob
                                                  : 1.0 / problem.n_var;
    state.generation += 1;

    // Offspring phase: one child per subproblem until the budget is spent.
    std::vector<Solution> children;
    std::vector<std::vector<std::size_t>> pools;
    children.reserve(n);
    pools.reserve(n);
    std::vector<std::size_t> whole(n);
    std::iota(whole.begin(), whole.end(), std::size_t{0});

    for (std::size_t i = 0; i < n && state.evaluations < params.budget; ++i) {
        const bool local = state.rng.uniform() < params.delta;
        const std::vector<std::size_t>& pool =
            local ? state.subproblems[i].neighborhood : whole;

        const std::size_t a = state.rng.uniform_index(pool.size());
        std::size_t b = state.rng.uniform_index(pool.size() - 1);
        if (b >= a) {
            ++b; // distinct second parent
        }
        const Solution& parent1 = state.subproblems[pool[a]].incumbent;
        const Solution& parent2 = state.subproblems[pool[b]].incumbent;

        auto [child, sibling] = sbx_crossover(parent1.decision, parent2.decision,
                                              problem.lower, problem.upper,
                                              params.eta_crossover,
                                              params.crossover_prob, state.rng);
        child = polynomial_mutation(child, problem.lower, problem.upper,
                                    params.eta_mutation, pm, state.rng);

        Solution evaluated = evaluate_solution(problem, std::move(child));
        ++state.evaluations;
        update_ideal(state.ideal, evaluated.objectives);
        note_feasible(state, evaluated);
        children.push_back(std::move(evaluated));
        pools.push_back(pool);
    }

    // Per-iteration normalization over new + incumbent.
    const std::vector<Solution> incumbents = state.population();
    auto [union_scaled, snapshot] = scale_objectives(children, incumbents);
    const std::vector<double> union_vscaled =
        scale_violations(children, incumbents, snapshot);
    const std::vector<double> z_scaled = snapshot.scale_objectives_of(state.ideal);

    SearchState search;
    search.generation = state.generation;
    for (const Solution& s : incumbents) {
        if (s.feasible()) {
            ++search.feasible_count;
        } else {
            ++search.unfeasible_count;
        }
    }
    search.feasibility_ratio = static_cast<double>(search.feasible_count) /
                               static_cast<double>(incumbents.size());

    // Scaled views of the evolving population; replacements overwrite them.
    std::vector<std::vector<double>> pop_scaled(union_scaled.begin() + children.size(),
                                                union_scaled.end());
    std::vector<double> pop_vscaled(union_vscaled.begin() + children.size(),
                                    union_vscaled.end());

    // Aggregation range per weight over the fixed union, for the rules that
    // need the rescaled aggregation. Filled on demand.
    const bool want_norm = needs_aggregation_norm(cht);
    std::vector<char> range_ready(n, 0);
    std::vector<std::pair<double, double>> agg_range(n);
    auto aggregation_norm = [&](std::size_t j, double value) {
        if (!want_norm) {
            return 0.0;
        }
        if (!range_ready[j]) {
            double lo = std::numeric_limits<double>::infinity();
            double hi = -lo;
            for (const auto& row : union_scaled) {
                const double t = tchebycheff(row, state.subproblems[j].weight, z_scaled);
                lo = std::min(lo, t);
                hi = std::max(hi, t);
            }
            agg_range[j] = {lo, hi};
            range_ready[j] = 1;
        }
        const auto [lo, hi] = agg_range[j];
        return hi > lo ? (value - lo) / (hi - lo) : 0.0;
    };

    auto penalized = [&](const std::vector<double>& scaled_objs, double vscaled,
                         const Solution& sol, std::size_t j) {
        PenaltyInput in;
        in.aggregation = tchebycheff(scaled_objs, state.subproblems[j].weight, z_scaled);
        in.aggregation_norm = aggregation_norm(j, in.aggregation);
        in.violation_scaled = vscaled;
        in.raw_constraints = sol.constraints;
        in.state = search;
        return penalized_fitness(cht, in);
    };

    // Replacement phase: each child visits its mating pool in random order
    // and takes over at most max_replacements incumbents it beats.
    for (std::size_t i = 0; i < children.size(); ++i) {
        std::vector<std::size_t> order = pools[i];
        state.rng.shuffle(order);
        int replaced = 0;
        for (std::size_t j : order) {
            if (replaced >= params.max_replacements) {
                break;
            }
            const double child_fit =
                penalized(union_scaled[i], union_vscaled[i], children[i], j);
            const double incumbent_fit =
                penalized(pop_scaled[j], pop_vscaled[j],
                          state.subproblems[j].incumbent, j);
            if (child_fit < incumbent_fit) {
                state.subproblems[j].incumbent = children[i];
                pop_scaled[j] = union_scaled[i];
                pop_vscaled[j] = union_vscaled[i];
                ++replaced;
            }
        }
    }
    record_generation(state);
}

RunResult run(const ProblemDefinition& problem, const ChtStrategy& cht,
              const MoeadParams& params, std::uint64_t seed) {
    validate(cht);
    MoeadState state = initialize(problem, params, seed);
    std::vector<long long> eval_marks{state.evaluations};
    while (state.evaluations < params.budget) {
        run_generation(state, problem, cht, params);
        eval_marks.push_back(state.evaluations);
    }

    // Retrospective anytime hypervolume: every generation's feasible front is
    // scaled by the bounds of all feasible solutions the run ever evaluated,
    // so the curve is comparable within the run.
    RunResult result;
    result.population = state.population();
    result.evaluations = state.evaluations;
    const std::vector<double> reference(problem.n_obj, kHvReferenceCoordinate);
    for (std::size_t g = 0; g < state.generation_fronts.size(); ++g) {
        TraceRecord record;
        record.generation = static_cast<int>(g);
        record.evaluations = eval_marks[g];
        record.feasibility = state.generation_feasibility[g];
        if (state.any_feasible && !state.generation_fronts[g].empty()) {
            std::vector<std::vector<double>> scaled;
            scaled.reserve(state.generation_fronts[g].size());
            for (const auto& objs : state.generation_fronts[g]) {
                std::vector<double> row(objs.size());
                for (std::size_t j = 0; j < objs.size(); ++j) {
                    const double range =
                        state.feasible_obj_max[j] - state.feasible_obj_min[j];
                    row[j] = range > 0.0
                                 ? (objs[j] - state.feasible_obj_min[j]) / range
                                 : 0.0;
                }
                scaled.push_back(std::move(row));
            }
            record.hypervolume = hypervolume(scaled, reference);
        }
        result.trace.push_back(record);
    }
    return result;
}

} // namespace moeadcht
