#include "moeadcht/config.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "moeadcht/problems.hpp"

namespace moeadcht {

using nlohmann::json;

ProblemDefinition ExperimentConfig::problem() const {
    return problem_by_name(problem_name);
}

std::string fnv1a_hex(const std::string& text) {
    std::uint64_t hash = 1469598103934665603ull;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
    throw std::invalid_argument("config error at '" + path + "': " + message);
}

double require_number(const json& v, const std::string& path) {
    if (!v.is_number()) fail(path, "expected a number");
    return v.get<double>();
}

long long require_integer(const json& v, const std::string& path) {
    if (!v.is_number_integer()) fail(path, "expected an integer");
    return v.get<long long>();
}

void reject_unknown_keys(const json& obj, const std::set<std::string>& known,
                         const std::string& prefix) {
    for (const auto& [key, value] : obj.items()) {
        if (!known.contains(key)) {
            fail(prefix + key, "unknown key");
        }
    }
}

std::vector<std::vector<double>>
coefficient_rows(const json& value, const std::string& path) {
    if (!value.is_array() || value.empty()) fail(path, "expected a nonempty array");
    std::vector<std::vector<double>> rows;
    for (std::size_t k = 0; k < value.size(); ++k) {
        const json& row = value[k];
        const std::string row_path = path + "[" + std::to_string(k) + "]";
        if (row.is_number()) {
            rows.push_back({row.get<double>()});
        } else if (row.is_array() && !row.empty()) {
            std::vector<double> entries;
            for (const auto& e : row) {
                entries.push_back(require_number(e, row_path));
            }
            rows.push_back(std::move(entries));
        } else {
            fail(row_path, "expected a number or a nonempty array of numbers");
        }
    }
    return rows;
}

} // namespace

ChtStrategy cht_by_name(const std::string& name, const json* params,
                        int n_constraints) {
    auto get = [&](const char* key, double fallback) {
        if (params != nullptr && params->contains(key)) {
            return require_number((*params)[key], std::string("cht.") + key);
        }
        return fallback;
    };

    ChtStrategy strategy;
    std::set<std::string> known{"name"};
    if (name == "none") {
        strategy = NoPenalty{};
    } else if (name == "static" || name == "static-low") {
        strategy = StaticPenalty{get("beta", 1.0)};
        known.insert("beta");
    } else if (name == "static-high") {
        strategy = StaticPenalty{get("beta", 1000.0)};
        known.insert("beta");
    } else if (name == "dynamic" || name == "dynamic-slow") {
        strategy = DynamicPenalty{get("c", 0.5), get("alpha", 1.0)};
        known.insert("c");
        known.insert("alpha");
    } else if (name == "dynamic-fast") {
        strategy = DynamicPenalty{get("c", 2.0), get("alpha", 2.0)};
        known.insert("c");
        known.insert("alpha");
    } else if (name == "multistaged") {
        MultiStagedPenalty ms;
        ms.level_thresholds = {0.5};
        ms.coefficients = {{5.0}, {50.0}};
        if (params != nullptr && params->contains("thresholds")) {
            const json& t = (*params)["thresholds"];
            if (!t.is_array() || t.empty()) fail("cht.thresholds", "expected a nonempty array");
            ms.level_thresholds.clear();
            for (const auto& v : t) {
                ms.level_thresholds.push_back(require_number(v, "cht.thresholds"));
            }
        }
        if (params != nullptr && params->contains("coefficients")) {
            ms.coefficients = coefficient_rows((*params)["coefficients"], "cht.coefficients");
        }
        for (auto& row : ms.coefficients) {
            if (row.size() != 1 && row.size() != static_cast<std::size_t>(n_constraints)) {
                fail("cht.coefficients",
                     "rows must hold one entry or one entry per constraint");
            }
        }
        strategy = std::move(ms);
        known.insert("thresholds");
        known.insert("coefficients");
    } else if (name == "selfadaptive") {
        strategy = SelfAdaptivePenalty{};
    } else if (name == "threestage") {
        ThreeStagePenalty ts;
        ts.t1 = static_cast<int>(get("t1", 25));
        ts.t2 = static_cast<int>(get("t2", 50));
        ts.p1 = get("p1", 0.0);
        ts.p2 = get("p2", 10.0);
        ts.p3 = get("p3", 1000.0);
        strategy = ts;
        known.insert("t1");
        known.insert("t2");
        known.insert("p1");
        known.insert("p2");
        known.insert("p3");
    } else {
        throw std::invalid_argument("config error at 'cht': unknown CHT '" + name + "'");
    }
    if (params != nullptr) {
        reject_unknown_keys(*params, known, "cht.");
    }
    validate(strategy);
    return strategy;
}

std::vector<std::string> cht_names() {
    return {"none",         "static",      "static-low", "static-high",
            "multistaged",  "dynamic",     "dynamic-slow", "dynamic-fast",
            "selfadaptive", "threestage"};
}

namespace {

// Largest lattice resolution whose weight count does not exceed the
// requested population.
int lattice_for_population(int n_obj, int population) {
    if (population < n_obj) {
        throw std::invalid_argument(
            "config error at 'population': too small for the objective count");
    }
    int h = 1;
    while (weight_count(n_obj, h + 1) <= static_cast<std::size_t>(population)) {
        ++h;
    }
    return h;
}

} // namespace

ExperimentConfig config_from_json(const json& doc) {
    if (!doc.is_object()) {
        throw std::invalid_argument("config error at '$': expected a JSON object");
    }
    const std::set<std::string> known{
        "problem", "cht",  "population",   "lattice_h",     "neighborhood_size",
        "delta",   "nr",   "eta_crossover", "eta_mutation", "crossover_prob",
        "mutation_prob",   "budget",        "repetitions",  "seed",
        "output_dir"};
    reject_unknown_keys(doc, known, "");

    ExperimentConfig config;
    if (!doc.contains("problem") || !doc["problem"].is_string()) {
        fail("problem", "required string");
    }
    config.problem_name = doc["problem"].get<std::string>();
    ProblemDefinition problem;
    try {
        problem = problem_by_name(config.problem_name);
    } catch (const std::invalid_argument& e) {
        fail("problem", e.what());
    }

    if (!doc.contains("cht")) {
        fail("cht", "required (string name or object with a 'name' field)");
    }
    const json& cht = doc["cht"];
    if (cht.is_string()) {
        config.cht_label = cht.get<std::string>();
        config.strategy = cht_by_name(config.cht_label, nullptr, problem.n_con);
    } else if (cht.is_object() && cht.contains("name") && cht["name"].is_string()) {
        config.cht_label = cht["name"].get<std::string>();
        config.strategy = cht_by_name(config.cht_label, &cht, problem.n_con);
    } else {
        fail("cht", "expected a string name or an object with a 'name' field");
    }

    if (doc.contains("lattice_h")) {
        config.moead.lattice_h = static_cast<int>(require_integer(doc["lattice_h"], "lattice_h"));
    } else {
        const int population = doc.contains("population")
                                   ? static_cast<int>(require_integer(doc["population"], "population"))
                                   : 100;
        config.moead.lattice_h = lattice_for_population(problem.n_obj, population);
    }
    if (doc.contains("neighborhood_size")) {
        config.moead.neighborhood_size =
            static_cast<int>(require_integer(doc["neighborhood_size"], "neighborhood_size"));
    }
    if (doc.contains("delta")) {
        config.moead.delta = require_number(doc["delta"], "delta");
    }
    if (doc.contains("nr")) {
        config.moead.max_replacements = static_cast<int>(require_integer(doc["nr"], "nr"));
    }
    if (doc.contains("eta_crossover")) {
        config.moead.eta_crossover = require_number(doc["eta_crossover"], "eta_crossover");
    }
    if (doc.contains("eta_mutation")) {
        config.moead.eta_mutation = require_number(doc["eta_mutation"], "eta_mutation");
    }
    if (doc.contains("crossover_prob")) {
        config.moead.crossover_prob = require_number(doc["crossover_prob"], "crossover_prob");
    }
    if (doc.contains("mutation_prob")) {
        config.moead.mutation_prob = require_number(doc["mutation_prob"], "mutation_prob");
    }
    if (doc.contains("budget")) {
        config.moead.budget = require_integer(doc["budget"], "budget");
    }
    if (doc.contains("repetitions")) {
        config.repetitions = static_cast<int>(require_integer(doc["repetitions"], "repetitions"));
        if (config.repetitions < 1) fail("repetitions", "must be >= 1");
    }
    if (doc.contains("seed")) {
        const long long s = require_integer(doc["seed"], "seed");
        if (s < 0) fail("seed", "must be >= 0");
        config.base_seed = static_cast<std::uint64_t>(s);
    }
    if (doc.contains("output_dir")) {
        if (!doc["output_dir"].is_string()) fail("output_dir", "expected a string");
        config.output_dir = doc["output_dir"].get<std::string>();
    }

    try {
        validate_params(problem, config.moead);
    } catch (const std::invalid_argument& e) {
        fail("(moead parameters)", e.what());
    }
    return config;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open config file: " + path.string());
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("config parse failure in " + path.string() + ": " + e.what());
    }
    return config_from_json(doc);
}

nlohmann::json resolved_json(const ExperimentConfig& config) {
    json cht = json::object();
    cht["name"] = config.cht_label;
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, StaticPenalty>) {
                cht["beta"] = s.beta;
            } else if constexpr (std::is_same_v<T, MultiStagedPenalty>) {
                cht["thresholds"] = s.level_thresholds;
                cht["coefficients"] = s.coefficients;
            } else if constexpr (std::is_same_v<T, DynamicPenalty>) {
                cht["c"] = s.c;
                cht["alpha"] = s.alpha;
            } else if constexpr (std::is_same_v<T, ThreeStagePenalty>) {
                cht["t1"] = s.t1;
                cht["t2"] = s.t2;
                cht["p1"] = s.p1;
                cht["p2"] = s.p2;
                cht["p3"] = s.p3;
            }
        },
        config.strategy);

    const std::size_t population =
        weight_count(problem_by_name(config.problem_name).n_obj, config.moead.lattice_h);
    return json{{"problem", config.problem_name},
                {"cht", cht},
                {"lattice_h", config.moead.lattice_h},
                {"population", population},
                {"neighborhood_size", config.moead.neighborhood_size},
                {"delta", config.moead.delta},
                {"nr", config.moead.max_replacements},
                {"eta_crossover", config.moead.eta_crossover},
                {"eta_mutation", config.moead.eta_mutation},
                {"crossover_prob", config.moead.crossover_prob},
                {"mutation_prob", config.moead.mutation_prob},
                {"budget", config.moead.budget},
                {"repetitions", config.repetitions},
                {"seed", config.base_seed},
                {"output_dir", config.output_dir},
                {"version", kVersionTag}};
}

} // namespace moeadcht
