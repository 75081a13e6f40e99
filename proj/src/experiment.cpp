#include "moeadcht/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace moeadcht {

using nlohmann::json;

std::string format_number(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

namespace {

double median_of(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1) {
        return values[n / 2];
    }
    return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

// Linear-interpolation quantile on sorted data.
double quantile_sorted(const std::vector<double>& sorted, double q) {
    if (sorted.size() == 1) {
        return sorted.front();
    }
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

double sample_sd(const std::vector<double>& values, double mean) {
    if (values.size() < 2) {
        return 0.0;
    }
    double sum = 0.0;
    for (double v : values) {
        sum += (v - mean) * (v - mean);
    }
    return std::sqrt(sum / static_cast<double>(values.size() - 1));
}

std::vector<double> average_ranks(const std::vector<double>& pooled_sorted,
                                  const std::vector<double>& values) {
    std::vector<double> ranks;
    ranks.reserve(values.size());
    for (double v : values) {
        const auto lo = std::lower_bound(pooled_sorted.begin(), pooled_sorted.end(), v);
        const auto hi = std::upper_bound(pooled_sorted.begin(), pooled_sorted.end(), v);
        const double first = static_cast<double>(lo - pooled_sorted.begin()) + 1.0;
        const double last = static_cast<double>(hi - pooled_sorted.begin());
        ranks.push_back(0.5 * (first + last));
    }
    return ranks;
}

} // namespace

double rank_sum_p_greater(const std::vector<double>& sample,
                          const std::vector<double>& control) {
    if (sample.empty() || control.empty()) {
        throw std::invalid_argument("rank_sum_p_greater: empty group");
    }
    std::vector<double> pooled = sample;
    pooled.insert(pooled.end(), control.begin(), control.end());
    std::vector<double> pooled_sorted = pooled;
    std::sort(pooled_sorted.begin(), pooled_sorted.end());
    const std::vector<double> ranks = average_ranks(pooled_sorted, pooled);

    const std::size_t n = sample.size();
    const std::size_t total = pooled.size();
    const double observed = std::accumulate(ranks.begin(), ranks.begin() + n, 0.0);

    if (total <= 22) {
        // exact permutation: enumerate every assignment of n labels
        std::vector<char> pick(total, 0);
        std::fill(pick.begin(), pick.begin() + n, 1);
        std::sort(pick.begin(), pick.end()); // lowest permutation first
        long long at_least = 0;
        long long count = 0;
        do {
            double stat = 0.0;
            for (std::size_t i = 0; i < total; ++i) {
                if (pick[i]) {
                    stat += ranks[i];
                }
            }
            if (stat >= observed - 1e-9) {
                ++at_least;
            }
            ++count;
        } while (std::next_permutation(pick.begin(), pick.end()));
        return static_cast<double>(at_least) / static_cast<double>(count);
    }

    // normal approximation with tie correction
    const double m = static_cast<double>(control.size());
    const double nn = static_cast<double>(n);
    const double N = nn + m;
    const double mean = nn * (N + 1.0) / 2.0;
    double tie_term = 0.0;
    for (std::size_t i = 0; i < pooled_sorted.size();) {
        std::size_t j = i;
        while (j < pooled_sorted.size() && pooled_sorted[j] == pooled_sorted[i]) {
            ++j;
        }
        const double t = static_cast<double>(j - i);
        tie_term += t * t * t - t;
        i = j;
    }
    const double variance = nn * m / 12.0 * ((N + 1.0) - tie_term / (N * (N - 1.0)));
    if (variance <= 0.0) {
        return 0.5;
    }
    const double z = (observed - mean) / std::sqrt(variance);
    return 0.5 * std::erfc(z / std::sqrt(2.0));
}

std::string trace_csv(const RunResult& result, const std::string& hash) {
    std::ostringstream out;
    out << "# manifest_hash=" << hash << "\n";
    out << "generation,evaluations,hypervolume,best_hypervolume,feasibility_ratio\n";
    double best = 0.0;
    for (const TraceRecord& r : result.trace) {
        best = std::max(best, r.hypervolume);
        out << r.generation << ',' << r.evaluations << ','
            << format_number(r.hypervolume) << ',' << format_number(best) << ','
            << format_number(r.feasibility) << "\n";
    }
    return out.str();
}

std::string final_population_csv(const ProblemDefinition& problem,
                                 const std::vector<Solution>& population,
                                 const std::string& hash) {
    std::ostringstream out;
    out << "# manifest_hash=" << hash << "\n";
    for (int v = 0; v < problem.n_var; ++v) out << "x" << v << ',';
    for (int j = 0; j < problem.n_obj; ++j) out << "f" << j << ',';
    for (int c = 0; c < problem.n_con; ++c) out << "g" << c << ',';
    out << "violation\n";
    for (const Solution& s : population) {
        for (double x : s.decision) out << format_number(x) << ',';
        for (double f : s.objectives) out << format_number(f) << ',';
        for (double g : s.constraints) out << format_number(g) << ',';
        out << format_number(s.violation) << "\n";
    }
    return out.str();
}

std::string aggregate_anytime_csv(const std::vector<RunArtifacts>& runs,
                                  const std::string& hash) {
    if (runs.empty()) {
        throw std::invalid_argument("aggregate_anytime_csv: no runs");
    }
    std::size_t generations = runs.front().result.trace.size();
    for (const RunArtifacts& r : runs) {
        generations = std::min(generations, r.result.trace.size());
    }
    std::ostringstream out;
    out << "# manifest_hash=" << hash << "\n";
    out << "generation,evaluations,hv_median,hv_q1,hv_q3,feasibility_median\n";
    for (std::size_t g = 0; g < generations; ++g) {
        std::vector<double> hv;
        std::vector<double> feas;
        for (const RunArtifacts& r : runs) {
            hv.push_back(r.result.trace[g].hypervolume);
            feas.push_back(r.result.trace[g].feasibility);
        }
        std::vector<double> hv_sorted = hv;
        std::sort(hv_sorted.begin(), hv_sorted.end());
        out << runs.front().result.trace[g].generation << ','
            << runs.front().result.trace[g].evaluations << ','
            << format_number(median_of(hv)) << ','
            << format_number(quantile_sorted(hv_sorted, 0.25)) << ','
            << format_number(quantile_sorted(hv_sorted, 0.75)) << ','
            << format_number(median_of(feas)) << "\n";
    }
    return out.str();
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& payload) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open for writing: " + path.string());
    }
    out << payload;
    if (!out) {
        throw std::runtime_error("write failed: " + path.string());
    }
}

} // namespace

std::vector<RunArtifacts> run_experiment(const ExperimentConfig& config) {
    const ProblemDefinition problem = config.problem();
    const json resolved = resolved_json(config);
    // the hash identifies the run's substance; where it lands is not part of it
    json hashed = resolved;
    hashed.erase("output_dir");
    const std::filesystem::path group_dir =
        std::filesystem::path(config.output_dir) /
        (config.problem_name + "__" + config.cht_label);
    std::filesystem::create_directories(group_dir);

    std::vector<RunArtifacts> artifacts;
    try {
        for (int rep = 0; rep < config.repetitions; ++rep) {
            const std::uint64_t seed = config.base_seed + static_cast<std::uint64_t>(rep);
            const std::string hash =
                fnv1a_hex(hashed.dump() + ":seed=" + std::to_string(seed));

            const auto started = std::chrono::steady_clock::now();
            RunResult result = run(problem, config.strategy, config.moead, seed);
            const std::chrono::duration<double> elapsed =
                std::chrono::steady_clock::now() - started;

            RunManifest manifest;
            manifest.manifest_hash = hash;
            manifest.seed = seed;
            manifest.version = kVersionTag;
            manifest.duration_seconds = elapsed.count();
            manifest.complete = true;

            const std::string stem = "run_seed" + std::to_string(seed);
            write_file(group_dir / (stem + ".csv"), trace_csv(result, hash));
            write_file(group_dir / (stem + "_final.csv"),
                       final_population_csv(problem, result.population, hash));

            json mj{{"manifest_hash", manifest.manifest_hash},
                    {"seed", manifest.seed},
                    {"version", manifest.version},
                    {"duration_seconds", manifest.duration_seconds},
                    {"evaluations", result.evaluations},
                    {"complete", manifest.complete},
                    {"config", resolved}};
            write_file(group_dir / (stem + "_manifest.json"), mj.dump(2) + "\n");

            artifacts.push_back({std::move(manifest), std::move(result)});
        }

        const std::string group_hash = fnv1a_hex(hashed.dump());
        write_file(group_dir / "anytime_aggregate.csv",
                   aggregate_anytime_csv(artifacts, group_hash));

        GroupResult group{config.problem_name, config.cht_label, {}, {}};
        for (const RunArtifacts& r : artifacts) {
            group.final_hv.push_back(r.result.trace.back().hypervolume);
            group.final_feas.push_back(r.result.trace.back().feasibility);
        }
        write_file(group_dir / "summary.csv", summary_csv(emit_summary({group}), group_hash));
    } catch (const std::exception&) {
        // keep whatever made it to disk and flag the experiment
        std::ofstream marker(group_dir / "INCOMPLETE");
        marker << "experiment aborted before all runs were persisted\n";
        throw;
    }
    return artifacts;
}

std::vector<SummaryRow> emit_summary(const std::vector<GroupResult>& groups) {
    if (groups.empty()) {
        throw std::invalid_argument("emit_summary: no results");
    }
    std::map<std::string, const GroupResult*> controls;
    for (const GroupResult& g : groups) {
        if (g.cht == "none") {
            controls[g.problem] = &g;
        }
    }
    std::vector<SummaryRow> rows;
    for (const GroupResult& g : groups) {
        if (g.final_hv.empty()) {
            throw std::invalid_argument("emit_summary: group without runs");
        }
        SummaryRow row;
        row.problem = g.problem;
        row.cht = g.cht;
        row.runs = static_cast<int>(g.final_hv.size());
        row.hv_mean = std::accumulate(g.final_hv.begin(), g.final_hv.end(), 0.0) /
                      static_cast<double>(g.final_hv.size());
        row.hv_median = median_of(g.final_hv);
        row.hv_sd = sample_sd(g.final_hv, row.hv_mean);
        row.feas_mean = std::accumulate(g.final_feas.begin(), g.final_feas.end(), 0.0) /
                        static_cast<double>(g.final_feas.size());
        row.feas_median = median_of(g.final_feas);
        row.feas_sd = sample_sd(g.final_feas, row.feas_mean);
        const auto control = controls.find(g.problem);
        if (control != controls.end() && control->second != &g) {
            row.has_p = true;
            row.p_vs_none = rank_sum_p_greater(g.final_hv, control->second->final_hv);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string summary_csv(const std::vector<SummaryRow>& rows, const std::string& hash) {
    std::ostringstream out;
    out << "# manifest_hash=" << hash << "\n";
    out << "problem,cht,runs,hv_mean,hv_median,hv_sd,"
           "feasibility_mean,feasibility_median,feasibility_sd,p_vs_none\n";
    for (const SummaryRow& r : rows) {
        out << r.problem << ',' << r.cht << ',' << r.runs << ','
            << format_number(r.hv_mean) << ',' << format_number(r.hv_median) << ','
            << format_number(r.hv_sd) << ',' << format_number(r.feas_mean) << ','
            << format_number(r.feas_median) << ',' << format_number(r.feas_sd) << ',';
        if (r.has_p) {
            out << format_number(r.p_vs_none);
        }
        out << "\n";
    }
    return out.str();
}

namespace {

// Final hypervolume/feasibility from the last data row of a trace CSV.
std::pair<double, double> read_trace_final(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open trace: " + path.string());
    }
    std::string line;
    std::string last;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("generation", 0) == 0) {
            continue;
        }
        last = line;
    }
    if (last.empty()) {
        throw std::runtime_error("trace has no data rows: " + path.string());
    }
    std::vector<std::string> fields;
    std::stringstream ss(last);
    std::string field;
    while (std::getline(ss, field, ',')) {
        fields.push_back(field);
    }
    if (fields.size() != 5) {
        throw std::runtime_error("malformed trace row in " + path.string());
    }
    return {std::stod(fields[2]), std::stod(fields[4])};
}

} // namespace

std::vector<GroupResult> collect_groups(const std::filesystem::path& results_dir) {
    std::map<std::pair<std::string, std::string>, std::map<std::uint64_t, std::pair<double, double>>>
        grouped;
    for (const auto& entry : std::filesystem::recursive_directory_iterator(results_dir)) {
        if (!entry.is_regular_file()) {
            continue;
        }
        const std::string name = entry.path().filename().string();
        if (name.size() < 14 || name.substr(name.size() - 14) != "_manifest.json") {
            continue;
        }
        std::ifstream in(entry.path());
        json manifest = json::parse(in);
        const std::string problem = manifest["config"]["problem"].get<std::string>();
        const std::string cht = manifest["config"]["cht"]["name"].get<std::string>();
        const std::uint64_t seed = manifest["seed"].get<std::uint64_t>();
        const std::filesystem::path trace =
            entry.path().parent_path() / (name.substr(0, name.size() - 14) + ".csv");
        grouped[{problem, cht}][seed] = read_trace_final(trace);
    }
    std::vector<GroupResult> groups;
    for (const auto& [key, by_seed] : grouped) {
        GroupResult g{key.first, key.second, {}, {}};
        for (const auto& [seed, finals] : by_seed) {
            g.final_hv.push_back(finals.first);
            g.final_feas.push_back(finals.second);
        }
        groups.push_back(std::move(g));
    }
    return groups;
}

void summarize_directory(const std::filesystem::path& results_dir,
                         const std::filesystem::path& output_file) {
    const auto groups = collect_groups(results_dir);
    if (groups.empty()) {
        throw std::invalid_argument("no run manifests found under " + results_dir.string());
    }
    std::string digest;
    for (const GroupResult& g : groups) {
        digest += g.problem + "/" + g.cht + ";";
    }
    write_file(output_file, summary_csv(emit_summary(groups), fnv1a_hex(digest)));
}

} // namespace moeadcht
