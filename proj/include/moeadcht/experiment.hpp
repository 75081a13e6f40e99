#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "moeadcht/config.hpp"
#include "moeadcht/metrics.hpp"
#include "moeadcht/moead.hpp"

namespace moeadcht {

/// Identification record persisted next to every run's outputs.
struct RunManifest {
    std::string manifest_hash;
    std::uint64_t seed = 0;
    std::string version;
    double duration_seconds = 0.0;
    bool complete = false;
};

struct RunArtifacts {
    RunManifest manifest;
    RunResult result;
};

/// Executes repetitions seeds base_seed..base_seed+R-1 and persists one
/// trace CSV, final-population CSV and manifest JSON per run under
/// output_dir/<problem>__<cht>/. Returns the in-memory results in seed
/// order. On I/O failure, partial outputs stay on disk and an INCOMPLETE
/// marker is written before the error propagates.
std::vector<RunArtifacts> run_experiment(const ExperimentConfig& config);

/// Per-group final statistics for the summary table.
struct SummaryRow {
    std::string problem;
    std::string cht;
    int runs = 0;
    double hv_mean = 0, hv_median = 0, hv_sd = 0;
    double feas_mean = 0, feas_median = 0, feas_sd = 0;
    bool has_p = false;
    double p_vs_none = 0; // one-sided rank-sum against the "none" group
};

/// Final trace row of each run in a (problem x cht) group.
struct GroupResult {
    std::string problem;
    std::string cht;
    std::vector<double> final_hv;   // one per seed
    std::vector<double> final_feas; // one per seed
};

/// Mean/median/sd per group plus the optional rank-sum column against the
/// "none" control of the same problem. Errors on empty input.
std::vector<SummaryRow> emit_summary(const std::vector<GroupResult>& groups);

/// Formats the summary table as CSV (fixed column order, 12 significant
/// digits).
std::string summary_csv(const std::vector<SummaryRow>& rows, const std::string& hash);

/// Writes the per-generation median/IQR aggregation across the seeds of one
/// group: the data behind anytime plots.
std::string aggregate_anytime_csv(const std::vector<RunArtifacts>& runs,
                                  const std::string& hash);

/// Trace CSV payload for one run (header, one row per generation, plus a
/// running best-so-far hypervolume column).
std::string trace_csv(const RunResult& result, const std::string& hash);

/// Final population CSV payload for one run.
std::string final_population_csv(const ProblemDefinition& problem,
                                 const std::vector<Solution>& population,
                                 const std::string& hash);

/// Scans a results directory for run manifests + traces and rebuilds the
/// group results (for the summarize command).
std::vector<GroupResult> collect_groups(const std::filesystem::path& results_dir);

/// Re-emits summary.csv from persisted run outputs.
void summarize_directory(const std::filesystem::path& results_dir,
                         const std::filesystem::path& output_file);

/// One-sided rank-sum test: probability of seeing a rank sum at least as
/// large as sample's under a random split, against the alternative
/// sample > control. Exact permutation enumeration when n+m <= 22, normal
/// approximation with tie correction otherwise.
double rank_sum_p_greater(const std::vector<double>& sample,
                          const std::vector<double>& control);

/// 12-significant-digit, locale-independent number formatting used for all
/// CSV payloads.
std::string format_number(double value);

} // namespace moeadcht
