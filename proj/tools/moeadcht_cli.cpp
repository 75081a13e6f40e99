#include <cstdint>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "moeadcht/config.hpp"
#include "moeadcht/experiment.hpp"
#include "moeadcht/problems.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Decomposition-based multi-objective optimizer with pluggable "
                 "constraint handling"};
    app.require_subcommand(1);

    std::string config_path;
    std::string results_dir;
    std::string summary_out = "summary.csv";
    std::int64_t seed_override = -1;
    int reps_override = -1;
    std::int64_t budget_override = -1;
    std::string output_override;

    CLI::App* run_cmd = app.add_subcommand("run", "execute the experiment in a config file");
    run_cmd->add_option("config", config_path, "path to a JSON config")->required();
    run_cmd->add_option("--seed", seed_override, "override the base seed");
    run_cmd->add_option("--reps", reps_override, "override the repetition count");
    run_cmd->add_option("--budget", budget_override, "override the evaluation budget");
    run_cmd->add_option("--output", output_override, "override the output directory");

    CLI::App* summarize_cmd =
        app.add_subcommand("summarize", "rebuild the summary table from run outputs");
    summarize_cmd->add_option("results", results_dir, "results directory")->required();
    summarize_cmd->add_option("--output", summary_out, "summary CSV path");

    CLI::App* list_problems = app.add_subcommand("list-problems", "print the problem registry");
    CLI::App* list_chts = app.add_subcommand("list-chts", "print the CHT registry");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) {
            moeadcht::ExperimentConfig config = moeadcht::load_config(config_path);
            if (seed_override >= 0) {
                config.base_seed = static_cast<std::uint64_t>(seed_override);
            }
            if (reps_override > 0) {
                config.repetitions = reps_override;
            }
            if (budget_override > 0) {
                config.moead.budget = budget_override;
            }
            if (!output_override.empty()) {
                config.output_dir = output_override;
            }
            const auto artifacts = moeadcht::run_experiment(config);
            std::cout << config.problem_name << " x " << config.cht_label << ": "
                      << artifacts.size() << " run(s) written to " << config.output_dir
                      << "\n";
            for (const auto& a : artifacts) {
                std::cout << "  seed " << a.manifest.seed << ": final hv "
                          << moeadcht::format_number(a.result.trace.back().hypervolume)
                          << ", feasibility "
                          << moeadcht::format_number(a.result.trace.back().feasibility)
                          << "\n";
            }
        } else if (summarize_cmd->parsed()) {
            moeadcht::summarize_directory(results_dir, summary_out);
            std::cout << "summary written to " << summary_out << "\n";
        } else if (list_problems->parsed()) {
            for (const auto& name : moeadcht::problem_names()) {
                const auto p = moeadcht::problem_by_name(name);
                std::cout << name << ": " << p.n_obj << " objectives, " << p.n_var
                          << " variables, " << p.n_con << " constraints\n";
            }
        } else if (list_chts->parsed()) {
            for (const auto& name : moeadcht::cht_names()) {
                std::cout << name << "\n";
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
