// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: single scenario runs, Monte-Carlo sweeps over the
// jammer parameters, and config validation. Results go to CSV for external
// plotting; worker count comes from JAMSIM_WORKERS.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jamsim/harness.hpp"

namespace {

void print_summaries(const jamsim::SweepTable& table) {
    std::printf("%-8s %-10s %-18s %-12s %8s %14s %14s\n", "axis", "value",
                "baseline", "jammer", "trials", "mean_RB", "std_RB");
    for (const auto& s : table.summaries) {
        std::printf("%-8s %-10.4g %-18s %-12s %8d %14.2f %14.2f\n",
                    jamsim::to_string(table.spec.axis), s.value,
                    jamsim::to_string(s.baseline), jamsim::to_string(s.jammer_kind),
                    s.trials_ok, s.mean_user_rate_bits, s.stddev_user_rate_bits);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"MIMO-OFDM uplink simulator with sensing-assisted anti-jamming"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;

    auto* run = app.add_subcommand("run", "Run one scenario and report rates");
    std::string baseline_name = "sensing-assisted";
    std::string jammer_name = "worst-case";
    std::uint64_t seed = 1;
    run->add_option("--config", config_path,
                    "Config file or preset (desk-scale, paper-defaults)")
        ->required();
    std::string strategy_path;
    run->add_option("--baseline", baseline_name,
                    "no-jammer | no-protection | full-knowledge | sensing-assisted");
    run->add_option("--jammer", jammer_name, "worst-case | barrage | none");
    run->add_option("--seed", seed, "Scenario seed");
    run->add_option("--out", out_path, "Optional CSV output path");
    run->add_option("--dump-strategy", strategy_path,
                    "Write per-RE jammer trace/top-eigenvalue CSV");

    auto* sweep = app.add_subcommand("sweep", "Sweep one axis over seeds and baselines");
    std::string axis_name = "nj";
    std::vector<double> values;
    int trials = 20;
    std::uint64_t base_seed = 1;
    std::vector<std::string> baseline_filter;
    sweep->add_option("--config", config_path,
                      "Config file or preset (desk-scale, paper-defaults)")
        ->required();
    sweep->add_option("--axis", axis_name, "nj | pj | doa | users");
    sweep->add_option("--values", values, "Sweep values (comma separated)")
        ->required()
        ->delimiter(',');
    sweep->add_option("--trials", trials, "Seeds per sweep point");
    sweep->add_option("--seed", base_seed, "Base seed (trial i uses base + i)");
    sweep->add_option("--baselines", baseline_filter,
                      "Subset as baseline:jammer pairs, e.g. sensing-assisted:worst-case")
        ->delimiter(',');
    sweep->add_option("--out", out_path, "CSV output path")->required();

    auto* validate = app.add_subcommand("validate", "Check a config file");
    validate->add_option("--config", config_path, "Config file or preset")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(run)) {
            const auto cfg = jamsim::load_config(config_path);
            const auto baseline = jamsim::baseline_from_string(baseline_name);
            const auto kind = jamsim::jammer_kind_from_string(jammer_name);
            jamsim::ScenarioArtifacts artifacts;
            const auto report =
                jamsim::run_scenario(cfg, baseline, kind, seed,
                                     strategy_path.empty() ? nullptr : &artifacts);
            if (!strategy_path.empty()) {
                jamsim::dump_strategy_csv(artifacts.strategy, cfg.num_symbols,
                                          strategy_path);
                std::printf("wrote %s\n", strategy_path.c_str());
            }
            std::printf("baseline=%s jammer=%s seed=%llu\n", report.baseline.c_str(),
                        report.jammer_kind.c_str(),
                        static_cast<unsigned long long>(report.seed));
            std::printf("RA_bits=%.4f\nRB_bits=%.4f\n", report.sum_rate_bits,
                        report.user_sum_rate_bits);
            if (!report.allocator_converged) {
                std::fprintf(stderr, "warning: allocator stopped at the round cap\n");
            }
            if (!out_path.empty()) {
                jamsim::SweepTable table;
                table.spec.axis = jamsim::SweepSpec::Axis::jammer_antennas;
                table.spec.values = {static_cast<double>(cfg.jammer_antennas)};
                table.spec.trials = 1;
                table.spec.base_seed = seed;
                table.spec.baselines = {{baseline, kind}};
                jamsim::SweepRow row;
                row.axis = table.spec.axis;
                row.value = static_cast<double>(cfg.jammer_antennas);
                row.baseline = baseline;
                row.jammer_kind = kind;
                row.trial = 0;
                row.seed = seed;
                row.sum_rate_bits = report.sum_rate_bits;
                row.user_sum_rate_bits = report.user_sum_rate_bits;
                table.rows.push_back(row);
                jamsim::emit_results(table, out_path);
                std::printf("wrote %s\n", out_path.c_str());
            }
        } else if (app.got_subcommand(sweep)) {
            const auto cfg = jamsim::load_config(config_path);
            jamsim::SweepSpec spec;
            spec.axis = jamsim::axis_from_string(axis_name);
            spec.values = values;
            spec.trials = trials;
            spec.base_seed = base_seed;
            if (!baseline_filter.empty()) {
                spec.baselines.clear();
                for (const auto& item : baseline_filter) {
                    const auto colon = item.find(':');
                    if (colon == std::string::npos) {
                        throw std::invalid_argument(
                            "--baselines entries must look like baseline:jammer");
                    }
                    spec.baselines.emplace_back(
                        jamsim::baseline_from_string(item.substr(0, colon)),
                        jamsim::jammer_kind_from_string(item.substr(colon + 1)));
                }
            }
            const auto table = jamsim::run_sweep(spec, cfg);
            jamsim::emit_results(table, out_path);
            print_summaries(table);
            std::printf("wrote %s (%zu rows)\n", out_path.c_str(), table.rows.size());
        } else if (app.got_subcommand(validate)) {
            const auto cfg = jamsim::load_config(config_path);
            std::printf("configuration OK\n%s\n", jamsim::config_to_json(cfg).c_str());
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
