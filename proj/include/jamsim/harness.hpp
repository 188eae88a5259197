// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jamsim/config.hpp"
#include "jamsim/jammer.hpp"
#include "jamsim/rates.hpp"

namespace jamsim {

// The four evaluation modes. NoJammer and NoProtection design against the
// eta = 0 surrogate; SensingAssisted against the DoA surrogate;
// FullKnowledge re-optimizes once against the realized covariance after the
// jammer has committed.
enum class Baseline {
    no_jammer,
    no_protection,
    full_knowledge,
    sensing_assisted,
};

const char* to_string(Baseline b);
Baseline baseline_from_string(const std::string& name);

// Optional taps into the pipeline for diagnostics dumps.
struct ScenarioArtifacts {
    Allocation allocation;
    JammerStrategy strategy;
};

// End-to-end single scenario: geometry + channels from the seed, transmit
// design, jammer response to that design, rate evaluation under the realized
// covariance. Deterministic in (cfg, baseline, jammer kind, seed).
RateReport run_scenario(const SystemConfig& cfg, Baseline baseline,
                        JammerStrategy::Kind jammer_kind, std::uint64_t seed,
                        ScenarioArtifacts* artifacts = nullptr);

struct SweepSpec {
    enum class Axis { jammer_antennas, jammer_power_dbm, jammer_doa_deg, users };

    Axis axis = Axis::jammer_antennas;
    std::vector<double> values;
    int trials = 20;
    std::uint64_t base_seed = 1;
    // Baseline/jammer pairs to run per sweep point; defaults to the full
    // comparison set.
    std::vector<std::pair<Baseline, JammerStrategy::Kind>> baselines =
        default_baseline_set();

    static std::vector<std::pair<Baseline, JammerStrategy::Kind>> default_baseline_set();
};

SweepSpec::Axis axis_from_string(const std::string& name);
const char* to_string(SweepSpec::Axis axis);

struct SweepRow {
    SweepSpec::Axis axis;
    double value = 0.0;
    Baseline baseline;
    JammerStrategy::Kind jammer_kind;
    int trial = 0;
    std::uint64_t seed = 0;
    double sum_rate_bits = 0.0;       // R^A
    double user_sum_rate_bits = 0.0;  // R^B
    std::optional<std::string> error;
};

struct SweepSummary {
    double value = 0.0;
    Baseline baseline;
    JammerStrategy::Kind jammer_kind;
    int trials_ok = 0;
    double mean_user_rate_bits = 0.0;
    double stddev_user_rate_bits = 0.0;
};

struct SweepTable {
    SweepSpec spec;
    std::vector<SweepRow> rows;
    std::vector<SweepSummary> summaries;
};

// Cartesian product of values x baselines x trials (seed = base + trial).
// Failed trials are recorded as NaN rows with the error message kept; they
// never abort the sweep.
SweepTable run_sweep(const SweepSpec& spec, const SystemConfig& base_cfg);

// CSV emission with the fixed header
// sweep_axis,sweep_value,baseline,jammer_kind,trial,seed,RA_bits,RB_bits
// and deterministic row order. Throws with path context on I/O failure.
void emit_results(const SweepTable& table, const std::string& path);

// Reads rows written by emit_results (round-trip check support).
std::vector<SweepRow> parse_results(const std::string& path);

}  // namespace jamsim
