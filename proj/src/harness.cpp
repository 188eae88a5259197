// SPDX-License-Identifier: Apache-2.0
#include "jamsim/harness.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "jamsim/allocator.hpp"
#include "jamsim/parallel.hpp"
#include "jamsim/units.hpp"

namespace jamsim {

const char* to_string(Baseline b) {
    switch (b) {
        case Baseline::no_jammer: return "no-jammer";
        case Baseline::no_protection: return "no-protection";
        case Baseline::full_knowledge: return "full-knowledge";
        case Baseline::sensing_assisted: return "sensing-assisted";
    }
    return "?";
}

Baseline baseline_from_string(const std::string& name) {
    if (name == "no-jammer") return Baseline::no_jammer;
    if (name == "no-protection") return Baseline::no_protection;
    if (name == "full-knowledge") return Baseline::full_knowledge;
    if (name == "sensing-assisted") return Baseline::sensing_assisted;
    throw std::invalid_argument("unknown baseline '" + name + "'");
}

namespace {

void throw_on_issues(const std::vector<std::string>& issues, const char* what) {
    if (issues.empty()) return;
    std::ostringstream msg;
    msg << what << ":";
    for (const auto& s : issues) msg << "\n  - " << s;
    throw std::runtime_error(msg.str());
}

}  // namespace

RateReport run_scenario(const SystemConfig& base_cfg, Baseline baseline,
                        JammerStrategy::Kind jammer_kind, std::uint64_t seed,
                        ScenarioArtifacts* artifacts) {
    throw_on_issues(validate_config(base_cfg), "run_scenario: invalid config");
    if (baseline == Baseline::no_jammer &&
        jammer_kind != JammerStrategy::Kind::none) {
        throw std::invalid_argument(
            "run_scenario: the no-jammer baseline requires jammer kind 'none'");
    }

    SystemConfig cfg = base_cfg;
    cfg.seed = seed;

    const ScenarioGeometry geometry =
        generate_scenario_geometry(cfg, cfg.jammer_doa_deg);
    const ChannelSet channels = build_channels(geometry, cfg);
    const ResourcePartition partition = build_resource_partition(cfg);

    // Transmit design against the covariance model the parties believe in.
    // FullKnowledge starts from the surrogate design too: the jammer commits
    // against those parameters before the re-optimization sees the truth.
    const double design_eta = (baseline == Baseline::sensing_assisted ||
                               baseline == Baseline::full_knowledge)
                                  ? cfg.resilience_eta
                                  : 0.0;
    const SurrogateCovariance surrogate = surrogate_covariance(
        channels.jammer_doas_rad(), design_eta, cfg.noise_power_mw, cfg.rx_antennas);
    CovarianceGrid design = uniform_covariance_grid(surrogate.matrix, cfg.grid_size());

    AllocateResult designed = iterative_allocate(channels, design, cfg, partition);
    throw_on_issues(validate_allocation(designed.allocation, partition, cfg),
                    "run_scenario: transmit design violates constraints");

    // The adversary responds to the committed design.
    JammerStrategy strategy;
    switch (jammer_kind) {
        case JammerStrategy::Kind::none:
            strategy = no_jammer_strategy(cfg.jammer_power_mw);
            break;
        case JammerStrategy::Kind::worst_case:
            strategy = worst_case_strategy(channels, designed.allocation,
                                           cfg.jammer_power_mw);
            break;
        case JammerStrategy::Kind::barrage:
            strategy = barrage_strategy(cfg);
            break;
    }
    const CovarianceGrid realized =
        realized_covariance_grid(strategy, channels, cfg.noise_power_mw);

    // Full knowledge re-optimizes against the realized covariance; the
    // jammer's response is not recomputed (one round).
    if (baseline == Baseline::full_knowledge) {
        designed = iterative_allocate(channels, realized, cfg, partition);
        throw_on_issues(validate_allocation(designed.allocation, partition, cfg),
                        "run_scenario: full-knowledge design violates constraints");
        design = realized;
    }

    RateReport report;
    report.baseline = to_string(baseline);
    report.jammer_kind = to_string(jammer_kind);
    report.seed = seed;
    report.allocator_converged = designed.converged;
    report.allocator_iterations = designed.rounds;
    report.sum_rate_bits = sum_rate(designed.allocation, channels, realized);
    report.user_sum_rate_bits =
        user_sum_rate(designed.allocation, channels, realized, design,
                      &report.post_eq_sinr);
    if (artifacts != nullptr) {
        artifacts->allocation = std::move(designed.allocation);
        artifacts->strategy = std::move(strategy);
    }
    return report;
}

std::vector<std::pair<Baseline, JammerStrategy::Kind>>
SweepSpec::default_baseline_set() {
    using K = JammerStrategy::Kind;
    return {
        {Baseline::no_jammer, K::none},
        {Baseline::no_protection, K::worst_case},
        {Baseline::no_protection, K::barrage},
        {Baseline::full_knowledge, K::worst_case},
        {Baseline::sensing_assisted, K::worst_case},
        {Baseline::sensing_assisted, K::barrage},
    };
}

SweepSpec::Axis axis_from_string(const std::string& name) {
    if (name == "nj") return SweepSpec::Axis::jammer_antennas;
    if (name == "pj") return SweepSpec::Axis::jammer_power_dbm;
    if (name == "doa") return SweepSpec::Axis::jammer_doa_deg;
    if (name == "users") return SweepSpec::Axis::users;
    throw std::invalid_argument("unknown sweep axis '" + name + "'");
}

const char* to_string(SweepSpec::Axis axis) {
    switch (axis) {
        case SweepSpec::Axis::jammer_antennas: return "nj";
        case SweepSpec::Axis::jammer_power_dbm: return "pj";
        case SweepSpec::Axis::jammer_doa_deg: return "doa";
        case SweepSpec::Axis::users: return "users";
    }
    return "?";
}

namespace {

SystemConfig apply_axis(const SystemConfig& base, SweepSpec::Axis axis, double value) {
    SystemConfig cfg = base;
    switch (axis) {
        case SweepSpec::Axis::jammer_antennas:
            cfg.jammer_antennas = static_cast<int>(std::lround(value));
            break;
        case SweepSpec::Axis::jammer_power_dbm:
            cfg.jammer_power_mw = dbm_to_mw(value);
            break;
        case SweepSpec::Axis::jammer_doa_deg:
            cfg.jammer_doa_deg = value;
            break;
        case SweepSpec::Axis::users:
            cfg.num_users = static_cast<int>(std::lround(value));
            break;
    }
    return cfg;
}

}  // namespace

SweepTable run_sweep(const SweepSpec& spec, const SystemConfig& base_cfg) {
    if (spec.values.empty()) {
        throw std::invalid_argument("run_sweep: value list is empty");
    }
    if (spec.trials < 1) {
        throw std::invalid_argument("run_sweep: trials must be >= 1");
    }
    if (spec.baselines.empty()) {
        throw std::invalid_argument("run_sweep: baseline filter is empty");
    }

    SweepTable table;
    table.spec = spec;
    const std::size_t total =
        spec.values.size() * spec.baselines.size() * static_cast<std::size_t>(spec.trials);
    table.rows.resize(total);

    parallel_for(total, [&](std::size_t i) {
        const std::size_t per_value = spec.baselines.size() * spec.trials;
        const std::size_t vi = i / per_value;
        const std::size_t bi = (i % per_value) / spec.trials;
        const int trial = static_cast<int>(i % spec.trials);

        SweepRow& row = table.rows[i];
        row.axis = spec.axis;
        row.value = spec.values[vi];
        row.baseline = spec.baselines[bi].first;
        row.jammer_kind = spec.baselines[bi].second;
        row.trial = trial;
        row.seed = spec.base_seed + static_cast<std::uint64_t>(trial);
        try {
            const SystemConfig cfg = apply_axis(base_cfg, spec.axis, row.value);
            const RateReport report =
                run_scenario(cfg, row.baseline, row.jammer_kind, row.seed);
            row.sum_rate_bits = report.sum_rate_bits;
            row.user_sum_rate_bits = report.user_sum_rate_bits;
        } catch (const std::exception& e) {
            row.error = e.what();
            row.sum_rate_bits = std::nan("");
            row.user_sum_rate_bits = std::nan("");
            std::cerr << "jamsim: sweep trial failed (" << to_string(row.baseline)
                      << ", value " << row.value << ", seed " << row.seed
                      << "): " << e.what() << "\n";
        }
    });

    // Per-point aggregation over successful trials.
    for (std::size_t vi = 0; vi < spec.values.size(); ++vi) {
        for (std::size_t bi = 0; bi < spec.baselines.size(); ++bi) {
            SweepSummary s;
            s.value = spec.values[vi];
            s.baseline = spec.baselines[bi].first;
            s.jammer_kind = spec.baselines[bi].second;
            double sum = 0.0, sum_sq = 0.0;
            for (int t = 0; t < spec.trials; ++t) {
                const std::size_t i =
                    (vi * spec.baselines.size() + bi) * spec.trials + t;
                const SweepRow& row = table.rows[i];
                if (row.error) continue;
                ++s.trials_ok;
                sum += row.user_sum_rate_bits;
                sum_sq += row.user_sum_rate_bits * row.user_sum_rate_bits;
            }
            if (s.trials_ok > 0) {
                s.mean_user_rate_bits = sum / s.trials_ok;
                const double var =
                    std::max(0.0, sum_sq / s.trials_ok -
                                      s.mean_user_rate_bits * s.mean_user_rate_bits);
                s.stddev_user_rate_bits = std::sqrt(var);
            }
            table.summaries.push_back(s);
        }
    }
    return table;
}

void emit_results(const SweepTable& table, const std::string& path) {
    if (table.rows.empty()) {
        throw std::invalid_argument("emit_results: empty table");
    }
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("emit_results: cannot open '" + path + "'");
    }
    out << "sweep_axis,sweep_value,baseline,jammer_kind,trial,seed,RA_bits,RB_bits\n";
    char buf[256];
    for (const auto& row : table.rows) {
        std::snprintf(buf, sizeof buf, "%s,%.17g,%s,%s,%d,%llu,%.17g,%.17g\n",
                      to_string(row.axis), row.value, to_string(row.baseline),
                      to_string(row.jammer_kind), row.trial,
                      static_cast<unsigned long long>(row.seed),
                      row.sum_rate_bits, row.user_sum_rate_bits);
        out << buf;
    }
    if (!out) {
        throw std::runtime_error("emit_results: write failed for '" + path + "'");
    }
}

std::vector<SweepRow> parse_results(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("parse_results: cannot open '" + path + "'");
    }
    std::string line;
    if (!std::getline(in, line) ||
        line != "sweep_axis,sweep_value,baseline,jammer_kind,trial,seed,RA_bits,RB_bits") {
        throw std::runtime_error("parse_results: bad header in '" + path + "'");
    }
    std::vector<SweepRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (fields.size() != 8) {
            throw std::runtime_error("parse_results: malformed row in '" + path + "'");
        }
        SweepRow row;
        row.axis = axis_from_string(fields[0]);
        row.value = std::strtod(fields[1].c_str(), nullptr);
        row.baseline = baseline_from_string(fields[2]);
        row.jammer_kind = jammer_kind_from_string(fields[3]);
        row.trial = std::stoi(fields[4]);
        row.seed = std::stoull(fields[5]);
        row.sum_rate_bits = std::strtod(fields[6].c_str(), nullptr);
        row.user_sum_rate_bits = std::strtod(fields[7].c_str(), nullptr);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace jamsim
