// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "jamsim/harness.hpp"

using namespace jamsim;

namespace {
SystemConfig quick_config() {
    SystemConfig cfg = desk_scale_config();
    cfg.num_subcarriers = 8;
    cfg.num_symbols = 2;
    return cfg;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}
}  // namespace

TEST_CASE("baseline and axis names round trip") {
    for (auto b : {Baseline::no_jammer, Baseline::no_protection,
                   Baseline::full_knowledge, Baseline::sensing_assisted}) {
        CHECK(baseline_from_string(to_string(b)) == b);
    }
    CHECK_THROWS(baseline_from_string("nope"));
    for (auto kind : {JammerStrategy::Kind::none, JammerStrategy::Kind::worst_case,
                      JammerStrategy::Kind::barrage}) {
        CHECK(jammer_kind_from_string(to_string(kind)) == kind);
    }
    for (auto axis : {SweepSpec::Axis::jammer_antennas, SweepSpec::Axis::jammer_power_dbm,
                      SweepSpec::Axis::jammer_doa_deg, SweepSpec::Axis::users}) {
        CHECK(axis_from_string(to_string(axis)) == axis);
    }
}

TEST_CASE("clean scenario carries positive rate") {
    const auto report = run_scenario(quick_config(), Baseline::no_jammer,
                                     JammerStrategy::Kind::none, 1);
    CHECK(report.user_sum_rate_bits > 0.0);
    CHECK(report.sum_rate_bits > 0.0);
    CHECK(report.allocator_converged);
    // Without jamming the two metrics coincide under disjoint scheduling.
    CHECK(report.user_sum_rate_bits ==
          doctest::Approx(report.sum_rate_bits).epsilon(1e-9));
}

TEST_CASE("scenario runs are deterministic in the seed") {
    const auto cfg = quick_config();
    const auto a = run_scenario(cfg, Baseline::sensing_assisted,
                                JammerStrategy::Kind::worst_case, 7);
    const auto b = run_scenario(cfg, Baseline::sensing_assisted,
                                JammerStrategy::Kind::worst_case, 7);
    CHECK(a.sum_rate_bits == b.sum_rate_bits);
    CHECK(a.user_sum_rate_bits == b.user_sum_rate_bits);
    REQUIRE(a.post_eq_sinr.size() == b.post_eq_sinr.size());
    for (std::size_t q = 0; q < a.post_eq_sinr.size(); ++q) {
        CHECK(a.post_eq_sinr[q] == b.post_eq_sinr[q]);
    }

    const auto c = run_scenario(cfg, Baseline::sensing_assisted,
                                JammerStrategy::Kind::worst_case, 8);
    CHECK(a.user_sum_rate_bits != c.user_sum_rate_bits);
}

TEST_CASE("jammer-free full knowledge equals the clean baseline bit for bit") {
    const auto cfg = quick_config();
    const auto clean = run_scenario(cfg, Baseline::no_jammer,
                                    JammerStrategy::Kind::none, 4);
    const auto informed = run_scenario(cfg, Baseline::full_knowledge,
                                       JammerStrategy::Kind::none, 4);
    CHECK(clean.sum_rate_bits == informed.sum_rate_bits);
    CHECK(clean.user_sum_rate_bits == informed.user_sum_rate_bits);
    CHECK(clean.post_eq_sinr == informed.post_eq_sinr);
}

TEST_CASE("incompatible baseline and jammer combination is rejected") {
    CHECK_THROWS_AS(run_scenario(quick_config(), Baseline::no_jammer,
                                 JammerStrategy::Kind::worst_case, 1),
                    std::invalid_argument);
    SystemConfig bad = quick_config();
    bad.num_users = 0;
    CHECK_THROWS(run_scenario(bad, Baseline::no_jammer, JammerStrategy::Kind::none, 1));
}

TEST_CASE("per-seed ordering between baselines") {
    const auto cfg = quick_config();
    for (std::uint64_t seed : {1, 2, 3}) {
        const double clean = run_scenario(cfg, Baseline::no_jammer,
                                          JammerStrategy::Kind::none, seed)
                                 .user_sum_rate_bits;
        for (auto baseline : {Baseline::no_protection, Baseline::sensing_assisted,
                              Baseline::full_knowledge}) {
            for (auto kind : {JammerStrategy::Kind::worst_case,
                              JammerStrategy::Kind::barrage}) {
                const double jammed =
                    run_scenario(cfg, baseline, kind, seed).user_sum_rate_bits;
                CHECK(jammed <= clean * (1.0 + 1e-9));
            }
        }
    }
}

TEST_CASE("single-point sweep equals a direct scenario run") {
    const auto cfg = quick_config();
    SweepSpec spec;
    spec.axis = SweepSpec::Axis::jammer_antennas;
    spec.values = {double(cfg.jammer_antennas)};
    spec.trials = 1;
    spec.base_seed = 5;
    spec.baselines = {{Baseline::sensing_assisted, JammerStrategy::Kind::worst_case}};

    const auto table = run_sweep(spec, cfg);
    REQUIRE(table.rows.size() == 1);
    const auto direct = run_scenario(cfg, Baseline::sensing_assisted,
                                     JammerStrategy::Kind::worst_case, 5);
    CHECK(table.rows[0].user_sum_rate_bits == direct.user_sum_rate_bits);
    CHECK(table.rows[0].sum_rate_bits == direct.sum_rate_bits);
    REQUIRE(table.summaries.size() == 1);
    CHECK(table.summaries[0].trials_ok == 1);
    CHECK(table.summaries[0].mean_user_rate_bits == direct.user_sum_rate_bits);
}

TEST_CASE("sweep validation errors") {
    const auto cfg = quick_config();
    SweepSpec spec;
    spec.values = {};
    CHECK_THROWS_AS(run_sweep(spec, cfg), std::invalid_argument);
    spec.values = {64.0};
    spec.trials = 0;
    CHECK_THROWS_AS(run_sweep(spec, cfg), std::invalid_argument);
    spec.trials = 1;
    spec.baselines.clear();
    CHECK_THROWS_AS(run_sweep(spec, cfg), std::invalid_argument);
}

TEST_CASE("sweep rows count and CSV round trip") {
    const auto cfg = quick_config();
    SweepSpec spec;
    spec.axis = SweepSpec::Axis::jammer_power_dbm;
    spec.values = {20.0, 30.0};
    spec.trials = 3;
    spec.base_seed = 2;
    spec.baselines = {{Baseline::no_protection, JammerStrategy::Kind::worst_case},
                      {Baseline::sensing_assisted, JammerStrategy::Kind::worst_case}};

    const auto table = run_sweep(spec, cfg);
    CHECK(table.rows.size() == 12);  // 2 points x 2 baselines x 3 trials

    const std::string path = "/tmp/jamsim_sweep_test.csv";
    emit_results(table, path);
    const auto parsed = parse_results(path);
    REQUIRE(parsed.size() == table.rows.size());
    for (std::size_t i = 0; i < parsed.size(); ++i) {
        CHECK(parsed[i].axis == table.rows[i].axis);
        CHECK(parsed[i].value == table.rows[i].value);
        CHECK(parsed[i].baseline == table.rows[i].baseline);
        CHECK(parsed[i].jammer_kind == table.rows[i].jammer_kind);
        CHECK(parsed[i].trial == table.rows[i].trial);
        CHECK(parsed[i].seed == table.rows[i].seed);
        CHECK(parsed[i].sum_rate_bits == table.rows[i].sum_rate_bits);
        CHECK(parsed[i].user_sum_rate_bits == table.rows[i].user_sum_rate_bits);
    }
    CHECK_THROWS(emit_results(SweepTable{}, path));
    CHECK_THROWS(emit_results(table, "/nonexistent/dir/out.csv"));
}

TEST_CASE("sweep output is byte-identical across invocations") {
    const auto cfg = quick_config();
    SweepSpec spec;
    spec.axis = SweepSpec::Axis::jammer_doa_deg;
    spec.values = {2.0, 10.0};
    spec.trials = 2;
    spec.baselines = {{Baseline::no_protection, JammerStrategy::Kind::worst_case},
                      {Baseline::sensing_assisted, JammerStrategy::Kind::worst_case}};

    emit_results(run_sweep(spec, cfg), "/tmp/jamsim_det_a.csv");
    emit_results(run_sweep(spec, cfg), "/tmp/jamsim_det_b.csv");
    CHECK(slurp("/tmp/jamsim_det_a.csv") == slurp("/tmp/jamsim_det_b.csv"));
    CHECK(!slurp("/tmp/jamsim_det_a.csv").empty());
}

TEST_CASE("user-count sweep rebuilds the partition") {
    const auto cfg = quick_config();
    SweepSpec spec;
    spec.axis = SweepSpec::Axis::users;
    spec.values = {1.0, 2.0};
    spec.trials = 1;
    spec.baselines = {{Baseline::no_jammer, JammerStrategy::Kind::none}};
    const auto table = run_sweep(spec, cfg);
    REQUIRE(table.rows.size() == 2);
    CHECK(!table.rows[0].error);
    CHECK(!table.rows[1].error);
    CHECK(table.rows[0].user_sum_rate_bits > 0.0);
}

TEST_CASE("failed trials are recorded without aborting the sweep") {
    SystemConfig cfg = quick_config();
    SweepSpec spec;
    spec.axis = SweepSpec::Axis::users;
    spec.values = {2.0, 1e6};  // second point exceeds the grid
    spec.trials = 1;
    spec.baselines = {{Baseline::no_jammer, JammerStrategy::Kind::none}};
    const auto table = run_sweep(spec, cfg);
    REQUIRE(table.rows.size() == 2);
    CHECK(!table.rows[0].error);
    CHECK(table.rows[1].error);
    CHECK(std::isnan(table.rows[1].user_sum_rate_bits));
    CHECK(table.summaries[1].trials_ok == 0);
}

TEST_CASE("protected rate never improves with jammer power") {
    const auto cfg = desk_scale_config();
    SweepSpec spec;
    spec.axis = SweepSpec::Axis::jammer_power_dbm;
    spec.values = {10.0, 20.0, 30.0, 40.0};
    spec.trials = 4;
    spec.baselines = {{Baseline::sensing_assisted, JammerStrategy::Kind::worst_case}};
    const auto table = run_sweep(spec, cfg);

    for (int trial = 0; trial < spec.trials; ++trial) {
        double previous = 1e300;
        for (std::size_t vi = 0; vi < spec.values.size(); ++vi) {
            const auto& row = table.rows[vi * spec.trials + trial];
            REQUIRE(!row.error);
            CHECK(row.user_sum_rate_bits <= previous * (1.0 + 1e-9));
            previous = row.user_sum_rate_bits;
        }
    }
}

TEST_CASE("full-grid unprotected collapse under the adaptive jammer") {
    // Full evaluation grid, a handful of seeds: the adaptive jammer pushes
    // the unprotected linear-receiver rate to a few percent of the clean one.
    const SystemConfig cfg = paper_defaults_config();
    double clean_sum = 0.0;
    double jammed_sum = 0.0;
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        clean_sum += run_scenario(cfg, Baseline::no_jammer,
                                  JammerStrategy::Kind::none, seed)
                         .user_sum_rate_bits;
        jammed_sum += run_scenario(cfg, Baseline::no_protection,
                                   JammerStrategy::Kind::worst_case, seed)
                          .user_sum_rate_bits;
    }
    CHECK(jammed_sum <= 0.05 * clean_sum);
}
