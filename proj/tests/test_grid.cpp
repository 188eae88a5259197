// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <fstream>
#include <random>
#include <set>

#include "jamsim/allocation.hpp"
#include "jamsim/config.hpp"
#include "jamsim/grid.hpp"
#include "jamsim/rng.hpp"
#include "jamsim/units.hpp"

using namespace jamsim;

TEST_CASE("dbm conversion fixed points") {
    CHECK(dbm_to_mw(0.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(dbm_to_mw(30.0) == doctest::Approx(1000.0).epsilon(1e-12));
    // 10^(5/10) = sqrt(10)
    CHECK(std::abs(dbm_to_mw(5.0) - std::sqrt(10.0)) < 1e-4);
    CHECK_THROWS_AS(dbm_to_mw(std::nan("")), std::invalid_argument);
    CHECK_THROWS_AS(mw_to_dbm(0.0), std::invalid_argument);
    CHECK_THROWS_AS(mw_to_dbm(-1.0), std::invalid_argument);
}

TEST_CASE("dbm/mw round trip") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 1000; ++i) {
        const double dbm = uniform_range(rng, -80.0, 80.0);
        CHECK(mw_to_dbm(dbm_to_mw(dbm)) == doctest::Approx(dbm).epsilon(1e-12));
        const double mw = std::exp(uniform_range(rng, -18.0, 18.0));
        CHECK(dbm_to_mw(mw_to_dbm(mw)) == doctest::Approx(mw).epsilon(1e-12));
    }
}

TEST_CASE("flat index round trip") {
    const int symbols = 14;
    for (std::size_t f = 0; f < 64 * 14; ++f) {
        CHECK(flat_index(element_at(f, symbols), symbols) == f);
    }
}

namespace {
SystemConfig grid_config(int users, int subcarriers, int symbols) {
    SystemConfig cfg;
    cfg.num_users = users;
    cfg.num_subcarriers = subcarriers;
    cfg.num_symbols = symbols;
    return cfg;
}
}  // namespace

TEST_CASE("partition matches the full evaluation grid") {
    const auto part = build_resource_partition(grid_config(3, 64, 14));
    for (int q = 0; q < 3; ++q) {
        CHECK(part.budgets[q] == 298);  // floor(64*14 / 3)
        CHECK(part.user_elements[q].size() == 298);
    }
}

TEST_CASE("partition forced two-user split") {
    const auto part = build_resource_partition(grid_config(2, 2, 1));
    REQUIRE(part.user_elements[0].size() == 1);
    REQUIRE(part.user_elements[1].size() == 1);
    CHECK(part.user_elements[0][0] == ResourceElement{1, 1});
    CHECK(part.user_elements[1][0] == ResourceElement{2, 1});
}

TEST_CASE("partition leaves remainder unassigned") {
    const auto cfg = grid_config(3, 4, 2);
    const auto part = build_resource_partition(cfg);
    std::set<std::pair<int, int>> seen;
    for (int q = 0; q < 3; ++q) {
        CHECK(part.budgets[q] == 2);
        for (const auto& re : part.user_elements[q]) {
            CHECK(seen.insert({re.subcarrier, re.symbol}).second);
        }
    }
    CHECK(seen.size() == 6);  // two of the eight REs stay free
    CHECK(validate_partition(part, cfg).empty());
}

TEST_CASE("partition rejects more users than REs") {
    CHECK_THROWS_AS(build_resource_partition(grid_config(9, 4, 2)),
                    std::invalid_argument);
}

TEST_CASE("partition properties over random shapes") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 20);
        const int k = 1 + static_cast<int>(rng() % 8);
        const int q = 1 + static_cast<int>(rng() % std::min(6, n * k));
        const auto cfg = grid_config(q, n, k);
        const auto part = build_resource_partition(cfg);
        CHECK(validate_partition(part, cfg).empty());
        long total = 0;
        for (int u = 0; u < q; ++u) total += part.budgets[u];
        CHECK(total <= static_cast<long>(n) * k);
        CHECK(part.budgets[0] == (n * k) / q);
    }
}

namespace {
Allocation small_valid_allocation(const SystemConfig& cfg,
                                  const ResourcePartition& part) {
    Allocation alloc = Allocation::zeros(cfg.num_users, cfg.num_subcarriers,
                                         cfg.num_symbols, cfg.tx_antennas);
    for (int q = 0; q < cfg.num_users; ++q) {
        for (const auto& re : part.user_elements[q]) {
            const auto f = flat_index(re, cfg.num_symbols);
            alloc.users[q].scheduled[f] = 1;
            alloc.users[q].power_mw[f] =
                cfg.user_power_mw / part.user_elements[q].size();
            CVec w = CVec::Zero(cfg.tx_antennas);
            w(0) = 1.0;
            alloc.users[q].beam[f] = w;
        }
    }
    return alloc;
}
}  // namespace

TEST_CASE("allocation validator accepts a conforming design") {
    SystemConfig cfg = grid_config(2, 4, 2);
    cfg.tx_antennas = 3;
    const auto part = build_resource_partition(cfg);
    const auto alloc = small_valid_allocation(cfg, part);
    CHECK(validate_allocation(alloc, part, cfg).empty());
}

TEST_CASE("allocation validator flags each constraint") {
    SystemConfig cfg = grid_config(2, 4, 2);
    cfg.tx_antennas = 3;
    const auto part = build_resource_partition(cfg);

    SUBCASE("non-binary alpha") {
        auto alloc = small_valid_allocation(cfg, part);
        alloc.users[0].scheduled[flat_index(part.user_elements[0][0], 2)] = 2;
        CHECK(!validate_allocation(alloc, part, cfg).empty());
    }
    SUBCASE("negative power") {
        auto alloc = small_valid_allocation(cfg, part);
        alloc.users[0].power_mw[flat_index(part.user_elements[0][0], 2)] = -1e-3;
        CHECK(!validate_allocation(alloc, part, cfg).empty());
    }
    SUBCASE("budget B_q exceeded") {
        auto alloc = small_valid_allocation(cfg, part);
        auto tight = part;
        tight.budgets[0] -= 1;
        CHECK(!validate_allocation(alloc, tight, cfg).empty());
    }
    SUBCASE("power budget exceeded") {
        auto alloc = small_valid_allocation(cfg, part);
        const auto f = flat_index(part.user_elements[0][0], cfg.num_symbols);
        alloc.users[0].power_mw[f] += cfg.user_power_mw;
        CHECK(!validate_allocation(alloc, part, cfg).empty());
    }
    SUBCASE("beam norm above one") {
        auto alloc = small_valid_allocation(cfg, part);
        const auto f = flat_index(part.user_elements[0][0], cfg.num_symbols);
        alloc.users[0].beam[f] *= 1.5;
        CHECK(!validate_allocation(alloc, part, cfg).empty());
    }
    SUBCASE("scheduling outside the user's resource set") {
        auto alloc = small_valid_allocation(cfg, part);
        const auto f = flat_index(part.user_elements[1][0], cfg.num_symbols);
        alloc.users[0].scheduled[f] = 1;
        CHECK(!validate_allocation(alloc, part, cfg).empty());
    }
}

TEST_CASE("transmit vector composes alpha, power and beam") {
    auto alloc = Allocation::zeros(1, 2, 1, 2);
    CHECK(alloc.transmit_vector(0, 0).norm() == 0.0);
    alloc.users[0].scheduled[0] = 1;
    alloc.users[0].power_mw[0] = 4.0;
    alloc.users[0].beam[0] = CVec::Ones(2) / std::sqrt(2.0);
    CHECK(alloc.transmit_vector(0, 0).squaredNorm() == doctest::Approx(4.0));
    CHECK(alloc.any_scheduled(0));
    CHECK(!alloc.any_scheduled(1));
}

TEST_CASE("config validation catches bad fields") {
    SystemConfig cfg;
    CHECK(validate_config(cfg).empty());
    cfg.num_users = 0;
    CHECK(!validate_config(cfg).empty());
    cfg = SystemConfig{};
    cfg.resilience_eta = -1.0;
    CHECK(!validate_config(cfg).empty());
    cfg = SystemConfig{};
    cfg.num_users = 200;
    cfg.num_subcarriers = 4;
    cfg.num_symbols = 2;
    CHECK(!validate_config(cfg).empty());
    cfg = SystemConfig{};
    cfg.user_path_delays = {0.1};  // wrong length
    CHECK(!validate_config(cfg).empty());
}

TEST_CASE("config json round trip") {
    const SystemConfig cfg = desk_scale_config();
    const std::string path = "/tmp/jamsim_cfg_test.json";
    {
        std::ofstream out(path);
        out << config_to_json(cfg);
    }
    const SystemConfig loaded = load_config(path);
    CHECK(loaded.num_users == cfg.num_users);
    CHECK(loaded.num_subcarriers == cfg.num_subcarriers);
    CHECK(loaded.jammer_antennas == cfg.jammer_antennas);
    CHECK(loaded.user_power_mw == doctest::Approx(cfg.user_power_mw).epsilon(1e-12));
    CHECK(loaded.jammer_power_mw == doctest::Approx(cfg.jammer_power_mw).epsilon(1e-12));
    CHECK(loaded.noise_power_mw == doctest::Approx(cfg.noise_power_mw).epsilon(1e-12));
    CHECK(loaded.resilience_eta == cfg.resilience_eta);
    CHECK(loaded.seed == cfg.seed);
}

TEST_CASE("config presets") {
    const auto desk = desk_scale_config();
    CHECK(desk.num_subcarriers == 16);
    CHECK(desk.num_symbols == 4);
    const auto paper = paper_defaults_config();
    CHECK(paper.num_subcarriers == 64);
    CHECK(paper.num_symbols == 14);
    CHECK(paper.resilience_eta == 10.0);
    CHECK(load_config("desk-scale").num_subcarriers == 16);
    CHECK(load_config("paper-defaults").num_symbols == 14);
    CHECK_THROWS(load_config("/nonexistent/path.json"));
}
