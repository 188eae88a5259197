// SPDX-License-Identifier: Apache-2.0
#include "jamsim/grid.hpp"

#include <set>
#include <stdexcept>
#include <string>

#include "jamsim/config.hpp"

namespace jamsim {

ResourcePartition build_resource_partition(const SystemConfig& cfg) {
    const long long grid = static_cast<long long>(cfg.num_subcarriers) * cfg.num_symbols;
    if (cfg.num_users < 1) {
        throw std::invalid_argument("build_resource_partition: need at least one user");
    }
    if (cfg.num_users > grid) {
        throw std::invalid_argument(
            "build_resource_partition: more users than resource elements (Q=" +
            std::to_string(cfg.num_users) + ", N*K=" + std::to_string(grid) + ")");
    }

    const int budget = static_cast<int>(grid / cfg.num_users);
    ResourcePartition part;
    part.user_elements.resize(cfg.num_users);
    part.budgets.assign(cfg.num_users, budget);

    std::size_t flat = 0;
    for (int q = 0; q < cfg.num_users; ++q) {
        part.user_elements[q].reserve(budget);
        for (int i = 0; i < budget; ++i, ++flat) {
            part.user_elements[q].push_back(element_at(flat, cfg.num_symbols));
        }
    }
    return part;
}

std::vector<std::string> validate_partition(const ResourcePartition& part,
                                            const SystemConfig& cfg) {
    std::vector<std::string> issues;
    if (part.num_users() != cfg.num_users) {
        issues.push_back("partition user count does not match config");
        return issues;
    }
    std::set<std::pair<int, int>> seen;
    for (int q = 0; q < part.num_users(); ++q) {
        const auto& elems = part.user_elements[q];
        if (part.budgets[q] != static_cast<int>(elems.size())) {
            issues.push_back("user " + std::to_string(q + 1) +
                             ": budget does not equal |R_q|");
        }
        for (const auto& re : elems) {
            if (re.subcarrier < 1 || re.subcarrier > cfg.num_subcarriers ||
                re.symbol < 1 || re.symbol > cfg.num_symbols) {
                issues.push_back("user " + std::to_string(q + 1) +
                                 ": resource element outside the grid");
            }
            if (!seen.insert({re.subcarrier, re.symbol}).second) {
                issues.push_back("resource element (" + std::to_string(re.subcarrier) +
                                 "," + std::to_string(re.symbol) +
                                 ") assigned to two users");
            }
        }
    }
    return issues;
}

}  // namespace jamsim
