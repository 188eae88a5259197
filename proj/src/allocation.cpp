// SPDX-License-Identifier: Apache-2.0
#include "jamsim/allocation.hpp"

#include <cmath>
#include <string>

#include "jamsim/config.hpp"

namespace jamsim {

Allocation Allocation::zeros(int num_users, int num_subcarriers, int num_symbols,
                             int tx_antennas) {
    Allocation alloc;
    alloc.num_subcarriers = num_subcarriers;
    alloc.num_symbols = num_symbols;
    const std::size_t grid =
        static_cast<std::size_t>(num_subcarriers) * num_symbols;
    alloc.users.resize(num_users);
    for (auto& u : alloc.users) {
        u.scheduled.assign(grid, 0);
        u.power_mw.assign(grid, 0.0);
        u.beam.assign(grid, CVec::Zero(tx_antennas));
    }
    return alloc;
}

CVec Allocation::transmit_vector(int user, std::size_t flat) const {
    const auto& u = users[user];
    if (u.scheduled[flat] == 0) return CVec::Zero(u.beam[flat].size());
    return std::sqrt(u.power_mw[flat]) * u.beam[flat];
}

bool Allocation::any_scheduled(std::size_t flat) const {
    for (const auto& u : users) {
        if (u.scheduled[flat] != 0) return true;
    }
    return false;
}

std::vector<std::string> validate_allocation(const Allocation& alloc,
                                             const ResourcePartition& part,
                                             const SystemConfig& cfg) {
    std::vector<std::string> issues;
    const std::size_t grid = cfg.grid_size();
    constexpr double kTol = 1e-9;

    if (alloc.num_users() != cfg.num_users || part.num_users() != cfg.num_users) {
        issues.push_back("allocation/partition user count mismatch");
        return issues;
    }

    for (int q = 0; q < alloc.num_users(); ++q) {
        const auto& u = alloc.users[q];
        const std::string tag = "user " + std::to_string(q + 1) + ": ";
        if (u.scheduled.size() != grid || u.power_mw.size() != grid ||
            u.beam.size() != grid) {
            issues.push_back(tag + "grid size mismatch");
            continue;
        }

        std::vector<std::uint8_t> in_partition(grid, 0);
        for (const auto& re : part.user_elements[q]) {
            in_partition[flat_index(re, cfg.num_symbols)] = 1;
        }

        long scheduled_count = 0;
        double spent_mw = 0.0;
        for (std::size_t f = 0; f < grid; ++f) {
            if (u.scheduled[f] > 1) {
                issues.push_back(tag + "alpha not binary");
            }
            const double p = u.power_mw[f];
            if (!(p >= 0.0) || !std::isfinite(p)) {
                issues.push_back(tag + "negative or non-finite power");
            }
            if (u.scheduled[f]) {
                if (!in_partition[f]) {
                    issues.push_back(tag + "scheduled RE outside R_q");
                }
                ++scheduled_count;
                spent_mw += p;
            }
            const double norm2 = u.beam[f].squaredNorm();
            if (!(norm2 <= 1.0 + kTol) || !std::isfinite(norm2)) {
                issues.push_back(tag + "beamformer norm exceeds 1");
            }
        }
        if (scheduled_count > part.budgets[q]) {
            issues.push_back(tag + "scheduled count exceeds B_q");
        }
        if (spent_mw > cfg.user_power_mw * (1.0 + kTol) + kTol) {
            issues.push_back(tag + "power budget exceeded");
        }
    }
    return issues;
}

}  // namespace jamsim
