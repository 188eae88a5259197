// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jamsim/grid.hpp"
#include "jamsim/linalg.hpp"

namespace jamsim {

struct SystemConfig;

// Per-user transmit design over the whole grid (flat-indexed). Unscheduled
// REs carry p = 0 and a zero beam.
struct UserAllocation {
    std::vector<std::uint8_t> scheduled;  // alpha in {0,1}
    std::vector<double> power_mw;         // p >= 0
    std::vector<CVec> beam;               // w, ||w||^2 <= 1
};

struct Allocation {
    int num_subcarriers = 0;
    int num_symbols = 0;
    std::vector<UserAllocation> users;

    static Allocation zeros(int num_users, int num_subcarriers, int num_symbols,
                            int tx_antennas);

    int num_users() const { return static_cast<int>(users.size()); }
    std::size_t grid_size() const {
        return static_cast<std::size_t>(num_subcarriers) * num_symbols;
    }

    bool is_scheduled(int user, std::size_t flat) const {
        return users[user].scheduled[flat] != 0;
    }

    // b = sqrt(p) * alpha * w
    CVec transmit_vector(int user, std::size_t flat) const;

    // True if any user schedules this RE.
    bool any_scheduled(std::size_t flat) const;
};

// Checks the scheduling/power/beam constraints exactly as posed:
//   alpha binary; p >= 0; per-user scheduled count <= B_q;
//   per-user sum of alpha*p <= P_q; ||w||^2 <= 1; alpha = 1 only inside R_q.
// Returns human-readable violations; empty means valid. Every test and the
// scenario runner go through this.
std::vector<std::string> validate_allocation(const Allocation& alloc,
                                             const ResourcePartition& part,
                                             const SystemConfig& cfg);

}  // namespace jamsim
