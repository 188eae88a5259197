// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace jamsim {

struct SystemConfig;

// One (subcarrier, symbol) cell of the time-frequency grid, 1-based on both
// axes as in the rate formulas.
struct ResourceElement {
    int subcarrier = 1;  // n in 1..N
    int symbol = 1;      // k in 1..K

    auto operator<=>(const ResourceElement&) const = default;
};

// Flat storage index for per-RE tensors: subcarrier-major, symbol-minor.
inline std::size_t flat_index(const ResourceElement& re, int num_symbols) {
    return static_cast<std::size_t>(re.subcarrier - 1) * num_symbols +
           static_cast<std::size_t>(re.symbol - 1);
}

inline ResourceElement element_at(std::size_t flat, int num_symbols) {
    return {static_cast<int>(flat / num_symbols) + 1,
            static_cast<int>(flat % num_symbols) + 1};
}

// Per-user resource sets R_q with their budgets B_q. The default scheduler
// search space: disjoint sets, but nothing downstream assumes disjointness.
struct ResourcePartition {
    std::vector<std::vector<ResourceElement>> user_elements;
    std::vector<int> budgets;

    int num_users() const { return static_cast<int>(user_elements.size()); }
};

// Splits the N x K grid into Q row-major contiguous blocks of
// floor(N*K / Q) elements each; trailing remainder REs stay unassigned.
// Throws if Q > N*K.
ResourcePartition build_resource_partition(const SystemConfig& cfg);

// Empty result means the partition is consistent with cfg: sets within the
// grid bounds, pairwise disjoint, budgets matching set sizes.
std::vector<std::string> validate_partition(const ResourcePartition& part,
                                            const SystemConfig& cfg);

}  // namespace jamsim
