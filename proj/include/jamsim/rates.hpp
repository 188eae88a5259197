// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jamsim/allocation.hpp"
#include "jamsim/channel.hpp"
#include "jamsim/linalg.hpp"

namespace jamsim {

// Per-RE noise-plus-jamming covariance grid, flat-indexed.
using CovarianceGrid = std::vector<CMat>;

CovarianceGrid uniform_covariance_grid(const CMat& entry, std::size_t grid);

// C_z = G * C_u * G^H + sigma^2 * I. Rejects C_u with relative asymmetry
// above 1e-8.
CMat noise_covariance(const CMat& jammer_channel, const CMat& jammer_covariance,
                      double noise_power_mw);

// X_q = sum_{q' != q} H_q' b_q' b_q'^H H_q'^H + C_z for one RE.
CMat interference_plus_noise(int user, std::size_t flat, const Allocation& alloc,
                             const ChannelSet& channels, const CMat& cz);

// v = X^{-1} H b (unnormalized MMSE weights).
CVec mmse_equalizer(int user, std::size_t flat, const Allocation& alloc,
                    const ChannelSet& channels, const CMat& interference);

// gamma = w^H H^H B^{-1} H w for Hermitian positive definite B.
double sinr(const CVec& beam, const CMat& channel, const CMat& covariance);

// Rate reports carry both metrics plus the post-equalization SINR per
// (user, RE); unscheduled entries are 0.
struct RateReport {
    double sum_rate_bits = 0.0;       // joint-decoding metric
    double user_sum_rate_bits = 0.0;  // linear-equalization metric
    std::vector<std::vector<double>> post_eq_sinr;

    std::string baseline;
    std::string jammer_kind;
    std::uint64_t seed = 0;
    bool allocator_converged = true;
    int allocator_iterations = 0;
};

// Linear-receiver user sum-rate: sum over scheduled (q, RE) of
// log2(1 + |v^H H b|^2 / (v^H X v)). Equalizers come from the receiver's
// covariance model `design`; the denominator uses the actual covariance
// `eval`. Passing the same grid twice gives the matched-receiver rate.
double user_sum_rate(const Allocation& alloc, const ChannelSet& channels,
                     const CovarianceGrid& eval, const CovarianceGrid& design,
                     std::vector<std::vector<double>>* post_eq_sinr = nullptr);

inline double user_sum_rate(const Allocation& alloc, const ChannelSet& channels,
                            const CovarianceGrid& cz) {
    return user_sum_rate(alloc, channels, cz, cz, nullptr);
}

// Joint metric: sum over REs of log2(1 + sum_q alpha p gamma_q(C_z)).
double sum_rate(const Allocation& alloc, const ChannelSet& channels,
                const CovarianceGrid& cz);

}  // namespace jamsim
