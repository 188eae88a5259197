// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "jamsim/allocation.hpp"
#include "jamsim/channel.hpp"
#include "jamsim/config.hpp"
#include "jamsim/grid.hpp"
#include "jamsim/linalg.hpp"
#include "jamsim/rates.hpp"

namespace jamsim {

// DoA-only stand-in for the unknown jamming covariance:
// C = eta * A(theta_G) A(theta_G)^H + sigma^2 * I. With eta = 0 this is the
// jammer-free model, so protected and unprotected designs share one code path.
struct SurrogateCovariance {
    CMat matrix;                // N_R x N_R
    CMat manifold;              // A(theta_G), N_R x L_G
    std::vector<double> doa_rad;
    double eta = 0.0;
};

SurrogateCovariance surrogate_covariance(const std::vector<double>& jammer_doas_rad,
                                         double eta, double noise_power_mw,
                                         int rx_antennas);

struct EigPair {
    double value = 0.0;  // largest eigenvalue
    CVec vector;         // unit-norm eigenvector
};

// Largest eigenpair of a Hermitian PSD matrix by power iteration with a
// seeded start vector; falls back to a full decomposition if the iteration
// has not met the 1e-8 residual contract after 500 sweeps.
EigPair max_eigpair(const CMat& m, std::uint64_t seed);

// Water-filling p_i = (mu - 1/gain_i)^+ with mu set so the powers sum to
// the budget. Gains must be positive (zero-gain entries are excluded by the
// caller); an empty gain list yields an empty result.
std::vector<double> water_fill(const std::vector<double>& gains, double budget_mw);

// One round of the per-user subproblem: eigenvalues over the user's resource
// set, top-B_q schedule (ties to lexicographic (n,k)), eigenvector beams,
// water-filled powers. `interference` holds X_qnk for each element of R_q in
// partition order. Writes the user's rows of `alloc` in place.
void single_user_update(int user, const std::vector<CMat>& interference,
                        const ChannelSet& channels,
                        const std::vector<ResourceElement>& elements,
                        int budget_re, double budget_mw, Allocation& alloc,
                        std::uint64_t seed);

struct AllocatorOptions {
    double rel_tol = 1e-5;  // relative change of the design-metric sum rate
    int max_rounds = 50;
};

struct AllocateResult {
    Allocation allocation;
    bool converged = false;
    int rounds = 0;
    std::vector<double> objective_trace;  // design-covariance sum rate per round
};

// Joint iterative scheduling, beamforming, and power allocation. The design
// covariance grid is whatever the parties believe in: the surrogate in
// protected mode, sigma^2 I when unprotected, the true covariance with full
// knowledge. On non-convergence the best iterate is returned with
// converged = false.
AllocateResult iterative_allocate(const ChannelSet& channels,
                                  const CovarianceGrid& design,
                                  const SystemConfig& cfg,
                                  const ResourcePartition& partition,
                                  const AllocatorOptions& options = {});

// Smallest eta for which the surrogate dominates the realized covariance in
// the Loewner order, lambda_max(A^+ G C_u G^H A^{+H}); used by the dominance
// diagnostics.
double dominance_eta(const CMat& manifold, const CMat& jammer_channel,
                     const CMat& jammer_covariance);

}  // namespace jamsim
