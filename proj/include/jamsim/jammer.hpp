// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "jamsim/allocation.hpp"
#include "jamsim/channel.hpp"
#include "jamsim/config.hpp"
#include "jamsim/linalg.hpp"
#include "jamsim/rates.hpp"

namespace jamsim {

// Maps jammer transmit directions onto a user's channel subspace:
// R = G^+ H H^H G^{+H}. Kept in factored form (G^+ H) because everything
// downstream needs only the nonzero eigenstructure.
struct AlignmentMatrix {
    CMat factor;          // G^+ H, N_J x N_T
    int source_user = 0;  // 1-based

    CMat matrix() const { return hermitize(factor * factor.adjoint()); }

    // Largest eigenvalue via the Gram matrix of the thin factor.
    double lambda_max() const;

    // Nonzero eigenpairs: unit eigenvectors as columns, eigenvalues
    // descending. Eigenvalues of R outside this set are exactly zero.
    void nonzero_eigs(CMat* vectors, std::vector<double>* values) const;
};

// Relative singular-value floor for the alignment pseudoinverse. Clustered
// beamspace jamming channels have exponentially graded spectra; inverting
// directions the jammer cannot dominate over the noise floor would sink the
// whole power budget into them (the eigenvalue-proportional split scales
// with 1/sigma^2), so those directions are excluded here rather than at the
// numerical-rank level.
inline constexpr double kAlignmentSigmaCutoff = 2e-2;

AlignmentMatrix alignment_matrix(const CMat& jammer_channel, const CMat& user_channel,
                                 int source_user = 1,
                                 double sigma_cutoff = kAlignmentSigmaCutoff);

// Per-RE adversary transmit covariances under a global trace budget.
struct JammerStrategy {
    enum class Kind { none, worst_case, barrage };

    Kind kind = Kind::none;
    std::vector<CMat> covariance;     // C_u per RE (empty for Kind::none)
    std::vector<double> re_power_mw;  // g per RE (trace of C_u)
    double power_budget_mw = 0.0;
};

const char* to_string(JammerStrategy::Kind kind);
JammerStrategy::Kind jammer_kind_from_string(const std::string& name);

// argmax over scheduled users of p * lambda_max(R_q); ties go to the lowest
// user index. Requires at least one scheduled user on the RE.
int select_strongest_user(const std::vector<AlignmentMatrix>& alignments,
                          const Allocation& alloc, std::size_t flat);

// g_nk = budget * sqrt(h_nk) / sum sqrt(h): the Lagrangian solution of the
// per-RE power split. Zero-weight REs receive zero; an all-zero weight set
// yields all zeros.
std::vector<double> jammer_power_split(const std::vector<double>& weights,
                                       double budget_mw);

// Approximate worst-case response to a fixed transmit design: strongest-user
// selection per scheduled RE, eigenvalue-proportional covariance, square-root
// power split across REs. Unscheduled REs carry zero covariance.
JammerStrategy worst_case_strategy(const ChannelSet& channels,
                                   const Allocation& alloc, double budget_mw);

// Isotropic covariance P_J / (N_J * N * K) * I on every RE.
JammerStrategy barrage_strategy(const SystemConfig& cfg);

JammerStrategy no_jammer_strategy(double budget_mw = 0.0);

// Per-RE true covariance grid C_z = G C_u G^H + sigma^2 I realized by a
// strategy (sigma^2 I throughout for Kind::none).
CovarianceGrid realized_covariance_grid(const JammerStrategy& strategy,
                                        const ChannelSet& channels,
                                        double noise_power_mw);

// Hermitian/PSD per RE plus the global trace budget; for worst-case
// strategies additionally per-RE trace == g. Empty result means valid.
std::vector<std::string> validate_strategy(const JammerStrategy& strategy,
                                           const SystemConfig& cfg);

// Diagnostics CSV: subcarrier, symbol, trace, top eigenvalue per RE.
void dump_strategy_csv(const JammerStrategy& strategy, int num_symbols,
                       const std::string& path);

}  // namespace jamsim
