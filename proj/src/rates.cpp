// SPDX-License-Identifier: Apache-2.0
#include "jamsim/rates.hpp"

#include <cmath>
#include <stdexcept>

#include "jamsim/parallel.hpp"

namespace jamsim {

namespace {
constexpr double kAsymmetryTol = 1e-8;

double log2_1p(double x) { return std::log1p(x) / M_LN2; }
}  // namespace

CovarianceGrid uniform_covariance_grid(const CMat& entry, std::size_t grid) {
    return CovarianceGrid(grid, entry);
}

CMat noise_covariance(const CMat& jammer_channel, const CMat& jammer_covariance,
                      double noise_power_mw) {
    if (hermitian_asymmetry(jammer_covariance) > kAsymmetryTol) {
        throw std::invalid_argument("noise_covariance: jammer covariance not Hermitian");
    }
    const Eigen::Index rx = jammer_channel.rows();
    CMat cz = jammer_channel * jammer_covariance * jammer_channel.adjoint();
    cz = hermitize(cz);
    cz += noise_power_mw * CMat::Identity(rx, rx);
    return cz;
}

CMat interference_plus_noise(int user, std::size_t flat, const Allocation& alloc,
                             const ChannelSet& channels, const CMat& cz) {
    CMat x = cz;
    for (int other = 0; other < alloc.num_users(); ++other) {
        if (other == user) continue;
        const auto& u = alloc.users[other];
        if (!u.scheduled[flat] || u.power_mw[flat] <= 0.0) continue;
        const CVec received = channels.user[other][flat] * alloc.transmit_vector(other, flat);
        x.noalias() += received * received.adjoint();
    }
    return hermitize(x);
}

CVec mmse_equalizer(int user, std::size_t flat, const Allocation& alloc,
                    const ChannelSet& channels, const CMat& interference) {
    const CVec b = alloc.transmit_vector(user, flat);
    if (b.squaredNorm() == 0.0) return CVec::Zero(interference.rows());
    return solve_hpd(interference, channels.user[user][flat] * b);
}

double sinr(const CVec& beam, const CMat& channel, const CMat& covariance) {
    const CVec received = channel * beam;
    if (received.squaredNorm() == 0.0) return 0.0;
    const CVec solved = solve_hpd(covariance, received);
    return std::max(0.0, std::real(received.dot(solved)));
}

double user_sum_rate(const Allocation& alloc, const ChannelSet& channels,
                     const CovarianceGrid& eval, const CovarianceGrid& design,
                     std::vector<std::vector<double>>* post_eq_sinr) {
    const std::size_t grid = alloc.grid_size();
    const int users = alloc.num_users();
    if (eval.size() != grid || design.size() != grid) {
        throw std::invalid_argument("user_sum_rate: covariance grid size mismatch");
    }

    std::vector<std::vector<double>> sinr_grid(users,
                                               std::vector<double>(grid, 0.0));
    std::vector<double> terms(grid * users, 0.0);

    parallel_for(grid, [&](std::size_t flat) {
        for (int q = 0; q < users; ++q) {
            if (!alloc.is_scheduled(q, flat)) continue;
            const CVec b = alloc.transmit_vector(q, flat);
            if (b.squaredNorm() == 0.0) continue;

            const CMat x_design =
                interference_plus_noise(q, flat, alloc, channels, design[flat]);
            const CVec v = mmse_equalizer(q, flat, alloc, channels, x_design);
            const double v_norm2 = v.squaredNorm();
            if (v_norm2 == 0.0) continue;

            const CMat x_eval =
                interference_plus_noise(q, flat, alloc, channels, eval[flat]);
            const Complex signal = v.dot(channels.user[q][flat] * b);
            const double denom = std::real(v.dot(x_eval * v));
            if (denom <= 0.0) continue;
            const double gamma = std::norm(signal) / denom;
            sinr_grid[q][flat] = gamma;
            terms[flat * users + q] = log2_1p(gamma);
        }
    });

    if (post_eq_sinr != nullptr) *post_eq_sinr = std::move(sinr_grid);
    return pairwise_sum(terms);
}

double sum_rate(const Allocation& alloc, const ChannelSet& channels,
                const CovarianceGrid& cz) {
    const std::size_t grid = alloc.grid_size();
    if (cz.size() != grid) {
        throw std::invalid_argument("sum_rate: covariance grid size mismatch");
    }
    std::vector<double> terms(grid, 0.0);
    parallel_for(grid, [&](std::size_t flat) {
        if (!alloc.any_scheduled(flat)) return;
        double acc = 0.0;
        Eigen::LLT<CMat> llt(cz[flat]);
        const bool factored = llt.info() == Eigen::Success;
        for (int q = 0; q < alloc.num_users(); ++q) {
            if (!alloc.is_scheduled(q, flat)) continue;
            const auto& u = alloc.users[q];
            if (u.power_mw[flat] <= 0.0) continue;
            double gamma;
            if (factored) {
                const CVec received = channels.user[q][flat] * u.beam[flat];
                if (received.squaredNorm() == 0.0) continue;
                gamma = std::max(0.0, std::real(received.dot(llt.solve(received))));
            } else {
                gamma = sinr(u.beam[flat], channels.user[q][flat], cz[flat]);
            }
            acc += u.power_mw[flat] * gamma;
        }
        terms[flat] = log2_1p(acc);
    });
    return pairwise_sum(terms);
}

}  // namespace jamsim
