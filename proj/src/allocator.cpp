// SPDX-License-Identifier: Apache-2.0
#include "jamsim/allocator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "jamsim/parallel.hpp"
#include "jamsim/rng.hpp"

namespace jamsim {

SurrogateCovariance surrogate_covariance(const std::vector<double>& jammer_doas_rad,
                                         double eta, double noise_power_mw,
                                         int rx_antennas) {
    if (eta < 0.0) {
        throw std::invalid_argument("surrogate_covariance: eta must be >= 0");
    }
    if (!(noise_power_mw > 0.0)) {
        throw std::invalid_argument("surrogate_covariance: noise power must be > 0");
    }
    SurrogateCovariance s;
    s.eta = eta;
    s.doa_rad = jammer_doas_rad;
    s.manifold = array_manifold(jammer_doas_rad, rx_antennas);
    s.matrix = noise_power_mw * CMat::Identity(rx_antennas, rx_antennas);
    if (eta > 0.0 && s.manifold.cols() > 0) {
        s.matrix += eta * (s.manifold * s.manifold.adjoint());
        s.matrix = hermitize(s.matrix);
    }
    return s;
}

EigPair max_eigpair(const CMat& m, std::uint64_t seed) {
    if (m.rows() != m.cols() || m.rows() < 1) {
        throw std::invalid_argument("max_eigpair: matrix must be square and non-empty");
    }
    const Eigen::Index n = m.rows();

    std::mt19937_64 rng(derive_seed(seed, {kTagPowerIter}));
    CVec t(n);
    for (Eigen::Index i = 0; i < n; ++i) t(i) = complex_normal(rng, 1.0);
    t.normalize();

    constexpr int kMaxIters = 500;
    constexpr double kRayleighTol = 1e-10;
    constexpr double kResidualTol = 1e-8;

    double rayleigh = std::real(t.dot(m * t));
    for (int iter = 0; iter < kMaxIters; ++iter) {
        CVec mt = m * t;
        const double norm = mt.norm();
        if (norm == 0.0) {
            if (m.isZero(0.0)) return {0.0, t};
            break;  // start vector fell in the kernel; decompose fully
        }
        mt /= norm;
        const double next = std::real(mt.dot(m * mt));
        const bool settled = std::abs(next - rayleigh) <= kRayleighTol * std::max(1.0, std::abs(next));
        rayleigh = next;
        t = std::move(mt);
        if (settled) {
            const double residual = (m * t - rayleigh * t).norm();
            if (residual <= kResidualTol * std::max(rayleigh, 1e-300)) {
                return {rayleigh, t};
            }
        }
    }

    // Near-degenerate spectrum: use the full decomposition.
    Eigen::SelfAdjointEigenSolver<CMat> es(m);
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("max_eigpair: eigendecomposition failed");
    }
    return {es.eigenvalues()(n - 1), es.eigenvectors().col(n - 1)};
}

std::vector<double> water_fill(const std::vector<double>& gains, double budget_mw) {
    if (budget_mw < 0.0) {
        throw std::invalid_argument("water_fill: negative budget");
    }
    if (gains.empty()) return {};
    for (double g : gains) {
        if (!(g > 0.0) || !std::isfinite(g)) {
            throw std::invalid_argument("water_fill: gains must be positive and finite");
        }
    }

    // Closed form over the sorted inverse gains: with the m strongest
    // channels active, mu = (P + sum_{i<=m} 1/g_i) / m; the active set is the
    // largest m for which mu exceeds 1/g_m.
    std::vector<double> inv(gains.size());
    std::transform(gains.begin(), gains.end(), inv.begin(),
                   [](double g) { return 1.0 / g; });
    std::sort(inv.begin(), inv.end());

    double mu = 0.0;
    double prefix = 0.0;
    int active = 0;
    for (std::size_t m = 0; m < inv.size(); ++m) {
        prefix += inv[m];
        const double candidate = (budget_mw + prefix) / static_cast<double>(m + 1);
        if (candidate > inv[m]) {
            mu = candidate;
            active = static_cast<int>(m + 1);
        } else {
            break;
        }
    }

    std::vector<double> powers(gains.size(), 0.0);
    if (active == 0) return powers;
    for (std::size_t i = 0; i < gains.size(); ++i) {
        powers[i] = std::max(0.0, mu - 1.0 / gains[i]);
    }
    return powers;
}

void single_user_update(int user, const std::vector<CMat>& interference,
                        const ChannelSet& channels,
                        const std::vector<ResourceElement>& elements,
                        int budget_re, double budget_mw, Allocation& alloc,
                        std::uint64_t seed) {
    if (interference.size() != elements.size()) {
        throw std::invalid_argument("single_user_update: X grid size mismatch");
    }
    auto& u = alloc.users[user];

    // Clear the user's previous round.
    std::fill(u.scheduled.begin(), u.scheduled.end(), 0);
    std::fill(u.power_mw.begin(), u.power_mw.end(), 0.0);
    for (auto& w : u.beam) w.setZero();

    const std::size_t count = elements.size();
    std::vector<EigPair> pairs(count);
    parallel_for(count, [&](std::size_t i) {
        const std::size_t flat = flat_index(elements[i], alloc.num_symbols);
        const CMat& h = channels.user[user][flat];
        // H^H X^{-1} H assembled from the Cholesky factor so the matrix fed
        // to the eigensolver is an exact Gram matrix.
        const CMat solved = solve_hpd(interference[i], h);
        const CMat gram = hermitize(h.adjoint() * solved);
        pairs[i] = max_eigpair(gram, seed);
    });

    // Top-B_q eigenvalues; ties broken toward the lexicographically first
    // (n, k).
    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (pairs[a].value != pairs[b].value) return pairs[a].value > pairs[b].value;
        return elements[a] < elements[b];
    });

    std::vector<std::size_t> chosen;
    chosen.reserve(std::min<std::size_t>(budget_re, count));
    for (std::size_t i : order) {
        if (static_cast<int>(chosen.size()) >= budget_re) break;
        if (pairs[i].value <= 0.0) break;  // zero-gain REs are never scheduled
        chosen.push_back(i);
    }

    std::vector<double> gains;
    gains.reserve(chosen.size());
    for (std::size_t i : chosen) gains.push_back(pairs[i].value);
    const std::vector<double> powers = water_fill(gains, budget_mw);

    for (std::size_t j = 0; j < chosen.size(); ++j) {
        const std::size_t i = chosen[j];
        const std::size_t flat = flat_index(elements[i], alloc.num_symbols);
        u.scheduled[flat] = 1;
        u.power_mw[flat] = powers[j];
        u.beam[flat] = pairs[i].vector;
    }
}

namespace {

// X_qnk over R_q for the current allocation state.
std::vector<CMat> interference_grid(int user, const ChannelSet& channels,
                                    const CovarianceGrid& design,
                                    const std::vector<ResourceElement>& elements,
                                    const Allocation& alloc) {
    std::vector<CMat> x(elements.size());
    parallel_for(elements.size(), [&](std::size_t i) {
        const std::size_t flat = flat_index(elements[i], alloc.num_symbols);
        x[i] = interference_plus_noise(user, flat, alloc, channels, design[flat]);
    });
    return x;
}

}  // namespace

AllocateResult iterative_allocate(const ChannelSet& channels,
                                  const CovarianceGrid& design,
                                  const SystemConfig& cfg,
                                  const ResourcePartition& partition,
                                  const AllocatorOptions& options) {
    if (design.size() != cfg.grid_size()) {
        throw std::invalid_argument("iterative_allocate: covariance grid size mismatch");
    }

    AllocateResult result;
    result.allocation = Allocation::zeros(cfg.num_users, cfg.num_subcarriers,
                                          cfg.num_symbols, cfg.tx_antennas);
    Allocation& alloc = result.allocation;

    // Initialization: one single-user round against the bare design
    // covariance, before any interference exists.
    for (int q = 0; q < cfg.num_users; ++q) {
        std::vector<CMat> x;
        x.reserve(partition.user_elements[q].size());
        for (const auto& re : partition.user_elements[q]) {
            x.push_back(design[flat_index(re, cfg.num_symbols)]);
        }
        single_user_update(q, x, channels, partition.user_elements[q],
                           partition.budgets[q], cfg.user_power_mw, alloc, cfg.seed);
    }

    double previous = sum_rate(alloc, channels, design);
    result.objective_trace.push_back(previous);

    Allocation best = alloc;
    double best_rate = previous;

    for (int round = 1; round <= options.max_rounds; ++round) {
        for (int q = 0; q < cfg.num_users; ++q) {
            const auto x = interference_grid(q, channels, design,
                                             partition.user_elements[q], alloc);
            single_user_update(q, x, channels, partition.user_elements[q],
                               partition.budgets[q], cfg.user_power_mw, alloc,
                               cfg.seed);
        }
        const double current = sum_rate(alloc, channels, design);
        result.objective_trace.push_back(current);
        result.rounds = round;
        if (current >= best_rate) {
            best_rate = current;
            best = alloc;
        }
        if (std::abs(current - previous) <= options.rel_tol * std::abs(current)) {
            result.converged = true;
            return result;
        }
        previous = current;
    }

    // No fixed point within the round cap: hand back the best iterate seen.
    result.allocation = std::move(best);
    result.converged = false;
    return result;
}

double dominance_eta(const CMat& manifold, const CMat& jammer_channel,
                     const CMat& jammer_covariance) {
    const CMat pinv = pseudo_inverse(manifold);
    const CMat realized = jammer_channel * jammer_covariance * jammer_channel.adjoint();
    const CMat compressed = hermitize(pinv * realized * pinv.adjoint());
    const RVec eigs = hermitian_eigenvalues(compressed);
    return eigs.size() > 0 ? std::max(0.0, eigs(eigs.size() - 1)) : 0.0;
}

}  // namespace jamsim
