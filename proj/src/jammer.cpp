// SPDX-License-Identifier: Apache-2.0
#include "jamsim/jammer.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "jamsim/parallel.hpp"

namespace jamsim {

double AlignmentMatrix::lambda_max() const {
    if (factor.size() == 0) return 0.0;
    const CMat gram = hermitize(factor.adjoint() * factor);
    const RVec eigs = hermitian_eigenvalues(gram);
    return eigs.size() > 0 ? std::max(0.0, eigs(eigs.size() - 1)) : 0.0;
}

void AlignmentMatrix::nonzero_eigs(CMat* vectors, std::vector<double>* values) const {
    Eigen::JacobiSVD<CMat> svd(factor, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    const double cutoff =
        sv.size() > 0
            ? static_cast<double>(std::max(factor.rows(), factor.cols())) *
                  std::numeric_limits<double>::epsilon() * sv(0)
            : 0.0;
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > cutoff) ++rank;
    }
    *vectors = svd.matrixU().leftCols(rank);
    values->resize(rank);
    for (int i = 0; i < rank; ++i) (*values)[i] = sv(i) * sv(i);
}

AlignmentMatrix alignment_matrix(const CMat& jammer_channel, const CMat& user_channel,
                                 int source_user, double sigma_cutoff) {
    if (jammer_channel.rows() != user_channel.rows()) {
        throw std::invalid_argument("alignment_matrix: receive dimensions differ");
    }
    AlignmentMatrix r;
    r.factor = pseudo_inverse(jammer_channel, sigma_cutoff) * user_channel;
    r.source_user = source_user;
    return r;
}

const char* to_string(JammerStrategy::Kind kind) {
    switch (kind) {
        case JammerStrategy::Kind::none: return "none";
        case JammerStrategy::Kind::worst_case: return "worst-case";
        case JammerStrategy::Kind::barrage: return "barrage";
    }
    return "?";
}

JammerStrategy::Kind jammer_kind_from_string(const std::string& name) {
    if (name == "none") return JammerStrategy::Kind::none;
    if (name == "worst-case") return JammerStrategy::Kind::worst_case;
    if (name == "barrage") return JammerStrategy::Kind::barrage;
    throw std::invalid_argument("unknown jammer kind '" + name + "'");
}

int select_strongest_user(const std::vector<AlignmentMatrix>& alignments,
                          const Allocation& alloc, std::size_t flat) {
    int best = -1;
    double best_weight = -1.0;
    for (std::size_t q = 0; q < alignments.size(); ++q) {
        if (!alloc.is_scheduled(static_cast<int>(q), flat)) continue;
        const double weight =
            alloc.users[q].power_mw[flat] * alignments[q].lambda_max();
        if (weight > best_weight) {
            best_weight = weight;
            best = static_cast<int>(q);
        }
    }
    if (best < 0) {
        throw std::invalid_argument(
            "select_strongest_user: no scheduled user on this RE");
    }
    return best;
}

std::vector<double> jammer_power_split(const std::vector<double>& weights,
                                       double budget_mw) {
    if (!(budget_mw > 0.0)) {
        throw std::invalid_argument("jammer_power_split: budget must be positive");
    }
    double sqrt_sum = 0.0;
    for (double h : weights) {
        if (h < 0.0 || !std::isfinite(h)) {
            throw std::invalid_argument("jammer_power_split: weights must be >= 0");
        }
        sqrt_sum += std::sqrt(h);
    }
    std::vector<double> split(weights.size(), 0.0);
    if (sqrt_sum == 0.0) return split;  // nothing worth jamming
    for (std::size_t i = 0; i < weights.size(); ++i) {
        split[i] = budget_mw * std::sqrt(weights[i]) / sqrt_sum;
    }
    return split;
}

JammerStrategy worst_case_strategy(const ChannelSet& channels,
                                   const Allocation& alloc, double budget_mw) {
    if (!(budget_mw > 0.0)) {
        throw std::invalid_argument("worst_case_strategy: budget must be positive");
    }
    const std::size_t grid = channels.grid_size();
    const int jammer_antennas = static_cast<int>(channels.jammer[0].cols());
    const int users = channels.num_users();

    JammerStrategy strategy;
    strategy.kind = JammerStrategy::Kind::worst_case;
    strategy.power_budget_mw = budget_mw;
    strategy.covariance.assign(grid, CMat::Zero(jammer_antennas, jammer_antennas));
    strategy.re_power_mw.assign(grid, 0.0);

    struct Target {
        CMat vectors;                 // nonzero eigenvectors of R_{q*}
        std::vector<double> values;   // matching eigenvalues
        double value_sum = 0.0;
    };
    std::vector<Target> targets(grid);
    std::vector<double> weights(grid, 0.0);  // h_nk

    parallel_for(grid, [&](std::size_t flat) {
        if (!alloc.any_scheduled(flat)) return;
        const CMat pinv_g =
            pseudo_inverse(channels.jammer[flat], kAlignmentSigmaCutoff);
        std::vector<AlignmentMatrix> alignments(users);
        for (int q = 0; q < users; ++q) {
            alignments[q].factor = pinv_g * channels.user[q][flat];
            alignments[q].source_user = q + 1;
        }
        const int strongest = select_strongest_user(alignments, alloc, flat);

        Target t;
        alignments[strongest].nonzero_eigs(&t.vectors, &t.values);
        for (double v : t.values) t.value_sum += v;
        weights[flat] = alloc.users[strongest].power_mw[flat] * t.value_sum;
        targets[flat] = std::move(t);
    });

    strategy.re_power_mw = jammer_power_split(weights, budget_mw);

    parallel_for(grid, [&](std::size_t flat) {
        const Target& t = targets[flat];
        const double g = strategy.re_power_mw[flat];
        if (g <= 0.0 || t.value_sum <= 0.0) return;
        RVec levels(static_cast<Eigen::Index>(t.values.size()));
        for (std::size_t d = 0; d < t.values.size(); ++d) {
            levels(static_cast<Eigen::Index>(d)) = g * t.values[d] / t.value_sum;
        }
        strategy.covariance[flat] =
            hermitize(t.vectors * levels.asDiagonal() * t.vectors.adjoint());
    });
    return strategy;
}

JammerStrategy barrage_strategy(const SystemConfig& cfg) {
    if (!(cfg.jammer_power_mw > 0.0)) {
        throw std::invalid_argument("barrage_strategy: budget must be positive");
    }
    const std::size_t grid = cfg.grid_size();
    const double level =
        cfg.jammer_power_mw /
        (static_cast<double>(cfg.jammer_antennas) * static_cast<double>(grid));
    JammerStrategy strategy;
    strategy.kind = JammerStrategy::Kind::barrage;
    strategy.power_budget_mw = cfg.jammer_power_mw;
    strategy.covariance.assign(
        grid, level * CMat::Identity(cfg.jammer_antennas, cfg.jammer_antennas));
    strategy.re_power_mw.assign(grid, level * cfg.jammer_antennas);
    return strategy;
}

JammerStrategy no_jammer_strategy(double budget_mw) {
    JammerStrategy strategy;
    strategy.kind = JammerStrategy::Kind::none;
    strategy.power_budget_mw = budget_mw;
    return strategy;
}

CovarianceGrid realized_covariance_grid(const JammerStrategy& strategy,
                                        const ChannelSet& channels,
                                        double noise_power_mw) {
    const std::size_t grid = channels.grid_size();
    const Eigen::Index rx = channels.jammer.empty() ? 0 : channels.jammer[0].rows();
    if (strategy.kind == JammerStrategy::Kind::none) {
        return uniform_covariance_grid(noise_power_mw * CMat::Identity(rx, rx), grid);
    }
    if (strategy.covariance.size() != grid) {
        throw std::invalid_argument("realized_covariance_grid: strategy grid mismatch");
    }
    CovarianceGrid cz(grid);
    parallel_for(grid, [&](std::size_t flat) {
        cz[flat] = noise_covariance(channels.jammer[flat], strategy.covariance[flat],
                                    noise_power_mw);
    });
    return cz;
}

std::vector<std::string> validate_strategy(const JammerStrategy& strategy,
                                           const SystemConfig& cfg) {
    std::vector<std::string> issues;
    if (strategy.kind == JammerStrategy::Kind::none) {
        if (!strategy.covariance.empty()) {
            issues.push_back("kind none must carry no covariances");
        }
        return issues;
    }
    if (strategy.covariance.size() != cfg.grid_size()) {
        issues.push_back("strategy grid size mismatch");
        return issues;
    }
    double total_mw = 0.0;
    for (std::size_t flat = 0; flat < strategy.covariance.size(); ++flat) {
        const CMat& cu = strategy.covariance[flat];
        const std::string tag = "RE #" + std::to_string(flat) + ": ";
        if (cu.rows() != cfg.jammer_antennas || cu.cols() != cfg.jammer_antennas) {
            issues.push_back(tag + "covariance dimension mismatch");
            continue;
        }
        if (hermitian_asymmetry(cu) > 1e-8) {
            issues.push_back(tag + "covariance not Hermitian");
            continue;
        }
        const double trace = std::real(cu.trace());
        const RVec eigs = hermitian_eigenvalues(cu);
        if (eigs.size() > 0 && eigs(0) < -1e-9 * std::max(trace, 1.0)) {
            issues.push_back(tag + "covariance not positive semidefinite");
        }
        total_mw += trace;
        if (strategy.kind == JammerStrategy::Kind::worst_case) {
            const double g = strategy.re_power_mw[flat];
            if (std::abs(trace - g) > 1e-9 * std::max(g, 1.0)) {
                issues.push_back(tag + "trace does not match the RE power split");
            }
        }
    }
    if (total_mw > strategy.power_budget_mw * (1.0 + 1e-9)) {
        issues.push_back("global trace budget exceeded");
    }
    return issues;
}

void dump_strategy_csv(const JammerStrategy& strategy, int num_symbols,
                       const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("dump_strategy_csv: cannot open '" + path + "'");
    }
    out << "subcarrier,symbol,trace_mw,top_eigenvalue_mw\n";
    char buf[96];
    for (std::size_t flat = 0; flat < strategy.covariance.size(); ++flat) {
        const ResourceElement re = element_at(flat, num_symbols);
        const CMat& cu = strategy.covariance[flat];
        double trace = 0.0, top = 0.0;
        if (cu.size() > 0) {
            trace = std::real(cu.trace());
            const RVec eigs = hermitian_eigenvalues(cu);
            top = eigs.size() > 0 ? eigs(eigs.size() - 1) : 0.0;
        }
        std::snprintf(buf, sizeof buf, "%d,%d,%.17g,%.17g\n", re.subcarrier,
                      re.symbol, trace, top);
        out << buf;
    }
    if (!out) {
        throw std::runtime_error("dump_strategy_csv: write failed for '" + path + "'");
    }
}

}  // namespace jamsim
