// SPDX-License-Identifier: Apache-2.0
#include "jamsim/linalg.hpp"

#include <cmath>
#include <iostream>
#include <limits>
#include <stdexcept>

namespace jamsim {

double hermitian_asymmetry(const CMat& m) {
    if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    return (m - m.adjoint()).cwiseAbs().maxCoeff() / scale;
}

CMat solve_hpd(const CMat& m, const CMat& rhs) {
    Eigen::LLT<CMat> llt(m);
    if (llt.info() == Eigen::Success) {
        return llt.solve(rhs);
    }
    const double jitter = 1e-12 * std::real(m.trace()) / static_cast<double>(m.rows());
    std::cerr << "jamsim: warning: Cholesky failed, retrying with jitter "
              << jitter << "\n";
    CMat jittered = m + jitter * CMat::Identity(m.rows(), m.cols());
    llt.compute(jittered);
    if (llt.info() != Eigen::Success) {
        throw std::runtime_error(
            "solve_hpd: matrix is not positive definite (noise power zero?)");
    }
    return llt.solve(rhs);
}

CMat pseudo_inverse(const CMat& m, double rel_cutoff) {
    Eigen::JacobiSVD<CMat> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) <= 0.0) {
        return CMat::Zero(m.cols(), m.rows());
    }
    if (rel_cutoff <= 0.0) {
        rel_cutoff = static_cast<double>(std::max(m.rows(), m.cols())) *
                     std::numeric_limits<double>::epsilon();
    }
    const double cutoff = rel_cutoff * sv(0);
    RVec inv_sv = RVec::Zero(sv.size());
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > cutoff) inv_sv(i) = 1.0 / sv(i);
    }
    return svd.matrixV() * inv_sv.asDiagonal() * svd.matrixU().adjoint();
}

RVec hermitian_eigenvalues(const CMat& m) {
    Eigen::SelfAdjointEigenSolver<CMat> es(m, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("hermitian_eigenvalues: solver failed");
    }
    return es.eigenvalues();
}

int numerical_rank(const CMat& m, double tol_rel) {
    Eigen::JacobiSVD<CMat> svd(m);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0) return 0;
    const double cutoff = tol_rel * sv(0);
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > cutoff) ++rank;
    }
    return rank;
}

double pairwise_sum(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n <= 8) {
        double acc = 0.0;
        for (double v : values) acc += v;
        return acc;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

}  // namespace jamsim
