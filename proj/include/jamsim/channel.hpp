// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <string>
#include <vector>

#include "jamsim/config.hpp"
#include "jamsim/grid.hpp"
#include "jamsim/linalg.hpp"

namespace jamsim {

// One resolvable propagation path. Angles in radians within (-pi/2, pi/2];
// delay and Doppler are normalized to the subcarrier/symbol spacing.
struct PropagationPath {
    double doa_rad = 0.0;
    double dod_rad = 0.0;
    Complex gain{0.0, 0.0};
    double delay = 0.0;
    double doppler = 0.0;
};

using PathSet = std::vector<PropagationPath>;

// The circular layout: user clusters spaced 5 degrees apart starting at 0,
// the jammer cluster centered on its own direction, per-path perturbations
// drawn from U(-5, 5) degrees under the configured seed.
struct ScenarioGeometry {
    std::vector<PathSet> user_paths;
    std::vector<double> user_central_doa_rad;
    PathSet jammer_paths;
    double jammer_central_doa_rad = 0.0;
};

// Per-RE beamspace channels: user matrices are N_R x N_T, the jamming
// channel is N_R x N_J, all flat-indexed over the grid.
struct ChannelSet {
    int num_subcarriers = 0;
    int num_symbols = 0;
    std::vector<std::vector<CMat>> user;  // [q][flat]
    std::vector<CMat> jammer;             // [flat]
    ScenarioGeometry geometry;

    int num_users() const { return static_cast<int>(user.size()); }
    std::size_t grid_size() const {
        return static_cast<std::size_t>(num_subcarriers) * num_symbols;
    }

    // True per-path jammer directions-of-arrival: the sensing feed the
    // transmit design consumes.
    std::vector<double> jammer_doas_rad() const;
};

// Half-wavelength ULA response, entry m = exp(j*pi*m*sin(theta)), m 0-based.
CVec steering_vector(int antennas, double theta_rad);

// Manifold A(theta) = [a(theta_1) ... a(theta_L)], N_R x L.
CMat array_manifold(const std::vector<double>& doas_rad, int antennas);

// Per-RE path weight b = gain * exp(-j*2*pi*n*delay) * exp(+j*2*pi*k*doppler).
Complex path_coefficient(const PropagationPath& path, int subcarrier, int symbol);

ScenarioGeometry generate_scenario_geometry(const SystemConfig& cfg,
                                            double jammer_doa_deg);

// H_qnk = sum_l b_l a_NR(doa_l) a_NT(dod_l)^H over the user's paths.
std::vector<std::vector<CMat>> build_user_channels(const ScenarioGeometry& geom,
                                                   const SystemConfig& cfg);

// Same construction with N_J transmit columns for the jamming channel.
std::vector<CMat> build_jammer_channel(const ScenarioGeometry& geom,
                                       const SystemConfig& cfg);

ChannelSet build_channels(const ScenarioGeometry& geom, const SystemConfig& cfg);

// Text tensor dump for regression tests: a dimensions header followed by
// row-major "re im" pairs per matrix. Round-trips bit-exactly via hex floats.
void dump_channels(const ChannelSet& channels, const std::string& path);
ChannelSet load_channels(const std::string& path);

}  // namespace jamsim
