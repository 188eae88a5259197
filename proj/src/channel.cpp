// SPDX-License-Identifier: Apache-2.0
#include "jamsim/channel.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include "jamsim/parallel.hpp"
#include "jamsim/rng.hpp"
#include "jamsim/units.hpp"

namespace jamsim {

std::vector<double> ChannelSet::jammer_doas_rad() const {
    std::vector<double> doas;
    doas.reserve(geometry.jammer_paths.size());
    for (const auto& p : geometry.jammer_paths) doas.push_back(p.doa_rad);
    return doas;
}

CVec steering_vector(int antennas, double theta_rad) {
    if (antennas < 1) {
        throw std::invalid_argument("steering_vector: need at least one antenna");
    }
    CVec a(antennas);
    const double phase_step = M_PI * std::sin(theta_rad);
    for (int m = 0; m < antennas; ++m) {
        a(m) = std::polar(1.0, phase_step * m);
    }
    return a;
}

CMat array_manifold(const std::vector<double>& doas_rad, int antennas) {
    CMat manifold(antennas, static_cast<Eigen::Index>(doas_rad.size()));
    for (std::size_t l = 0; l < doas_rad.size(); ++l) {
        manifold.col(static_cast<Eigen::Index>(l)) = steering_vector(antennas, doas_rad[l]);
    }
    return manifold;
}

Complex path_coefficient(const PropagationPath& path, int subcarrier, int symbol) {
    const double phase = -2.0 * M_PI * subcarrier * path.delay +
                         2.0 * M_PI * symbol * path.doppler;
    return path.gain * std::polar(1.0, phase);
}

namespace {

constexpr double kClusterSpacingDeg = 5.0;
constexpr double kPerturbationDeg = 5.0;
// Departure-side scattering is unconstrained by the receive geometry; a wide
// spread keeps the transmit array able to address paths individually.
constexpr double kDodSpreadDeg = 45.0;

PathSet draw_paths(double central_deg, double path_spacing_deg, int count,
                   std::uint64_t seed, SeedTag doa_tag, SeedTag dod_tag,
                   SeedTag gain_tag, std::uint64_t entity, bool rayleigh_gains,
                   const std::vector<double>& delays,
                   const std::vector<double>& dopplers) {
    PathSet paths(count);
    for (int l = 0; l < count; ++l) {
        const auto lu = static_cast<std::uint64_t>(l);
        std::mt19937_64 doa_rng(derive_seed(seed, {doa_tag, entity, lu}));
        std::mt19937_64 dod_rng(derive_seed(seed, {dod_tag, entity, lu}));
        std::mt19937_64 gain_rng(derive_seed(seed, {gain_tag, entity, lu}));
        auto& p = paths[l];
        p.doa_rad = deg_to_rad(central_deg + path_spacing_deg * l +
                               uniform_range(doa_rng, -kPerturbationDeg,
                                             kPerturbationDeg));
        p.dod_rad = deg_to_rad(uniform_range(dod_rng, -kDodSpreadDeg, kDodSpreadDeg));
        // Unit-variance gains, so E||H||^2 = L * N_R * N_T. User paths fade
        // (complex Gaussian); jammer paths carry full power with random
        // phase, the regime the direction-only surrogate models.
        p.gain = rayleigh_gains ? complex_normal(gain_rng, 1.0)
                                : std::polar(1.0, 2.0 * M_PI * uniform01(gain_rng));
        if (!delays.empty()) p.delay = delays[l];
        if (!dopplers.empty()) p.doppler = dopplers[l];
    }
    return paths;
}

// Per-RE beamspace sum for one entity.
std::vector<CMat> synthesize(const PathSet& paths, int rx, int tx,
                             int num_subcarriers, int num_symbols) {
    std::vector<CMat> out(static_cast<std::size_t>(num_subcarriers) * num_symbols);

    std::vector<CMat> rank_one(paths.size());
    for (std::size_t l = 0; l < paths.size(); ++l) {
        rank_one[l] = steering_vector(rx, paths[l].doa_rad) *
                      steering_vector(tx, paths[l].dod_rad).adjoint();
    }

    parallel_for(out.size(), [&](std::size_t flat) {
        const ResourceElement re = element_at(flat, num_symbols);
        CMat h = CMat::Zero(rx, tx);
        for (std::size_t l = 0; l < paths.size(); ++l) {
            h += path_coefficient(paths[l], re.subcarrier, re.symbol) * rank_one[l];
        }
        out[flat] = std::move(h);
    });
    return out;
}

}  // namespace

ScenarioGeometry generate_scenario_geometry(const SystemConfig& cfg,
                                            double jammer_doa_deg) {
    if (cfg.num_users < 1) {
        throw std::invalid_argument("generate_scenario_geometry: need >= 1 user");
    }
    ScenarioGeometry geom;
    geom.user_paths.resize(cfg.num_users);
    geom.user_central_doa_rad.resize(cfg.num_users);
    for (int q = 0; q < cfg.num_users; ++q) {
        const double central_deg = kClusterSpacingDeg * q;
        geom.user_central_doa_rad[q] = deg_to_rad(central_deg);
        geom.user_paths[q] = draw_paths(central_deg, 0.0, cfg.user_paths, cfg.seed,
                                        kTagUserDoa, kTagUserDod, kTagUserGain,
                                        static_cast<std::uint64_t>(q),
                                        /*rayleigh_gains=*/true,
                                        cfg.user_path_delays, cfg.user_path_dopplers);
    }
    // Jammer paths mirror the user layout: 5-degree spacing from the central
    // direction plus the same per-path perturbation.
    geom.jammer_central_doa_rad = deg_to_rad(jammer_doa_deg);
    geom.jammer_paths = draw_paths(jammer_doa_deg, kClusterSpacingDeg,
                                   cfg.jammer_paths, cfg.seed, kTagJammerDoa,
                                   kTagJammerDod, kTagJammerGain,
                                   /*entity=*/0, /*rayleigh_gains=*/false,
                                   cfg.jammer_path_delays,
                                   cfg.jammer_path_dopplers);
    return geom;
}

std::vector<std::vector<CMat>> build_user_channels(const ScenarioGeometry& geom,
                                                   const SystemConfig& cfg) {
    std::vector<std::vector<CMat>> channels(geom.user_paths.size());
    for (std::size_t q = 0; q < geom.user_paths.size(); ++q) {
        channels[q] = synthesize(geom.user_paths[q], cfg.rx_antennas, cfg.tx_antennas,
                                 cfg.num_subcarriers, cfg.num_symbols);
    }
    return channels;
}

std::vector<CMat> build_jammer_channel(const ScenarioGeometry& geom,
                                       const SystemConfig& cfg) {
    return synthesize(geom.jammer_paths, cfg.rx_antennas, cfg.jammer_antennas,
                      cfg.num_subcarriers, cfg.num_symbols);
}

ChannelSet build_channels(const ScenarioGeometry& geom, const SystemConfig& cfg) {
    ChannelSet set;
    set.num_subcarriers = cfg.num_subcarriers;
    set.num_symbols = cfg.num_symbols;
    set.geometry = geom;
    set.user = build_user_channels(geom, cfg);
    set.jammer = build_jammer_channel(geom, cfg);
    return set;
}

namespace {

void write_matrix(std::ofstream& out, const CMat& m) {
    char buf[64];
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            std::snprintf(buf, sizeof buf, "%a %a", m(r, c).real(), m(r, c).imag());
            out << buf << (c + 1 < m.cols() ? "  " : "");
        }
        out << "\n";
    }
}

// operator>> does not accept hex floats, so parse tokens with strtod.
double read_value(std::ifstream& in) {
    std::string token;
    if (!(in >> token)) {
        throw std::runtime_error("load_channels: truncated tensor data");
    }
    char* end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    if (end == token.c_str()) {
        throw std::runtime_error("load_channels: bad numeric token '" + token + "'");
    }
    return v;
}

CMat read_matrix(std::ifstream& in, int rows, int cols) {
    CMat m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            const double re = read_value(in);
            const double im = read_value(in);
            m(r, c) = Complex(re, im);
        }
    }
    return m;
}

}  // namespace

void dump_channels(const ChannelSet& channels, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("dump_channels: cannot open '" + path + "'");
    }
    const int rx = channels.jammer.empty() ? 0 : static_cast<int>(channels.jammer[0].rows());
    const int tx = channels.user.empty() || channels.user[0].empty()
                       ? 0
                       : static_cast<int>(channels.user[0][0].cols());
    const int nj = channels.jammer.empty() ? 0 : static_cast<int>(channels.jammer[0].cols());
    out << "jamsim-channels 1\n";
    out << channels.num_users() << " " << channels.num_subcarriers << " "
        << channels.num_symbols << " " << rx << " " << tx << " " << nj << "\n";
    for (const auto& per_user : channels.user) {
        for (const auto& h : per_user) write_matrix(out, h);
    }
    for (const auto& g : channels.jammer) write_matrix(out, g);
    if (!out) {
        throw std::runtime_error("dump_channels: write failed for '" + path + "'");
    }
}

ChannelSet load_channels(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("load_channels: cannot open '" + path + "'");
    }
    std::string magic;
    int version = 0;
    in >> magic >> version;
    if (magic != "jamsim-channels" || version != 1) {
        throw std::runtime_error("load_channels: bad header in '" + path + "'");
    }
    int users = 0, n = 0, k = 0, rx = 0, tx = 0, nj = 0;
    if (!(in >> users >> n >> k >> rx >> tx >> nj)) {
        throw std::runtime_error("load_channels: bad dimensions in '" + path + "'");
    }
    ChannelSet set;
    set.num_subcarriers = n;
    set.num_symbols = k;
    const std::size_t grid = static_cast<std::size_t>(n) * k;
    set.user.resize(users);
    for (auto& per_user : set.user) {
        per_user.reserve(grid);
        for (std::size_t f = 0; f < grid; ++f) per_user.push_back(read_matrix(in, rx, tx));
    }
    set.jammer.reserve(grid);
    for (std::size_t f = 0; f < grid; ++f) set.jammer.push_back(read_matrix(in, rx, nj));
    return set;
}

}  // namespace jamsim
