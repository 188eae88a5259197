// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace jamsim {

inline constexpr int kConfigSchemaVersion = 1;

// Scenario parameters. Powers are linear milliwatts internally; the JSON
// boundary speaks dBm and degrees (see load_config).
struct SystemConfig {
    int num_users = 3;        // Q
    int num_subcarriers = 16; // N
    int num_symbols = 4;      // K
    int tx_antennas = 8;      // per-user transmit array size
    int rx_antennas = 16;     // base-station array size
    int jammer_antennas = 64;

    double user_power_mw = 3.1622776601683795;   // 5 dBm budget per user
    double jammer_power_mw = 1000.0;             // 30 dBm global budget
    double noise_power_mw = 0.5011872336272722;  // -3 dBm per RE
    double resilience_eta = 10.0;                // surrogate weight, linear scale

    int user_paths = 6;    // resolvable paths per user channel
    int jammer_paths = 3;  // resolvable paths of the jamming channel

    double jammer_doa_deg = 2.0;  // first jammer path direction

    // Optional per-path normalized delays/Dopplers, applied to every user
    // (and the jammer via the matching arrays). Empty means flat in (n, k).
    std::vector<double> user_path_delays;
    std::vector<double> user_path_dopplers;
    std::vector<double> jammer_path_delays;
    std::vector<double> jammer_path_dopplers;

    std::uint64_t seed = 1;

    std::size_t grid_size() const {
        return static_cast<std::size_t>(num_subcarriers) * num_symbols;
    }
};

// Named presets. desk_scale keeps CI fast; paper_defaults is the full
// evaluation grid (N=64, K=14, Q=3).
SystemConfig desk_scale_config();
SystemConfig paper_defaults_config();

// Empty result means valid. Checks counts >= 1, powers >= 0, eta >= 0,
// Q <= N*K, and path-array lengths.
std::vector<std::string> validate_config(const SystemConfig& cfg);

// Reads a JSON scenario file. Keys mirror the field names above with powers
// as *_dbm and angles in degrees; requires schema_version == 1. The two
// preset names ("desk-scale", "paper-defaults") are accepted in place of a
// path. Throws std::runtime_error with file context on failure.
SystemConfig load_config(const std::string& path_or_preset);

// Serializes cfg in the same schema (powers back in dBm).
std::string config_to_json(const SystemConfig& cfg);

}  // namespace jamsim
