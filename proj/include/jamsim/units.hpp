// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <stdexcept>

namespace jamsim {

// Power levels cross the dBm boundary exactly once, at configuration load.
// Everything downstream works in linear milliwatts.
inline double dbm_to_mw(double dbm) {
    if (!std::isfinite(dbm)) {
        throw std::invalid_argument("dbm_to_mw: non-finite input");
    }
    return std::pow(10.0, dbm / 10.0);
}

inline double mw_to_dbm(double mw) {
    if (!(mw > 0.0) || !std::isfinite(mw)) {
        throw std::invalid_argument("mw_to_dbm: input must be positive and finite");
    }
    return 10.0 * std::log10(mw);
}

inline double deg_to_rad(double deg) { return deg * M_PI / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / M_PI; }

}  // namespace jamsim
