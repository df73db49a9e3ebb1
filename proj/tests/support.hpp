#pragma once

// Shared in-code parameter presets for the test suites, so unit tests do not
// depend on files outside the build tree.

#include <cstdio>
#include <string>

#include "mcchan/config.hpp"

namespace mcchan::testing {

inline std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Full-size enzyme channel, 1 um container.
inline std::string full_config_text(double n_a, double n_e, double k1) {
    std::string s;
    s += "temperature_K = 298\n";
    s += "viscosity_kg_per_m_s = 1e-3\n";
    s += "radius_A_nm = 0.5\nradius_E_nm = 2.5\nradius_EA_nm = 3\n";
    s += "k1_m3_per_molecule_s = " + mcchan::testing::num(k1) + "\n";
    s += "kminus1_per_s = 2e4\nk2_per_s = 2e6\n";
    s += "n_A = " + mcchan::testing::num(n_a) + "\n";
    s += "n_E = " + mcchan::testing::num(n_e) + "\n";
    s += "enz_box_side_nm = 1000\n";
    s += "tx_rx_distance_nm = 212.13203435596427\n";
    s += "receiver_shape = sphere\nreceiver_radius_star = 0.15\n";
    s += "dt_us = 0.5\nseed = 7\nn_trials = 10\n";
    s += "t_star_min = 0.05\nt_star_max = 0.5\nt_star_points = 6\n";
    return s;
}

inline RunConfig system1() { return parse_config(full_config_text(1e4, 2e5, 2e-19)); }
inline RunConfig system2() { return parse_config(full_config_text(2e4, 4e5, 1e-19)); }

// Scaled-down variant: fewer molecules in a proportionally smaller container,
// same enzyme concentration, receiver on the cube diagonal so it fits.
inline std::string small_config_text(double n_a, double n_e, double k1) {
    std::string s;
    s += "temperature_K = 298\n";
    s += "viscosity_kg_per_m_s = 1e-3\n";
    s += "radius_A_nm = 0.5\nradius_E_nm = 2.5\nradius_EA_nm = 3\n";
    s += "k1_m3_per_molecule_s = " + mcchan::testing::num(k1) + "\n";
    s += "kminus1_per_s = 2e4\nk2_per_s = 2e6\n";
    s += "n_A = " + mcchan::testing::num(n_a) + "\n";
    s += "n_E = " + mcchan::testing::num(n_e) + "\n";
    s += "enz_box_side_nm = 464.158883361278\n";
    s += "tx_rx_distance_nm = 212.13203435596427\n";
    s += "tx_rx_direction = 1,1,1\n";
    s += "receiver_shape = sphere\nreceiver_radius_star = 0.15\n";
    s += "dt_us = 0.5\nseed = 11\nn_trials = 10\n";
    s += "t_star_min = 0.05\nt_star_max = 0.5\nt_star_points = 6\n";
    return s;
}

inline RunConfig system1_small() { return parse_config(small_config_text(1e3, 2e4, 2e-19)); }
inline RunConfig system2_small() { return parse_config(small_config_text(2e3, 4e4, 1e-19)); }

}  // namespace mcchan::testing
