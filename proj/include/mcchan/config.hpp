#pragma once

// Flat `key = value` config files (# comments, no nesting). Keys carry their
// units; unknown keys are rejected and every downstream invariant is checked
// eagerly with the offending key named.

#include <array>
#include <cstdint>
#include <string>

#include "mcchan/simulator.hpp"

namespace mcchan {

struct RunConfig {
    // medium
    double temperature_k = 0;
    double viscosity = 0;
    // species radii [m] and optional diffusion overrides [m^2/s]
    double radius_a = 0, radius_e = 0, radius_ea = 0;
    double diff_a = 0, diff_e = 0, diff_ea = 0;  // 0 = derive via Stokes-Einstein
    // rates
    double k1 = 0, k_minus1 = 0, k2 = 0;
    // counts and geometry
    double n_a = 0, n_e = 0;
    double enz_box_side = 0;     // m
    double tx_rx_distance = 0;   // m
    std::array<double, 3> tx_rx_direction{1, 0, 0};
    // receiver (dimensionless)
    bool receiver_is_sphere = true;
    double receiver_radius_star = 0;
    std::array<double, 6> receiver_box_star{};  // xi xf yi yf zi zf
    // reference set overrides (0 = default)
    double ref_distance = 0;   // m, default tx_rx_distance
    double ref_conc_a = 0;     // molecule/m^3, default n_a
    // simulation
    double dt = 0;  // s
    std::uint64_t seed = 0;
    int n_trials = 0;
    double t_star_min = 0, t_star_max = 0;
    int t_star_points = 0;
    bool unbind_colocated = false;

    SystemParams to_system_params() const;
    ReferenceSet to_reference_set() const;
    SimConfig to_sim_config() const;  // sample times = log-spaced t* grid, redimensionalized
};

// Throws std::invalid_argument with line/key diagnostics.
RunConfig parse_config(const std::string& text);

RunConfig load_config(const std::string& path);

// FNV-1a over the canonicalized (sorted, whitespace-stripped) key=value lines.
std::uint64_t config_hash(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace mcchan
