#pragma once

// Particle-based stochastic reaction-diffusion engine. Free Brownian motion
// of A, E and EA, Michaelis-Menten binding / unbinding / degradation, an
// enzyme container impermeable to E (EA decomposes at the wall, A passes
// freely), and passive receiver counting.
//
// A single trial mutates its own state sequentially; trials are independent
// and may run concurrently, each with its own RNG stream derived from
// (seed, trial index).

#include <cstdint>
#include <vector>

#include "mcchan/physchem.hpp"
#include "mcchan/rng.hpp"

namespace mcchan {

struct SimConfig {
    SystemParams params{};
    ReferenceSet refs{};
    double dt = 0;                     // s
    std::vector<double> sample_times;  // s, strictly increasing, > 0
    std::uint64_t seed = 0;
    // Unbound A placed on a sphere of radius r_B around the enzyme by default;
    // true co-locates it with the enzyme instead (A/B comparison).
    bool unbind_colocated = false;

    // Per-step binding volume matching the mass-action rate: (3 k1 dt / 4 pi)^(1/3).
    double binding_radius() const;

    void validate() const;  // throws std::invalid_argument
};

struct Tallies {
    std::int64_t a_free = 0;
    std::int64_t e_free = 0;
    std::int64_t ea = 0;
    std::int64_t a_degraded = 0;
};

struct SimState {
    // SoA positions [m], per species
    std::vector<double> ax, ay, az;
    std::vector<double> ex, ey, ez;
    std::vector<double> eax, eay, eaz;
    std::int64_t n_degraded = 0;
    std::uint64_t step_index = 0;
    Xoshiro256 rng;

    // scratch, reused across steps
    std::vector<double> noise;
    std::vector<std::uint32_t> cell_of;
    std::vector<std::uint32_t> cell_start;
    std::vector<std::uint32_t> cell_items;
    std::vector<std::uint8_t> e_bound;

    Tallies tallies() const {
        return {static_cast<std::int64_t>(ax.size()), static_cast<std::int64_t>(ex.size()),
                static_cast<std::int64_t>(eax.size()), n_degraded};
    }
};

SimState init_sim(const SimConfig& cfg, std::uint64_t trial_index = 0);

// One Gaussian displacement per particle coordinate, variance 2 D_S dt.
void diffuse(SimState& st, const SimConfig& cfg);

// E reflected at the container wall, EA decomposed to E (inside) + A (outside),
// A unaffected.
void apply_boundaries(SimState& st, const SimConfig& cfg);

// Each EA reacts with probability 1 - exp(-(k-1 + k2) dt); unbind with
// probability gamma_2a, degrade otherwise.
void react_unimolecular(SimState& st, const SimConfig& cfg);

// Every free A strictly within r_B of a free E binds to the nearest one;
// each E accepts at most one A per step.
void react_bimolecular(SimState& st, const SimConfig& cfg);

// diffuse -> boundaries -> unimolecular -> bimolecular
void advance(SimState& st, const SimConfig& cfg);

// Free A inside the receiver volume (boundary included); passive.
std::int64_t observe(const SimState& st, const ReceiverGeometry& receiver,
                     const ReferenceSet& refs, const SystemParams& params);

// Requested sample times snapped to the nearest integer step.
std::vector<std::uint64_t> sample_steps_for(const SimConfig& cfg);

struct TrialRow {
    std::vector<double> realized_times;   // s, step-aligned
    std::vector<std::int64_t> counts;     // receiver count at each sample
};

TrialRow run_trial(const SimConfig& cfg, std::uint64_t trial_index);

}  // namespace mcchan
