#pragma once

// Dimensional bookkeeping for the diffusive molecular-communication channel:
// diffusion coefficients, reference sets, dimensionless conversion, the
// dimensionless constants of the reaction-diffusion system, and the
// dimensional-homology predicate.
//
// All types here are immutable values after construction and safe to share
// across threads.

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "mcchan/geometry.hpp"

namespace mcchan {

// 2019 SI exact value [J/K].
inline constexpr double k_boltzmann = 1.380649e-23;

enum class SpeciesTag { A, E, EA };

struct Medium {
    double temperature;  // K
    double viscosity;    // kg m^-1 s^-1
};

struct Species {
    double radius;     // m
    double diffusion;  // m^2/s, Stokes-Einstein unless overridden
};

struct ReactionRates {
    double k1;        // molecule^-1 m^3 s^-1 (binding)
    double k_minus1;  // s^-1 (unbinding)
    double k2;        // s^-1 (degradation)
};

// D = kB T / (6 pi eta R). Throws std::domain_error on non-positive input.
double stokes_einstein(const Medium& medium, double radius);

struct SystemParams {
    Medium medium{};
    Species species_a{};   // information molecule
    Species species_e{};   // enzyme
    Species species_ea{};  // bound intermediate
    ReactionRates rates{};
    double n_a = 0;                           // molecules emitted per impulse
    double n_e = 0;                           // enzymes in the container
    double enz_box_side = 0;                  // m, cube centered at the origin
    ReceiverGeometry receiver{};              // dimensionless, see geometry.hpp
    double tx_rx_distance = 0;                // m, |r0|
    std::array<double, 3> rx_direction{1, 0, 0};  // unit vector toward receiver center

    // Throws std::invalid_argument with the offending field named.
    void validate(double ref_distance) const;
};

// Reference quantities used to nondimensionalize one system.
struct ReferenceSet {
    double distance;    // L [m]
    double conc_a;      // C0 [molecule/m^3]
    double conc_e_tot;  // N_E / V_enz [molecule/m^3]; 0 only for enzyme-free systems
    double n_ref;       // molecules, = N_A

    // L = |r0|, C0 = N_A molecule/m^3, C_Etot = N_E / V_enz, N_ref = N_A.
    static ReferenceSet from_params(const SystemParams& p);
};

struct DimensionlessConstants {
    double gamma_1a;        // L^2 k1 C_Etot / D_A
    double gamma_2a;        // k-1 / (k-1 + k2)
    double gamma_e;         // L^2 k1 C0 / D_E
    double gamma_ea;        // L^2 (k-1 + k2) / D_EA
    double gamma_1a_bound;  // decay constant of the bounding system; equals gamma_1a
};

DimensionlessConstants dimensionless_constants(const SystemParams& p, const ReferenceSet& refs);

// True iff every constant matches within rel_tol relative (absolute when one
// side is zero).
bool is_homologous(const DimensionlessConstants& a, const DimensionlessConstants& b,
                   double rel_tol = 1e-9);

enum class Quantity { Concentration, Time, Coordinate, Count };

// Dimensional -> dimensionless per the reference set. The species tag selects
// the diffusion coefficient (time) and the reference concentration
// (concentration); it is ignored for coordinates and counts.
double nondim(Quantity q, SpeciesTag s, double value, const ReferenceSet& refs,
              const SystemParams& p);

// Exact inverse of nondim.
double redim(Quantity q, SpeciesTag s, double value, const ReferenceSet& refs,
             const SystemParams& p);

}  // namespace mcchan
