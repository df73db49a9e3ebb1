#pragma once

// Closed-form expected receiver counts for an impulsive point emission under
// free diffusion, the uniform-concentration approximation and its deviation,
// the enzyme lower bound, and a direct quadrature oracle for the spherical
// closed form.
//
// Everything here works in dimensionless variables: one dimensionless molecule
// is emitted from the origin at t* = 0, distances are in units of the
// reference distance L and times in units of L^2/D_A.

#include <optional>

#include "mcchan/geometry.hpp"
#include "mcchan/physchem.hpp"

namespace mcchan {

// Point concentration (4 pi t*)^(-3/2) exp(-d*^2 / (4 t*)).
double point_concentration(double dist, double t);

// Uniform-concentration estimate: center concentration times receiver volume.
double uniform_count(const ReceiverGeometry& geom, double t);

// Expected count in a rectangular box, product of erf differences.
double rect_count(const ReceiverGeometry::Box& box, double t);

// Expected count in a sphere of radius r_obs centered dist away from the
// transmitter. dist must be > 0.
double sphere_count(double dist, double r_obs, double t);

// Direct Gauss-Legendre product quadrature of the defining triple integral,
// independent of the closed form above. `resolution` scales the node count
// per dimension (16 nodes at resolution 1).
double sphere_count_quadrature(double dist, double r_obs, double t, int resolution = 2);

// Exact count for either receiver shape.
double exact_count(const ReceiverGeometry& geom, double t);

// (uniform - exact) / exact. Empty when the exact count underflows
// (indeterminate) rather than propagating NaN/Inf.
std::optional<double> uniform_deviation(const ReceiverGeometry& geom, double t);

struct LowerBoundParams {
    double alpha;     // gamma_1a, dimensionless decay
    double dist;      // |r*_{a,0}|
    double volume;    // V_obs*
};

// Lower bound with enzymes: V* (4 pi t*)^(-3/2) exp(-alpha t* - d*^2/(4 t*)).
// alpha = 0 reduces exactly to uniform_count.
double enzyme_lower_bound_count(const LowerBoundParams& p, double t);

struct PeakResult {
    double t_max;       // s
    double peak_count;  // molecules (dimensional)
};

// Maximizer of N_A V_obs (4 pi D_A t)^(-3/2) exp(-k1 C_Etot t - |r0|^2/(4 D_A t))
// over t > 0, from the stationarity condition a t^2 + (3/2) t - b = 0.
PeakResult lower_bound_peak(const SystemParams& params, const ReferenceSet& refs);

}  // namespace mcchan
