#pragma once

// Data-parallel inner loops of the particle engine, with a scalar reference
// implementation and an AVX2 variant selected at runtime. Both variants are
// written to produce bit-identical results (no FMA contraction, same
// reflection formula), so kernel choice never changes simulation output.

#include <cstddef>
#include <cstdint>
#include <string>

namespace mcchan::kernels {

struct Ops {
    // x[i] += scale * noise[i]
    void (*scaled_add)(double* x, const double* noise, double scale, std::size_t n);
    // number of points with (x,y,z) within radius^2 of center (boundary included)
    std::size_t (*count_in_sphere)(const double* x, const double* y, const double* z,
                                   std::size_t n, double cx, double cy, double cz,
                                   double radius_sq);
    // number of points with lo <= v <= hi on all three axes
    std::size_t (*count_in_box)(const double* x, const double* y, const double* z,
                                std::size_t n, const double* lo, const double* hi);
    // specular fold of every coordinate into [lo, hi]; handles arbitrary overshoot
    void (*reflect_into_interval)(double* x, std::size_t n, double lo, double hi);
    const char* name;
};

const Ops& scalar();

// Best variant for this machine (AVX2 when compiled in and supported).
const Ops& active();

// Force a variant for tests or the CLI: "scalar", "avx2", or "auto".
// Throws std::invalid_argument for unknown or unavailable names.
void select(const std::string& name);

bool avx2_available();

}  // namespace mcchan::kernels
