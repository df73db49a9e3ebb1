#include "mcchan/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace mcchan::kernels {
namespace {

void scaled_add_scalar(double* x, const double* noise, double scale, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] += scale * noise[i];
}

std::size_t count_in_sphere_scalar(const double* x, const double* y, const double* z,
                                   std::size_t n, double cx, double cy, double cz,
                                   double radius_sq) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double dx = x[i] - cx, dy = y[i] - cy, dz = z[i] - cz;
        double d2 = (dx * dx) + (dy * dy) + (dz * dz);
        count += (d2 <= radius_sq);
    }
    return count;
}

std::size_t count_in_box_scalar(const double* x, const double* y, const double* z,
                                std::size_t n, const double* lo, const double* hi) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        bool in = x[i] >= lo[0] && x[i] <= hi[0] && y[i] >= lo[1] && y[i] <= hi[1] &&
                  z[i] >= lo[2] && z[i] <= hi[2];
        count += in;
    }
    return count;
}

void reflect_into_interval_scalar(double* x, std::size_t n, double lo, double hi) {
    const double len = hi - lo;
    const double two_len = 2.0 * len;
    for (std::size_t i = 0; i < n; ++i) {
        double v = x[i];
        if (v >= lo && v <= hi) continue;
        double d = v - lo;
        double p = d - two_len * std::floor(d / two_len);
        double y = p <= len ? p : two_len - p;
        y = std::min(std::max(y, 0.0), len);
        x[i] = lo + y;
    }
}

}  // namespace

const Ops& scalar() {
    static const Ops ops{scaled_add_scalar, count_in_sphere_scalar, count_in_box_scalar,
                         reflect_into_interval_scalar, "scalar"};
    return ops;
}

}  // namespace mcchan::kernels
