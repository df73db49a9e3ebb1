#pragma once

#include <cmath>
#include <stdexcept>
#include <variant>

namespace mcchan {

// Passive receiver volume, in dimensionless coordinates with the transmitter
// at the origin. The sphere is described by its radius and center distance;
// the box by explicit bounds (so it need not be centered on an axis).
struct ReceiverGeometry {
    struct Sphere {
        double radius;  // r_obs*
    };
    struct Box {
        double xi, xf, yi, yf, zi, zf;
    };

    std::variant<Sphere, Box> shape{Sphere{0.0}};
    double center_distance = 0.0;  // |r0*|

    static ReceiverGeometry sphere(double center_distance, double radius) {
        if (radius <= 0) throw std::invalid_argument("receiver sphere radius must be > 0");
        if (center_distance < 0) throw std::invalid_argument("receiver center distance must be >= 0");
        return {Sphere{radius}, center_distance};
    }

    static ReceiverGeometry box(double xi, double xf, double yi, double yf, double zi, double zf) {
        if (!(xi < xf && yi < yf && zi < zf))
            throw std::invalid_argument("receiver box bounds must be ordered (i < f per axis)");
        double cx = 0.5 * (xi + xf), cy = 0.5 * (yi + yf), cz = 0.5 * (zi + zf);
        return {Box{xi, xf, yi, yf, zi, zf}, std::sqrt(cx * cx + cy * cy + cz * cz)};
    }

    bool is_sphere() const { return std::holds_alternative<Sphere>(shape); }

    double volume() const {
        if (auto* s = std::get_if<Sphere>(&shape))
            return 4.0 / 3.0 * M_PI * s->radius * s->radius * s->radius;
        auto& b = std::get<Box>(shape);
        return (b.xf - b.xi) * (b.yf - b.yi) * (b.zf - b.zi);
    }

    // Largest distance from the receiver center to its surface.
    double circumradius() const {
        if (auto* s = std::get_if<Sphere>(&shape)) return s->radius;
        auto& b = std::get<Box>(shape);
        double hx = 0.5 * (b.xf - b.xi), hy = 0.5 * (b.yf - b.yi), hz = 0.5 * (b.zf - b.zi);
        return std::sqrt(hx * hx + hy * hy + hz * hz);
    }
};

}  // namespace mcchan
