#include "mcchan/analytic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <vector>

namespace mcchan {

double point_concentration(double dist, double t) {
    if (t <= 0) throw std::domain_error("t* must be > 0");
    return std::pow(4.0 * M_PI * t, -1.5) * std::exp(-dist * dist / (4.0 * t));
}

double uniform_count(const ReceiverGeometry& geom, double t) {
    return point_concentration(geom.center_distance, t) * geom.volume();
}

double rect_count(const ReceiverGeometry::Box& box, double t) {
    if (t <= 0) throw std::domain_error("t* must be > 0");
    double s = 2.0 * std::sqrt(t);
    return 0.125 * (std::erf(box.xf / s) - std::erf(box.xi / s)) *
           (std::erf(box.yf / s) - std::erf(box.yi / s)) *
           (std::erf(box.zf / s) - std::erf(box.zi / s));
}

double sphere_count(double dist, double r_obs, double t) {
    if (t <= 0) throw std::domain_error("t* must be > 0");
    if (r_obs <= 0) throw std::domain_error("r_obs* must be > 0");
    if (dist <= 0) throw std::domain_error("dist* must be > 0");
    double s = 2.0 * std::sqrt(t);
    // erfc form of (1/2)[erf((r-d)/s) + erf((r+d)/s)]; the erf form cancels
    // catastrophically when the receiver is far outside the cloud.
    double erf_term = 0.5 * (std::erfc((dist - r_obs) / s) - std::erfc((dist + r_obs) / s));
    double exp_term = (1.0 / dist) * std::sqrt(t / M_PI) *
                      (std::exp(-(dist + r_obs) * (dist + r_obs) / (4.0 * t)) -
                       std::exp(-(dist - r_obs) * (dist - r_obs) / (4.0 * t)));
    return erf_term + exp_term;
}

namespace {

// Gauss-Legendre nodes/weights on [-1, 1], cached per order.
const std::vector<std::pair<double, double>>& gauss_legendre(int n) {
    static std::map<int, std::vector<std::pair<double, double>>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::vector<std::pair<double, double>> nw(n);
    for (int i = 0; i < n; ++i) {
        // Newton iteration from the Chebyshev estimate.
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        nw[i] = {x, 2.0 / ((1.0 - x * x) * dp * dp)};
    }
    return cache.emplace(n, std::move(nw)).first->second;
}

}  // namespace

double sphere_count_quadrature(double dist, double r_obs, double t, int resolution) {
    if (t <= 0) throw std::domain_error("t* must be > 0");
    if (r_obs <= 0) throw std::domain_error("r_obs* must be > 0");
    if (dist <= 0) throw std::domain_error("dist* must be > 0");
    if (resolution < 1) throw std::domain_error("resolution must be >= 1");
    const int n = 16 * resolution;
    const auto& nw = gauss_legendre(n);

    // Triple integral over (rho, theta, phi) of the shifted Gaussian cloud,
    // receiver centered at the origin, source at distance `dist` on the x axis.
    const double inv4t = 1.0 / (4.0 * t);
    const double pref = std::pow(4.0 * M_PI * t, -1.5);
    double total = 0.0;
    for (const auto& [xr, wr] : nw) {
        double rho = 0.5 * r_obs * (xr + 1.0);
        double wrho = 0.5 * r_obs * wr;
        double radial = rho * rho * std::exp(-(rho * rho + dist * dist) * inv4t);
        double cross = rho * dist * 2.0 * inv4t;  // rho d / (2t)
        double theta_sum = 0.0;
        for (const auto& [xt, wt] : nw) {
            double theta = 0.5 * M_PI * (xt + 1.0);
            double wth = 0.5 * M_PI * wt;
            double st = std::sin(theta);
            double phi_sum = 0.0;
            for (const auto& [xp, wp] : nw) {
                double phi = M_PI * (xp + 1.0);
                phi_sum += M_PI * wp * std::exp(cross * std::cos(phi) * st);
            }
            theta_sum += wth * st * phi_sum;
        }
        total += wrho * radial * theta_sum;
    }
    return pref * total;
}

double exact_count(const ReceiverGeometry& geom, double t) {
    if (auto* s = std::get_if<ReceiverGeometry::Sphere>(&geom.shape))
        return sphere_count(geom.center_distance, s->radius, t);
    return rect_count(std::get<ReceiverGeometry::Box>(geom.shape), t);
}

std::optional<double> uniform_deviation(const ReceiverGeometry& geom, double t) {
    double exact = exact_count(geom, t);
    if (!(std::fabs(exact) > 1e-300)) return std::nullopt;  // indeterminate, not NaN
    return (uniform_count(geom, t) - exact) / exact;
}

double enzyme_lower_bound_count(const LowerBoundParams& p, double t) {
    if (t <= 0) throw std::domain_error("t* must be > 0");
    return p.volume * std::pow(4.0 * M_PI * t, -1.5) *
           std::exp(-p.alpha * t - p.dist * p.dist / (4.0 * t));
}

PeakResult lower_bound_peak(const SystemParams& params, const ReferenceSet& refs) {
    double d_a = params.species_a.diffusion;
    double dist = params.tx_rx_distance;
    double a = params.rates.k1 * refs.conc_e_tot;        // 1/s
    double b = dist * dist / (4.0 * d_a);                // s
    // Stationarity of t^(-3/2) exp(-a t - b/t): a t^2 + (3/2) t - b = 0.
    double t_max = a > 0 ? (-1.5 + std::sqrt(2.25 + 4.0 * a * b)) / (2.0 * a) : 2.0 * b / 3.0;
    double l = refs.distance;
    double v_obs = params.receiver.volume() * l * l * l;
    double count = params.n_a * v_obs * std::pow(4.0 * M_PI * d_a * t_max, -1.5) *
                   std::exp(-a * t_max - b / t_max);
    return {t_max, count};
}

}  // namespace mcchan
