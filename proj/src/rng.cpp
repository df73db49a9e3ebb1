#include "mcchan/rng.hpp"

#include <cmath>

namespace mcchan {
namespace {

// 256-layer ziggurat for the standard normal (Doornik's zignor layout).
constexpr int kLayers = 256;
constexpr double kTailR = 3.6541528853610088;
constexpr double kArea = 4.92867323399e-3;

struct ZigguratTables {
    double x[kLayers + 1];
    double ratio[kLayers];  // x[i+1] / x[i]

    ZigguratTables() {
        double f = std::exp(-0.5 * kTailR * kTailR);
        x[0] = kArea / f;  // pseudo-width of the base strip
        x[1] = kTailR;
        x[kLayers] = 0.0;
        for (int i = 2; i < kLayers; ++i) {
            x[i] = std::sqrt(-2.0 * std::log(kArea / x[i - 1] + f));
            f = std::exp(-0.5 * x[i] * x[i]);
        }
        for (int i = 0; i < kLayers; ++i) ratio[i] = x[i + 1] / x[i];
    }
};

const ZigguratTables zig;

}  // namespace

double Xoshiro256::normal() {
    for (;;) {
        double u = 2.0 * uniform() - 1.0;
        int i = static_cast<int>(next() & (kLayers - 1));
        if (std::fabs(u) < zig.ratio[i]) return u * zig.x[i];
        if (i == 0) {
            // tail beyond kTailR
            double xx, yy;
            do {
                xx = std::log(uniform_pos()) / kTailR;
                yy = std::log(uniform_pos());
            } while (-2.0 * yy < xx * xx);
            return u < 0 ? xx - kTailR : kTailR - xx;
        }
        double val = u * zig.x[i];
        double f0 = std::exp(-0.5 * (zig.x[i] * zig.x[i] - val * val));
        double f1 = std::exp(-0.5 * (zig.x[i + 1] * zig.x[i + 1] - val * val));
        if (f1 + uniform() * (f0 - f1) < 1.0) return val;
    }
}

}  // namespace mcchan
