#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>
#include <vector>

#include "mcchan/kernels.hpp"
#include "mcchan/rng.hpp"

using namespace mcchan;

namespace {

std::vector<double> random_vec(std::size_t n, Xoshiro256& rng, double scale) {
    std::vector<double> v(n);
    for (auto& x : v) x = (rng.uniform() - 0.5) * scale;
    return v;
}

}  // namespace

TEST_CASE("scalar kernels match brute-force references") {
    Xoshiro256 rng(42, 0);
    const auto& ops = kernels::scalar();
    for (std::size_t n : {0ul, 1ul, 3ul, 7ul, 64ul, 255ul}) {
        auto x = random_vec(n, rng, 2.0);
        auto y = random_vec(n, rng, 2.0);
        auto z = random_vec(n, rng, 2.0);

        std::size_t expect = 0;
        for (std::size_t i = 0; i < n; ++i) {
            double dx = x[i] - 0.1, dy = y[i] + 0.2, dz = z[i];
            if (dx * dx + dy * dy + dz * dz <= 0.25) ++expect;
        }
        CHECK(ops.count_in_sphere(x.data(), y.data(), z.data(), n, 0.1, -0.2, 0.0, 0.25) ==
              expect);

        double lo[3] = {-0.5, -0.4, -0.3}, hi[3] = {0.5, 0.4, 0.3};
        expect = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (x[i] >= lo[0] && x[i] <= hi[0] && y[i] >= lo[1] && y[i] <= hi[1] &&
                z[i] >= lo[2] && z[i] <= hi[2])
                ++expect;
        CHECK(ops.count_in_box(x.data(), y.data(), z.data(), n, lo, hi) == expect);
    }
}

TEST_CASE("scaled_add applies x += scale * noise elementwise") {
    Xoshiro256 rng(7, 0);
    auto x = random_vec(100, rng, 1.0);
    auto noise = random_vec(100, rng, 1.0);
    auto expect = x;
    for (std::size_t i = 0; i < x.size(); ++i) expect[i] += 0.37 * noise[i];
    kernels::scalar().scaled_add(x.data(), noise.data(), 0.37, x.size());
    CHECK(std::memcmp(x.data(), expect.data(), x.size() * sizeof(double)) == 0);
}

TEST_CASE("reflection folds any overshoot back into the interval") {
    Xoshiro256 rng(9, 0);
    const double lo = -0.5, hi = 0.5;
    auto x = random_vec(1000, rng, 20.0);  // up to 10 box widths out
    auto orig = x;
    kernels::scalar().reflect_into_interval(x.data(), x.size(), lo, hi);
    for (std::size_t i = 0; i < x.size(); ++i) {
        CHECK(x[i] >= lo);
        CHECK(x[i] <= hi);
        // points already inside are untouched
        if (orig[i] >= lo && orig[i] <= hi) CHECK(x[i] == orig[i]);
    }
    // single small overshoot reflects specularly
    double v[2] = {hi + 0.125, lo - 0.25};
    kernels::scalar().reflect_into_interval(v, 2, lo, hi);
    CHECK(v[0] == doctest::Approx(hi - 0.125).epsilon(1e-14));
    CHECK(v[1] == doctest::Approx(lo + 0.25).epsilon(1e-14));
}

TEST_CASE("vector variant is bit-identical to the scalar reference") {
    if (!kernels::avx2_available()) return;  // nothing to compare on this machine
    const auto& sc = kernels::scalar();
    kernels::select("avx2");
    const auto& vec = kernels::active();
    REQUIRE(std::string(vec.name) == "avx2");

    Xoshiro256 rng(1234, 0);
    for (std::size_t n : {0ul, 1ul, 2ul, 3ul, 4ul, 5ul, 7ul, 8ul, 9ul, 63ul, 64ul, 65ul, 1000ul}) {
        auto x = random_vec(n, rng, 3.0);
        auto y = random_vec(n, rng, 3.0);
        auto z = random_vec(n, rng, 3.0);
        auto noise = random_vec(n, rng, 1.0);

        auto xs = x;
        auto xv = x;
        sc.scaled_add(xs.data(), noise.data(), 1.7e-8, n);
        vec.scaled_add(xv.data(), noise.data(), 1.7e-8, n);
        CHECK(std::memcmp(xs.data(), xv.data(), n * sizeof(double)) == 0);

        CHECK(sc.count_in_sphere(x.data(), y.data(), z.data(), n, 0.3, -0.1, 0.2, 0.09) ==
              vec.count_in_sphere(x.data(), y.data(), z.data(), n, 0.3, -0.1, 0.2, 0.09));

        double lo[3] = {-1.0, -0.8, -0.6}, hi[3] = {1.0, 0.8, 0.6};
        CHECK(sc.count_in_box(x.data(), y.data(), z.data(), n, lo, hi) ==
              vec.count_in_box(x.data(), y.data(), z.data(), n, lo, hi));

        auto rs = x;
        auto rv = x;
        sc.reflect_into_interval(rs.data(), n, -0.5, 0.5);
        vec.reflect_into_interval(rv.data(), n, -0.5, 0.5);
        CHECK(std::memcmp(rs.data(), rv.data(), n * sizeof(double)) == 0);
    }
    kernels::select("auto");
}

TEST_CASE("kernel selection rejects unknown names") {
    CHECK_THROWS_AS(kernels::select("sse9"), std::invalid_argument);
    kernels::select("scalar");
    CHECK(std::string(kernels::active().name) == "scalar");
    kernels::select("auto");
}

TEST_CASE("normal generator has the right moments") {
    Xoshiro256 rng(2024, 5);
    const std::size_t n = 2'000'000;
    double s1 = 0, s2 = 0, s3 = 0, s4 = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double v = rng.normal();
        s1 += v;
        s2 += v * v;
        s3 += v * v * v;
        s4 += v * v * v * v;
    }
    double mean = s1 / n, var = s2 / n - mean * mean;
    // 5-sigma bands for n = 2e6 draws
    CHECK(std::fabs(mean) < 5.0 / std::sqrt((double)n));
    CHECK(std::fabs(var - 1.0) < 5.0 * std::sqrt(2.0 / n));
    CHECK(std::fabs(s3 / n) < 5.0 * std::sqrt(15.0 / n));
    CHECK(std::fabs(s4 / n - 3.0) < 5.0 * std::sqrt(96.0 / n));
}

TEST_CASE("streams are deterministic and independent") {
    Xoshiro256 a(99, 3), b(99, 3), c(99, 4);
    bool same = true, differ = false;
    for (int i = 0; i < 64; ++i) {
        auto va = a.next(), vb = b.next(), vc = c.next();
        same = same && (va == vb);
        differ = differ || (va != vc);
    }
    CHECK(same);
    CHECK(differ);
}
