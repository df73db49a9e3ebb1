#include "mcchan/kernels.hpp"

#ifdef MCCHAN_BUILD_AVX2

#include <immintrin.h>

#include <algorithm>
#include <cmath>

namespace mcchan::kernels {
namespace {

// All tails fall back to the same scalar expressions as the reference kernels
// so results stay bit-identical for any n.

void scaled_add_avx2(double* x, const double* noise, double scale, std::size_t n) {
    const __m256d vs = _mm256_set1_pd(scale);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vx = _mm256_loadu_pd(x + i);
        __m256d vn = _mm256_loadu_pd(noise + i);
        vx = _mm256_add_pd(vx, _mm256_mul_pd(vs, vn));
        _mm256_storeu_pd(x + i, vx);
    }
    for (; i < n; ++i) x[i] += scale * noise[i];
}

std::size_t count_in_sphere_avx2(const double* x, const double* y, const double* z,
                                 std::size_t n, double cx, double cy, double cz,
                                 double radius_sq) {
    const __m256d vcx = _mm256_set1_pd(cx);
    const __m256d vcy = _mm256_set1_pd(cy);
    const __m256d vcz = _mm256_set1_pd(cz);
    const __m256d vr2 = _mm256_set1_pd(radius_sq);
    std::size_t count = 0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(x + i), vcx);
        __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(y + i), vcy);
        __m256d dz = _mm256_sub_pd(_mm256_loadu_pd(z + i), vcz);
        __m256d d2 = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy)),
                                   _mm256_mul_pd(dz, dz));
        __m256d m = _mm256_cmp_pd(d2, vr2, _CMP_LE_OQ);
        count += static_cast<std::size_t>(_mm_popcnt_u32(_mm256_movemask_pd(m)));
    }
    for (; i < n; ++i) {
        double dx = x[i] - cx, dy = y[i] - cy, dz = z[i] - cz;
        count += ((dx * dx) + (dy * dy) + (dz * dz) <= radius_sq);
    }
    return count;
}

std::size_t count_in_box_avx2(const double* x, const double* y, const double* z,
                              std::size_t n, const double* lo, const double* hi) {
    const __m256d lx = _mm256_set1_pd(lo[0]), hx = _mm256_set1_pd(hi[0]);
    const __m256d ly = _mm256_set1_pd(lo[1]), hy = _mm256_set1_pd(hi[1]);
    const __m256d lz = _mm256_set1_pd(lo[2]), hz = _mm256_set1_pd(hi[2]);
    std::size_t count = 0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vx = _mm256_loadu_pd(x + i);
        __m256d vy = _mm256_loadu_pd(y + i);
        __m256d vz = _mm256_loadu_pd(z + i);
        __m256d m = _mm256_and_pd(_mm256_cmp_pd(vx, lx, _CMP_GE_OQ),
                                  _mm256_cmp_pd(vx, hx, _CMP_LE_OQ));
        m = _mm256_and_pd(m, _mm256_and_pd(_mm256_cmp_pd(vy, ly, _CMP_GE_OQ),
                                           _mm256_cmp_pd(vy, hy, _CMP_LE_OQ)));
        m = _mm256_and_pd(m, _mm256_and_pd(_mm256_cmp_pd(vz, lz, _CMP_GE_OQ),
                                           _mm256_cmp_pd(vz, hz, _CMP_LE_OQ)));
        count += static_cast<std::size_t>(_mm_popcnt_u32(_mm256_movemask_pd(m)));
    }
    for (; i < n; ++i) {
        bool in = x[i] >= lo[0] && x[i] <= hi[0] && y[i] >= lo[1] && y[i] <= hi[1] &&
                  z[i] >= lo[2] && z[i] <= hi[2];
        count += in;
    }
    return count;
}

void reflect_into_interval_avx2(double* x, std::size_t n, double lo, double hi) {
    const double len = hi - lo;
    const double two_len = 2.0 * len;
    const __m256d vlo = _mm256_set1_pd(lo);
    const __m256d vhi = _mm256_set1_pd(hi);
    const __m256d vlen = _mm256_set1_pd(len);
    const __m256d v2len = _mm256_set1_pd(two_len);
    const __m256d vzero = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d v = _mm256_loadu_pd(x + i);
        __m256d inside = _mm256_and_pd(_mm256_cmp_pd(v, vlo, _CMP_GE_OQ),
                                       _mm256_cmp_pd(v, vhi, _CMP_LE_OQ));
        if (_mm256_movemask_pd(inside) == 0xF) continue;
        __m256d d = _mm256_sub_pd(v, vlo);
        __m256d p = _mm256_sub_pd(
            d, _mm256_mul_pd(v2len, _mm256_floor_pd(_mm256_div_pd(d, v2len))));
        __m256d folded = _mm256_blendv_pd(_mm256_sub_pd(v2len, p), p,
                                          _mm256_cmp_pd(p, vlen, _CMP_LE_OQ));
        folded = _mm256_min_pd(_mm256_max_pd(folded, vzero), vlen);
        __m256d out = _mm256_add_pd(vlo, folded);
        _mm256_storeu_pd(x + i, _mm256_blendv_pd(out, v, inside));
    }
    for (; i < n; ++i) {
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

const Ops& avx2_ops() {
    static const Ops ops{scaled_add_avx2, count_in_sphere_avx2, count_in_box_avx2,
                         reflect_into_interval_avx2, "avx2"};
    return ops;
}

}  // namespace mcchan::kernels

#endif  // MCCHAN_BUILD_AVX2
