#include "mcchan/kernels.hpp"

#include <stdexcept>

namespace mcchan::kernels {

#ifdef MCCHAN_BUILD_AVX2
const Ops& avx2_ops();
#endif

bool avx2_available() {
#ifdef MCCHAN_BUILD_AVX2
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

namespace {
const Ops* selected = nullptr;

const Ops& best() {
#ifdef MCCHAN_BUILD_AVX2
    if (avx2_available()) return avx2_ops();
#endif
    return scalar();
}
}  // namespace

const Ops& active() { return selected ? *selected : best(); }

void select(const std::string& name) {
    if (name == "auto") {
        selected = nullptr;
    } else if (name == "scalar") {
        selected = &scalar();
    } else if (name == "avx2") {
#ifdef MCCHAN_BUILD_AVX2
        if (!avx2_available()) throw std::invalid_argument("avx2 kernels not supported on this CPU");
        selected = &avx2_ops();
#else
        throw std::invalid_argument("avx2 kernels not compiled in");
#endif
    } else {
        throw std::invalid_argument("unknown kernel variant: " + name);
    }
}

}  // namespace mcchan::kernels
