#include <cstdlib>
#include <cstring>

#include "steinbench/kernels.hpp"

namespace steinbench::simd {

bool isa_available(Isa isa) {
    if (isa == Isa::Scalar) return true;
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

namespace {

Isa detect() {
    const char* env = std::getenv("STEINBENCH_SIMD");
    if (env && std::strcmp(env, "scalar") == 0) return Isa::Scalar;
    return isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
}

}  // namespace

Isa active_isa() {
    static const Isa isa = detect();
    return isa;
}

const char* isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

void convolve_full(const double* a, std::size_t na, const double* b, std::size_t nb, double* out) {
    if (active_isa() == Isa::Avx2) avx2::convolve_full(a, na, b, nb, out);
    else scalar::convolve_full(a, na, b, nb, out);
}

double l1_distance(const double* a, const double* b, std::size_t n) {
    return active_isa() == Isa::Avx2 ? avx2::l1_distance(a, b, n) : scalar::l1_distance(a, b, n);
}

double dot(const double* a, const double* b, std::size_t n) {
    return active_isa() == Isa::Avx2 ? avx2::dot(a, b, n) : scalar::dot(a, b, n);
}

double quadratic_form(const double* a, const double* x, std::size_t n) {
    return active_isa() == Isa::Avx2 ? avx2::quadratic_form(a, x, n) : scalar::quadratic_form(a, x, n);
}

}  // namespace steinbench::simd
