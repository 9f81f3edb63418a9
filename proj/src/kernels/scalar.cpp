#include <cmath>

#include "steinbench/kernels.hpp"

namespace steinbench::simd::scalar {

void convolve_full(const double* a, std::size_t na, const double* b, std::size_t nb, double* out) {
    if (na == 0 || nb == 0) return;
    for (std::size_t k = 0; k < na + nb - 1; ++k) out[k] = 0.0;
    for (std::size_t i = 0; i < na; ++i) {
        const double ai = a[i];
        double* o = out + i;
        for (std::size_t j = 0; j < nb; ++j) o[j] += ai * b[j];
    }
}

double l1_distance(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += std::fabs(a[i] - b[i]);
    return s;
}

double dot(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

double quadratic_form(const double* a, const double* x, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i] * dot(a + i * n, x, n);
    return s;
}

}  // namespace steinbench::simd::scalar
