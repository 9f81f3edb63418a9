#include "steinbench/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>

#define SB_AVX2 __attribute__((target("avx2,fma")))

namespace steinbench::simd::avx2 {

namespace {

SB_AVX2 inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d sh = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

}  // namespace

SB_AVX2 void convolve_full(const double* a, std::size_t na, const double* b, std::size_t nb, double* out) {
    if (na == 0 || nb == 0) return;
    for (std::size_t k = 0; k < na + nb - 1; ++k) out[k] = 0.0;
    for (std::size_t i = 0; i < na; ++i) {
        const __m256d ai = _mm256_set1_pd(a[i]);
        double* o = out + i;
        std::size_t j = 0;
        for (; j + 4 <= nb; j += 4) {
            __m256d acc = _mm256_loadu_pd(o + j);
            acc = _mm256_fmadd_pd(ai, _mm256_loadu_pd(b + j), acc);
            _mm256_storeu_pd(o + j, acc);
        }
        for (; j < nb; ++j) o[j] += a[i] * b[j];
    }
}

SB_AVX2 double l1_distance(const double* a, const double* b, std::size_t n) {
    const __m256d mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        acc = _mm256_add_pd(acc, _mm256_and_pd(d, mask));
    }
    double s = hsum(acc);
    for (; i < n; ++i) s += a[i] > b[i] ? a[i] - b[i] : b[i] - a[i];
    return s;
}

SB_AVX2 double dot(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
    double s = hsum(acc);
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

SB_AVX2 double quadratic_form(const double* a, const double* x, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i] * dot(a + i * n, x, n);
    return s;
}

}  // namespace steinbench::simd::avx2

#else

namespace steinbench::simd::avx2 {
void convolve_full(const double* a, std::size_t na, const double* b, std::size_t nb, double* out) {
    scalar::convolve_full(a, na, b, nb, out);
}
double l1_distance(const double* a, const double* b, std::size_t n) { return scalar::l1_distance(a, b, n); }
double dot(const double* a, const double* b, std::size_t n) { return scalar::dot(a, b, n); }
double quadratic_form(const double* a, const double* x, std::size_t n) { return scalar::quadratic_form(a, x, n); }
}  // namespace steinbench::simd::avx2

#endif
