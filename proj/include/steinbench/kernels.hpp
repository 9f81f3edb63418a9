#pragma once

#include <cstddef>

// Data-parallel inner loops with a scalar reference and an AVX2 variant.
// The variant is picked once at startup from CPU features; setting
// STEINBENCH_SIMD=scalar forces the reference path.
namespace steinbench::simd {

enum class Isa { Scalar, Avx2 };

Isa active_isa();
const char* isa_name(Isa isa);
bool isa_available(Isa isa);

// out[k] = sum_i a[i] * b[k - i], k in [0, na + nb - 1).
void convolve_full(const double* a, std::size_t na, const double* b, std::size_t nb, double* out);
// sum_i |a[i] - b[i]|
double l1_distance(const double* a, const double* b, std::size_t n);
double dot(const double* a, const double* b, std::size_t n);
// x^T A x with A row-major n x n.
double quadratic_form(const double* a, const double* x, std::size_t n);

namespace scalar {
void convolve_full(const double* a, std::size_t na, const double* b, std::size_t nb, double* out);
double l1_distance(const double* a, const double* b, std::size_t n);
double dot(const double* a, const double* b, std::size_t n);
double quadratic_form(const double* a, const double* x, std::size_t n);
}  // namespace scalar

namespace avx2 {
void convolve_full(const double* a, std::size_t na, const double* b, std::size_t nb, double* out);
double l1_distance(const double* a, const double* b, std::size_t n);
double dot(const double* a, const double* b, std::size_t n);
double quadratic_form(const double* a, const double* x, std::size_t n);
}  // namespace avx2

}  // namespace steinbench::simd
