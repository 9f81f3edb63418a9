#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <random>
#include <string>
#include <vector>

#include "steinbench/kernels.hpp"

using namespace steinbench;

namespace {

std::vector<double> random_vec(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> v(n);
    for (auto& x : v) x = u(rng);
    return v;
}

// plain loops, long double accumulation
std::vector<double> naive_convolve(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<long double> out(a.size() + b.size() - 1, 0.0L);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += static_cast<long double>(a[i]) * b[j];
    return {out.begin(), out.end()};
}

double naive_quadratic(const std::vector<double>& a, const std::vector<double>& x) {
    const std::size_t n = x.size();
    long double s = 0.0L;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s += static_cast<long double>(x[i]) * a[i * n + j] * x[j];
    return static_cast<double>(s);
}

}  // namespace

TEST_CASE("dispatch honours the environment override") {
    const char* env = std::getenv("STEINBENCH_SIMD");
    if (env && std::strcmp(env, "scalar") == 0) {
        CHECK(simd::active_isa() == simd::Isa::Scalar);
    } else {
        CHECK(simd::active_isa() == (simd::isa_available(simd::Isa::Avx2) ? simd::Isa::Avx2 : simd::Isa::Scalar));
    }
    MESSAGE("active isa: " << std::string(simd::isa_name(simd::active_isa())));
}

TEST_CASE("scalar and avx2 paths agree") {
    if (!simd::isa_available(simd::Isa::Avx2)) {
        MESSAGE("avx2 not available, comparing scalar against the oracle only");
    }
    std::mt19937_64 rng(2024);
    for (std::size_t n : {1u, 2u, 3u, 4u, 5u, 7u, 8u, 9u, 15u, 16u, 17u, 31u, 64u, 100u, 257u}) {
        const auto a = random_vec(rng, n), b = random_vec(rng, n);
        long double dot_ref = 0.0L, l1_ref = 0.0L;
        for (std::size_t i = 0; i < n; ++i) {
            dot_ref += static_cast<long double>(a[i]) * b[i];
            l1_ref += std::fabs(a[i] - b[i]);
        }
        const double tol = 1e-13 * n;
        CHECK(std::fabs(simd::scalar::dot(a.data(), b.data(), n) - static_cast<double>(dot_ref)) <= tol);
        CHECK(std::fabs(simd::scalar::l1_distance(a.data(), b.data(), n) - static_cast<double>(l1_ref)) <= tol);
        if (simd::isa_available(simd::Isa::Avx2)) {
            CHECK(std::fabs(simd::avx2::dot(a.data(), b.data(), n) - simd::scalar::dot(a.data(), b.data(), n)) <= tol);
            CHECK(std::fabs(simd::avx2::l1_distance(a.data(), b.data(), n) -
                            simd::scalar::l1_distance(a.data(), b.data(), n)) <= tol);
        }

        const auto m = random_vec(rng, n * n);
        const double q_ref = naive_quadratic(m, a);
        CHECK(std::fabs(simd::scalar::quadratic_form(m.data(), a.data(), n) - q_ref) <= tol * n);
        if (simd::isa_available(simd::Isa::Avx2))
            CHECK(std::fabs(simd::avx2::quadratic_form(m.data(), a.data(), n) - q_ref) <= tol * n);

        for (std::size_t nb : {1u, 3u, 8u, 13u}) {
            const auto c = random_vec(rng, nb);
            const auto ref = naive_convolve(a, c);
            std::vector<double> s(ref.size()), v(ref.size());
            simd::scalar::convolve_full(a.data(), n, c.data(), nb, s.data());
            double worst = 0.0;
            for (std::size_t k = 0; k < ref.size(); ++k) worst = std::max(worst, std::fabs(s[k] - ref[k]));
            CHECK(worst <= 1e-14 * nb);
            if (simd::isa_available(simd::Isa::Avx2)) {
                simd::avx2::convolve_full(a.data(), n, c.data(), nb, v.data());
                worst = 0.0;
                for (std::size_t k = 0; k < ref.size(); ++k) worst = std::max(worst, std::fabs(v[k] - s[k]));
                CHECK(worst <= 1e-14 * nb);
            }
        }
    }
}

TEST_CASE("dispatching entry points match the active variant") {
    std::mt19937_64 rng(7);
    const std::size_t n = 37;
    const auto a = random_vec(rng, n), b = random_vec(rng, n);
    const bool avx = simd::active_isa() == simd::Isa::Avx2;
    CHECK(simd::dot(a.data(), b.data(), n) ==
          (avx ? simd::avx2::dot(a.data(), b.data(), n) : simd::scalar::dot(a.data(), b.data(), n)));
    CHECK(simd::l1_distance(a.data(), b.data(), n) == (avx ? simd::avx2::l1_distance(a.data(), b.data(), n)
                                                           : simd::scalar::l1_distance(a.data(), b.data(), n)));
}
