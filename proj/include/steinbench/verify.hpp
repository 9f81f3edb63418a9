#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "steinbench/bounds.hpp"
#include "steinbench/chaos.hpp"
#include "steinbench/distributions.hpp"

namespace steinbench {

// Z = sum_k X_k, X_k ~ dists[k] independent.
struct SumSpec {
    std::vector<Distribution> dists;
};

// Q = sum_{k != l} a_kl X_k X_l, X_k i.i.d. ~ dist.
struct QuadraticSpec {
    Matrix a;
    Distribution dist;
};

using FunctionalSpec = std::variant<ChaosTensor, SumSpec, QuadraticSpec>;

struct WassersteinEstimate {
    double value = 0.0;
    std::size_t sample_size = 0;
    std::uint64_t seed = 0;
    // batch spread combined in quadrature with noise_floor
    double std_error = 0.0;
    // sampling level of W1(F_m, F), estimated from pairs of batches
    double noise_floor = 0.0;
};

struct TvEstimate {
    double value = 0.0;
    double step = 0.0;
    bool refined = false;  // grid halved for an unbounded density
};

struct CheckResult {
    BoundReport bound;
    WassersteinEstimate estimate;
    bool holds = false;
    double margin = 0.0;  // bound - estimate - 3 SE
};

struct MultiplicationCheck {
    double max_abs_path_error = 0.0;
    // (mean of I_n(f) I_m(g) - h_0) / standard error
    double mc_zscore = 0.0;
};

struct MomentCheck {
    double empirical = 0.0;
    double exact = 0.0;
    double std_error = 0.0;
    double zscore = 0.0;
    bool canonical = true;
};

constexpr int kReplicateBatches = 20;

// Worker threads: STEINBENCH_THREADS if set, else hardware concurrency.
std::size_t worker_count();

// Inverse-CDF sampling through quantile((1 + U)/2); U keyed by (seed, sample, cell).
std::vector<double> sample_functional(const FunctionalSpec& spec, std::size_t m, std::uint64_t seed);

// Exact integral of |F_m - Phi| for the empirical CDF F_m.
double empirical_w1(std::vector<double> samples);
// Pooled value plus the spread of kReplicateBatches contiguous batches.
// int |F_a - F_b| for two sorted samples.
double two_sample_w1(const std::vector<double>& a, const std::vector<double>& b);
WassersteinEstimate wasserstein_to_normal(const std::vector<double>& samples, std::uint64_t seed = 0);

TvEstimate tv_to_normal_convolution(const Distribution& dist, std::size_t n);

CheckResult check_bound(const BoundReport& bound, const FunctionalSpec& spec, std::size_t m, std::uint64_t seed);

MultiplicationCheck verify_multiplication(const ChaosTensor& f, const ChaosTensor& g, std::size_t m,
                                          std::uint64_t seed);
// Mean of I_n(f)^2 against n! ||f||^2.
MomentCheck verify_isometry(const ChaosTensor& f, std::size_t m, std::uint64_t seed);
// Mean of I_n(f) I_m(g) against its exact value (0 for n != m).
MomentCheck verify_orthogonality(const ChaosTensor& f, const ChaosTensor& g, std::size_t m, std::uint64_t seed);

}  // namespace steinbench
