#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <random>
#include <vector>

#include "oracle.hpp"
#include "steinbench/error.hpp"
#include "steinbench/verify.hpp"

using namespace steinbench;

namespace {

// int |F_m - Phi| by quadrature between consecutive order statistics
double w1_oracle(std::vector<double> x) {
    std::sort(x.begin(), x.end());
    const double m = static_cast<double>(x.size());
    double s = oracle::integrate([](double t) { return oracle::normal_cdf(t); }, -40.0, x.front(), {});
    s += oracle::integrate([](double t) { return 1.0 - oracle::normal_cdf(t); }, x.back(), 40.0, {});
    for (std::size_t i = 1; i < x.size(); ++i) {
        const double level = i / m;
        s += oracle::integrate([&](double t) { return std::fabs(level - oracle::normal_cdf(t)); }, x[i - 1], x[i],
                               {});
    }
    return s;
}

// TV between a density on [lo, hi] (with kinks at `cuts`) and the standard normal
double tv_oracle(const std::function<double(double)>& p, double lo, double hi, std::vector<double> cuts) {
    std::vector<double> all = cuts;
    // crossing points are not known in closed form; a fine split keeps the kinks of |p - phi| resolved
    for (int i = 1; i < 400; ++i) all.push_back(lo + (hi - lo) * i / 400.0);
    std::sort(all.begin(), all.end());
    const double inside = oracle::integrate([&](double t) { return std::fabs(p(t) - oracle::normal_pdf(t)); }, lo, hi, all);
    const double outside = oracle::normal_cdf(lo) + 1.0 - oracle::normal_cdf(hi);
    return 0.5 * (inside + outside);
}

}  // namespace

TEST_CASE("empirical W1 worked values") {
    CHECK(empirical_w1({0.0}) == doctest::Approx(std::sqrt(2.0 / oracle::kPi)).epsilon(1e-12));
    CHECK(empirical_w1({-1.0, 1.0}) == doctest::Approx(0.535380).epsilon(1e-5));
    CHECK(empirical_w1({-1.0, 1.0}) == doctest::Approx(w1_oracle({-1.0, 1.0})).epsilon(1e-9));
    CHECK_THROWS_AS(empirical_w1({0.0, NAN}), DataError);
    CHECK_THROWS_AS(empirical_w1({}), DataError);
}

TEST_CASE("empirical W1 against quadrature") {
    std::mt19937_64 rng(77);
    std::normal_distribution<double> z(0.3, 1.4);
    for (std::size_t m : {1u, 2u, 5u, 17u, 60u}) {
        std::vector<double> x(m);
        for (auto& v : x) v = z(rng);
        if (m == 5) x[3] = x[1];  // ties
        CHECK(empirical_w1(x) == doctest::Approx(w1_oracle(x)).epsilon(1e-9));
    }
}

TEST_CASE("W1 of normal samples is small and seeded runs repeat") {
    const SumSpec s{{Distribution::gaussian()}};
    const auto a = sample_functional(s, 100000, 9);
    const auto b = sample_functional(s, 100000, 9);
    CHECK(a == b);
    const auto e = wasserstein_to_normal(a, 9);
    CHECK(e.value < 0.01);
    CHECK(e.std_error > 0.0);
    CHECK(e.sample_size == 100000);

    // the worker count does not change the stream
    setenv("STEINBENCH_THREADS", "3", 1);
    CHECK(worker_count() == 3);
    const auto c = sample_functional(s, 100000, 9);
    unsetenv("STEINBENCH_THREADS");
    CHECK(a == c);
}

TEST_CASE("sampling specs") {
    const auto dists = normalized_iid(Distribution::centered_gamma(2.0), 8);
    const auto z = sample_functional(SumSpec{dists}, 200000, 1);
    double mean = 0.0, sq = 0.0;
    for (double v : z) mean += v;
    mean /= z.size();
    for (double v : z) sq += (v - mean) * (v - mean);
    sq /= z.size() - 1;
    CHECK(std::fabs(mean) < 4.0 * std::sqrt(1.0 / z.size()));
    CHECK(std::fabs(sq - 1.0) < 0.02);

    const auto q = sample_functional(QuadraticSpec{Matrix::pairwise(10), Distribution::uniform(1.0).normalized()}, 200000, 2);
    double qs = 0.0;
    for (double v : q) qs += v * v;
    CHECK(std::fabs(qs / q.size() - 1.0) < 0.02);

    // chaos and sum specs of the same law give the same samples
    const auto d = Distribution::centered_beta(2.0).normalized();
    const auto f = ChaosTensor::linear(std::vector<double>(4, 0.5), CellProfile::quantile(d));
    const auto viaf = sample_functional(f, 1000, 3);
    const auto vias = sample_functional(SumSpec{std::vector<Distribution>(4, d.scaled(0.5))}, 1000, 3);
    for (std::size_t i = 0; i < viaf.size(); ++i) CHECK(viaf[i] == doctest::Approx(vias[i]).epsilon(1e-12));
    CHECK_THROWS_AS(sample_functional(f, 0, 1), DomainError);
}

TEST_CASE("TV by convolution") {
    const auto u = Distribution::uniform(1.0);
    const double a = std::sqrt(3.0);
    const double ref1 = tv_oracle([&](double) { return 0.5 / a; }, -a, a, {});
    const auto t1 = tv_to_normal_convolution(u, 1);
    // the jumps at +-sqrt3 fall inside one bin each, so n = 1 is only O(h) accurate
    CHECK(t1.value == doctest::Approx(ref1).epsilon(1e-3));
    // hand value: 2(Phi(c) - 1/2) - 2c/(2 sqrt3) + 2(1 - Phi(sqrt3)) with phi(c) = 1/(2 sqrt3)
    const double c = std::sqrt(2.0 * std::log(2.0 * a / std::sqrt(2.0 * oracle::kPi)));
    CHECK(ref1 == doctest::Approx(2.0 * oracle::normal_cdf(c) - 1.0 - c / a + 2.0 * (1.0 - oracle::normal_cdf(a)))
                      .epsilon(1e-8));
    CHECK(tv_to_normal_convolution(u, 64).value < 2.0 / std::sqrt(5.0 * 64.0));
    // sum of two: triangular density on [-sqrt6, sqrt6]
    const double b = std::sqrt(6.0);
    const double ref2 = tv_oracle([&](double x) { return std::max(0.0, (b - std::fabs(x)) / (b * b)); }, -b, b, {0.0});
    CHECK(tv_to_normal_convolution(u, 2).value == doctest::Approx(ref2).epsilon(1e-4));
    CHECK(tv_to_normal_convolution(Distribution::gaussian(3.0), 4).value < 1e-5);
    const auto g = tv_to_normal_convolution(Distribution::centered_gamma(0.5), 3);
    CHECK(g.refined);
    CHECK(g.step == 5e-4);
    CHECK_THROWS_AS(tv_to_normal_convolution(Distribution::normalized_bernoulli(0.5), 3), UnsupportedKernel);
}

TEST_CASE("bound checks") {
    const auto dists = normalized_iid(Distribution::centered_gamma(1.0), 16);
    const auto r = check_bound(bound_sum_third_moment(dists), SumSpec{dists}, 200000, 7);
    CHECK(r.holds);
    CHECK(r.margin == doctest::Approx(r.bound.value - r.estimate.value - 3 * r.estimate.std_error));
    const auto tv = check_bound(bound_sum_kernel(dists).tv, SumSpec{dists}, 1000, 7);
    CHECK(tv.estimate.std_error == 0.0);
    CHECK(tv.holds);
    CHECK_THROWS_AS(check_bound(bound_gamma_target(Distribution::centered_gamma(1.0), 1.0), SumSpec{dists}, 1000, 1),
                    DomainError);
    std::vector<Distribution> mixed = {Distribution::uniform(0.5), Distribution::gaussian(0.5)};
    CHECK_THROWS_AS(check_bound(bound_sum_kernel(mixed).tv, SumSpec{mixed}, 1000, 1), DomainError);
}

TEST_CASE("multiplication check") {
    const auto p = CellProfile::quantile(Distribution::uniform(1.0).normalized());
    const auto f = ChaosTensor::linear({0.5, -0.4, 0.7, 0.2}, p);
    std::vector<double> a(16, 0.0);
    a[1] = a[4] = 0.3;
    a[11] = a[14] = -0.6;
    const auto g = ChaosTensor::quadratic(a, 4, p);
    const auto r = verify_multiplication(f, g, 100000, 4);
    CHECK(r.max_abs_path_error <= 1e-9);
    CHECK(std::fabs(r.mc_zscore) <= 4.0);
}

TEST_CASE("worked verify examples") {
    std::vector<double> grid(10000);
    for (std::size_t i = 0; i < grid.size(); ++i)
        grid[i] = Distribution::gaussian().quantile((i + 0.5) / grid.size());
    CHECK(empirical_w1(grid) <= 1e-3);

    const auto u16 = normalized_iid(Distribution::uniform(1.0), 16);
    const auto r = check_bound(bound_sum_kernel(u16).w1, SumSpec{u16}, 200000, 1);
    CHECK(r.bound.value == doctest::Approx(1.0 / std::sqrt(80.0)).epsilon(1e-12));
    CHECK(r.holds);
    CHECK(r.estimate.value < 0.03);

    const auto g1 = normalized_iid(Distribution::gaussian(), 1);
    CHECK(check_bound(bound_sum_kernel(g1).w1, SumSpec{g1}, 200000, 1).holds);

    const auto u1 = normalized_iid(Distribution::uniform(1.0), 1);
    auto zero = bound_sum_kernel(u1).w1;
    zero.value = 0.0;
    const auto bad = check_bound(zero, SumSpec{u1}, 100000, 1);
    CHECK_FALSE(bad.holds);
    CHECK(bad.estimate.value == doctest::Approx(0.06).epsilon(0.15));
    CHECK(bad.margin < 0.0);
}

TEST_CASE("W1 estimator shrinks with m") {
    const SumSpec s{{Distribution::gaussian()}};
    const double small = wasserstein_to_normal(sample_functional(s, 1000, 5)).value;
    const double large = wasserstein_to_normal(sample_functional(s, 100000, 5)).value;
    CHECK(large < small);
}

TEST_CASE("two-sample W1") {
    // for equal sizes the distance is the mean gap of matched order statistics
    std::mt19937_64 rng(5);
    std::normal_distribution<double> z;
    std::vector<double> a(300), b(300);
    for (auto& v : a) v = z(rng);
    for (auto& v : b) v = 0.2 + z(rng);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double ref = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) ref += std::fabs(a[i] - b[i]);
    CHECK(two_sample_w1(a, b) == doctest::Approx(ref / a.size()).epsilon(1e-12));
    CHECK(two_sample_w1(a, a) == 0.0);
    CHECK(two_sample_w1({0.0}, {1.0, 3.0}) == doctest::Approx(1.0 * 1.0 + 0.5 * 2.0));
    CHECK_THROWS_AS(two_sample_w1({}, a), DataError);
}

TEST_CASE("noise floor tracks the null level") {
    double ratio = 0.0;
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        const auto e = wasserstein_to_normal(sample_functional(SumSpec{{Distribution::gaussian()}}, 200000, seed));
        CHECK(e.noise_floor > 0.0);
        CHECK(e.std_error >= e.noise_floor);
        ratio += e.value / e.noise_floor / 6.0;
    }
    // E W1(F_m, Phi) ~ sqrt(2/(pi m)) int sqrt(Phi(1-Phi)): the floor should match it on average
    const double kappa = std::sqrt(2.0 / oracle::kPi) *
                         oracle::integrate([](double x) { return std::sqrt(oracle::normal_cdf(x) * (1 - oracle::normal_cdf(x))); },
                                           -12.0, 12.0, {0.0});
    const auto e = wasserstein_to_normal(sample_functional(SumSpec{{Distribution::gaussian()}}, 200000, 11));
    CHECK(e.noise_floor == doctest::Approx(kappa / std::sqrt(200000.0)).epsilon(0.15));
    CHECK(ratio == doctest::Approx(1.0).epsilon(0.35));
}
