#include <doctest.h>

#include <cmath>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "steinbench/bounds.hpp"
#include "steinbench/error.hpp"

using namespace steinbench;

namespace {

const double kSqrt2Pi = std::sqrt(2.0 / oracle::kPi);

CellProfile lin() { return CellProfile::polynomial({-std::sqrt(3.0), std::sqrt(3.0)}); }

ChaosTensor normalized_linear(const Distribution& d, std::size_t n) {
    return ChaosTensor::linear(std::vector<double>(n, 1.0 / std::sqrt(static_cast<double>(n))),
                               CellProfile::quantile(d.normalized()));
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Matrix m;
    m.n = n;
    m.a.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) m.a[i * n + j] = m.a[j * n + i] = u(rng);
    return m;
}

void check_recombines(const BoundReport& r) {
    CHECK(r.value >= 0.0);
    CHECK(std::isfinite(r.value));
}

}  // namespace

TEST_CASE("formula table") {
    CHECK(formula_table().size() == 12);
    std::set<std::string> slugs;
    for (const auto& f : formula_table()) {
        slugs.insert(f.slug);
        CHECK(formula_from_slug(f.slug) == f.id);
        CHECK(std::string(f.source).size() > 0);
    }
    CHECK(slugs.size() == 12);
    CHECK_THROWS_AS(formula_from_slug("nope"), DomainError);
}

TEST_CASE("third-moment bound") {
    const auto r = bound_sum_third_moment({Distribution::gaussian()});
    CHECK(r.value == doctest::Approx(3.0 * kSqrt2Pi).epsilon(1e-10));
    CHECK(r.term("variance_gap") == doctest::Approx(0.0));
    for (const auto& d : {Distribution::uniform(1.0).normalized(), Distribution::centered_gamma(2.0).normalized()}) {
        const std::size_t n = 7;
        const auto v = bound_sum_third_moment(std::vector<Distribution>(n, d)).value;
        CHECK(v == doctest::Approx(std::fabs(1.0 - n) + n * d.abs_moment(3) + n * d.abs_moment(1)).epsilon(1e-12));
    }
    const auto r2 = bound_sum_third_moment(normalized_iid(Distribution::gaussian(), 4));
    CHECK(r2.value == doctest::Approx(r2.term("variance_gap") + r2.term("third_moment_sum") + r2.term("cross_moment_sum")));
}

TEST_CASE("normalized-sum bound") {
    const auto u = Distribution::uniform(1.0);
    CHECK(u.normalized().abs_moment(3) == doctest::Approx(3.0 * std::sqrt(3.0) / 4.0).epsilon(1e-12));
    for (std::size_t n : {1u, 4u, 100u})
        CHECK(bound_sum_normalized(normalized_iid(u, n)).value ==
              doctest::Approx(2.0 * (3.0 * std::sqrt(3.0) / 4.0) / std::sqrt(double(n))).epsilon(1e-12));
    CHECK(bound_sum_normalized(std::vector<Distribution>(4, Distribution::gaussian())).value ==
          doctest::Approx(2.0 * kSqrt2Pi).epsilon(1e-12));
}

TEST_CASE("kernel-sum bound") {
    for (std::size_t n : {1u, 3u, 10u}) {
        const auto g = bound_sum_kernel(normalized_iid(Distribution::gaussian(2.0), n));
        // the kernel variance vanishes identically; only rounding in sum 1/n remains
        CHECK(g.w1.term("kernel_variance_sum") == 0.0);
        CHECK(g.w1.value <= 1e-15);
        CHECK(g.tv.value == 2.0 * g.w1.value);
    }
    for (std::size_t n : {1u, 3u, 5u, 25u}) {
        const auto u = bound_sum_kernel(normalized_iid(Distribution::uniform(1.0), n));
        CHECK(std::fabs(u.w1.value - 1.0 / std::sqrt(5.0 * n)) <= 1e-9);
        CHECK(u.tv.value == 2.0 * u.w1.value);
    }
    for (double s : {0.5, 2.0}) {
        const std::size_t n = 9;
        // unnormalized X_1 with E X_1^2 = s, summed and normalized
        const auto r = bound_sum_kernel(normalized_iid(Distribution::centered_gamma(s), n));
        CHECK(r.w1.value == doctest::Approx(1.0 / std::sqrt(n * s)).epsilon(1e-9));
    }
    for (double a : {0.5, 1.0, 3.0})
        for (std::size_t n : {1u, 8u}) {
            const double closed = std::sqrt((4 + a * (a * a + a - 2)) / (a * (a + 3) * (a + 4))) / std::sqrt(double(n));
            CHECK(std::fabs(bound_sum_kernel(normalized_iid(Distribution::centered_beta(a), n)).w1.value - closed) <= 1e-9);
        }
    CHECK_THROWS_AS(bound_sum_kernel({Distribution::normalized_bernoulli(0.3)}), UnsupportedKernel);
}

TEST_CASE("kernel bound improves on the normalized-sum bound") {
    for (const auto& d : {Distribution::centered_gamma(0.3), Distribution::centered_gamma(4.0),
                          Distribution::centered_beta(0.4), Distribution::centered_beta(6.0)}) {
        for (std::size_t n = 1; n <= 100; ++n) {
            const auto dists = normalized_iid(d, n);
            CHECK(bound_sum_kernel(dists).w1.value <= bound_sum_normalized(dists).value);
        }
    }
}

TEST_CASE("generic kernel bound") {
    CHECK(bound_generic_kernel(1.0, 1.0).w1.value == 0.0);
    for (double s : {0.5, 2.0}) CHECK(bound_generic_kernel(s, s * (1 + s)).w1.value == doctest::Approx(std::fabs(1 - s) + std::sqrt(s)));
    const auto b = bound_generic_kernel(1.0 / 12.0, 1.0 / 120.0);
    CHECK(b.w1.value == doctest::Approx(11.0 / 12.0 + std::sqrt(1.0 / 120.0 - 1.0 / 144.0)));
    CHECK(b.tv.value == 2.0 * b.w1.value);
    CHECK_THROWS_AS(bound_generic_kernel(1.0, 0.5), InvalidMoments);
}

TEST_CASE("gamma-target bound") {
    for (double s : {0.5, 1.0, 3.0}) {
        const auto d = Distribution::centered_gamma(s);
        const auto r = bound_gamma_target(d, s);
        CHECK(r.metric == Metric::GammaH);
        // ||2(X+s) - s||_2 = sqrt(4s + s^2); kernel term sqrt(s); E|2(X+s) - (X+s)| = s
        CHECK(r.term("target_l2_term") == doctest::Approx(std::sqrt(4 * s + s * s)).epsilon(1e-9));
        CHECK(r.term("kernel_term") == doctest::Approx(std::sqrt(s)).epsilon(1e-9));
        CHECK(r.term("first_form") == doctest::Approx(s).epsilon(1e-8));
        CHECK(r.value == doctest::Approx(r.term("target_l2_term") + r.term("kernel_term")));
    }
    CHECK_THROWS_AS(bound_gamma_target(Distribution::gaussian(), 1.0), DomainError);
    CHECK_THROWS_AS(bound_gamma_target(Distribution::centered_gamma(2.0), 1.0), DomainError);
}

TEST_CASE("single-integral finite-difference bound") {
    for (std::size_t n : {1u, 3u, 5u, 25u}) {
        const auto r = bound_single_integral_nabla(normalized_linear(Distribution::uniform(1.0), n));
        // int |f|^3 = n * 2 E|X|^3 with X = sqrt(3/n) U
        const double cube = 2.0 * n * std::pow(3.0 / n, 1.5) / 4.0;
        CHECK(r.term("abs_cube_integral") == doctest::Approx(cube).epsilon(1e-10));
        CHECK(r.term("two_term_value") == doctest::Approx(1.5 * std::sqrt(3.0 / n)).epsilon(1e-10));
        CHECK(r.value <= r.term("two_term_value") + 1e-12);
    }
    const auto z = bound_single_integral_nabla(ChaosTensor::linear({0.0, 0.0}, lin()));
    CHECK(z.value == doctest::Approx(1.0));
    const auto g = bound_single_integral_nabla(normalized_linear(Distribution::gaussian(), 1));
    CHECK(g.term("variance_gap") == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(g.term("abs_cube_integral") == doctest::Approx(2.0 * 2.0 * kSqrt2Pi).epsilon(1e-9));
    CHECK(g.term("cell_product_sum") == doctest::Approx(2.0 * kSqrt2Pi * 2.0).epsilon(1e-9));
    CHECK_THROWS_AS(bound_single_integral_nabla(ChaosTensor::linear({1.0}, CellProfile::polynomial({0.0, 1.0}))),
                    PreconditionError);
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> w(-1.0, 1.0);
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<double> c(5);
        for (auto& x : c) x = w(rng);
        const auto r = bound_single_integral_nabla(
            ChaosTensor::linear(c, CellProfile::quantile(Distribution::centered_beta(0.5 + rep * 0.3))));
        CHECK(r.value <= r.term("two_term_value") + 1e-12);
    }
}

TEST_CASE("single-integral derivative bound") {
    for (std::size_t n : {1u, 3u, 5u, 25u}) {
        const auto r = bound_single_integral_D(normalized_linear(Distribution::uniform(1.0), n));
        CHECK(std::fabs(r.w1.value - 1.0 / std::sqrt(5.0 * n)) <= 1e-9);
        CHECK(r.tv.value == 2.0 * r.w1.value);
        // same integrand written as a polynomial takes the algebraic route
        const auto p = bound_single_integral_D(
            ChaosTensor::linear(std::vector<double>(n, 1.0 / std::sqrt(double(n))), lin()));
        CHECK(std::fabs(p.w1.value - r.w1.value) <= 1e-10);
    }
    CHECK(bound_single_integral_D(normalized_linear(Distribution::gaussian(), 1)).w1.value ==
          doctest::Approx(0.0).epsilon(1e-12));
    for (double a : {0.5, 1.0, 2.0, 5.0})
        for (std::size_t n : {1u, 4u}) {
            const double closed = std::sqrt((4 + a * (a * a + a - 2)) / (a * (a + 3) * (a + 4))) / std::sqrt(double(n));
            CHECK(std::fabs(bound_single_integral_D(normalized_linear(Distribution::centered_beta(a), n)).w1.value - closed) <= 1e-9);
        }
}

TEST_CASE("bernoulli weighted bound") {
    for (std::size_t n : {1u, 4u, 16u})
        CHECK(bound_bernoulli_weighted(std::vector<double>(n, 1 / std::sqrt(double(n))), std::vector<double>(n, 0.5)).value ==
              doctest::Approx(2.0 / std::sqrt(double(n))));
    const double p = 0.2;
    CHECK(bound_bernoulli_weighted({1.0, 0.0, 0.0}, {p, 0.4, 0.7}).value ==
          doctest::Approx(2.0 * (1 - 2 * p * (1 - p)) / std::sqrt(p * (1 - p))));
    CHECK_THROWS_AS(bound_bernoulli_weighted({1.0}, {1.0}), DomainError);
}

TEST_CASE("multiple-integral bound") {
    ChaosTensor zero(2, 4);
    CoefficientTensor c(2);
    c.finalize();
    zero.add_term(c, {lin(), lin()});
    CHECK(bound_multiple_nabla(zero).value == doctest::Approx(1.0));

    // order 1: |1 - ||f||^2| + sqrt(2) ||f|| sqrt(2 ||f^2||^2)
    const std::vector<double> a = {0.5, -0.3, 0.8};
    const auto prof = CellProfile::quantile(Distribution::centered_beta(2.0).normalized());
    const auto f = ChaosTensor::linear(a, prof);
    double norm = 0.0, four = 0.0;
    for (double x : a) {
        norm += x * x;
        four += std::pow(x, 4);
    }
    const double p4 = (prof * prof * prof * prof).mean();
    const double direct = std::fabs(1.0 - norm) + std::sqrt(2.0) * std::sqrt(norm) * std::sqrt(2.0 * four * p4);
    CHECK(bound_multiple_nabla(f).value == doctest::Approx(direct).epsilon(1e-9));
}

TEST_CASE("multiple-integral bound at order 2 matches the matrix form") {
    std::mt19937_64 rng(21);
    const std::vector<Distribution> laws = {Distribution::uniform(1.0), Distribution::centered_gamma(2.0),
                                            Distribution::centered_beta(0.7), Distribution::gaussian()};
    for (int rep = 0; rep < 20; ++rep) {
        const Distribution& d = laws[rep % laws.size()];
        const Matrix m = random_matrix(rng, 6);
        const auto q = bound_quadratic_nabla(m, d);
        const auto f = ChaosTensor::quadratic(m.a, 6, CellProfile::quantile(d.normalized()));
        CHECK(std::fabs(bound_multiple_nabla(f).value - q.term("expanded_value")) <= 1e-9);
    }
}

TEST_CASE("quadratic form bounds") {
    for (std::size_t pairs : {25u, 100u}) {
        const Matrix m = Matrix::pairwise(pairs);
        double s2 = 0.0;
        for (double v : m.a) s2 += v * v;
        CHECK(2.0 * s2 == doctest::Approx(1.0));  // Var Q = 2 sum a^2 for unit-variance entries
        for (const auto& d : {Distribution::uniform(1.0), Distribution::centered_gamma(1.0)}) {
            const auto r = bound_quadratic_nabla(m, d);
            const double mu4 = d.normalized().raw_moment(4);
            REQUIRE(r.has_term("pairwise_cap"));
            CHECK(r.term("pairwise_cap") == doctest::Approx(8.0 * mu4 / std::sqrt(double(pairs))));
            CHECK(r.value <= r.term("pairwise_cap"));
            CHECK(r.term("variance_normalized") == 1.0);
            CHECK(r.term("L_n_sq") == doctest::Approx(0.25 / pairs));
            CHECK(r.term("jdk2_value") == doctest::Approx(r.value).epsilon(1e-12));
        }
    }
    CHECK(Distribution::uniform(1.0).normalized().raw_moment(4) == doctest::Approx(9.0 / 5.0));

    std::mt19937_64 rng(4);
    for (int rep = 0; rep < 10; ++rep) {
        const std::size_t n = 3 + rep;
        const Matrix m = random_matrix(rng, n);
        const auto d = rep % 2 ? Distribution::centered_gamma(2.0) : Distribution::centered_beta(1.5);
        const auto x = d.normalized();
        double l2 = 0.0, b2 = 0.0, low = 0.0, r2 = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            double row = 0.0, lr = 0.0;
            for (std::size_t l = 0; l < n; ++l) {
                row += m(k, l) * m(k, l);
                if (l < k) lr += m(k, l) * m(k, l);
            }
            l2 = std::max(l2, row);
            low += lr * lr;
            r2 += row * row;
        }
        for (std::size_t q = 0; q < n; ++q)
            for (std::size_t l = 0; l < n; ++l) {
                double s = 0.0;
                for (std::size_t k = 0; k < n; ++k) s += m(k, q) * m(k, l);
                b2 += s * s;
            }
        const double mu4 = x.raw_moment(4), kphi = x.kernel_second_moment();
        const auto dr = bound_quadratic_D(m, d);
        CHECK(dr.w1.value == doctest::Approx(4.0 * std::sqrt(kphi * (2 + mu4) * l2 + 2 * b2 - low)).epsilon(1e-12));
        CHECK(dr.tv.value == 2.0 * dr.w1.value);
        const auto nr = bound_quadratic_nabla(m, d);
        const double c = 3 * mu4 + mu4 * mu4;
        CHECK(nr.value == doctest::Approx(2 * std::sqrt(mu4 * r2 + 2 * b2) + 4 * std::sqrt(c * r2)).epsilon(1e-12));
    }
    // one pair, sum a^2 = 1: L^2 = 1/2, B = 2 (1/2)^2, lower = 1/4
    Matrix one;
    one.n = 2;
    one.a = {0.0, std::sqrt(0.5), std::sqrt(0.5), 0.0};
    const auto g = Distribution::centered_gamma(3.0);
    const double mu4 = g.normalized().raw_moment(4);
    const double kphi = 4.0 / 3.0;  // (1 + s) / s for the normalized gamma
    CHECK(bound_quadratic_D(one, g).w1.value == doctest::Approx(4.0 * std::sqrt(kphi * (2 + mu4) * 0.5 + 2 * 0.5 - 0.25)));

    Matrix zero;
    zero.n = 4;
    zero.a.assign(16, 0.0);
    CHECK_THROWS_AS(bound_quadratic_nabla(zero, Distribution::uniform(1.0)), DomainError);
    Matrix diag = Matrix::pairwise(2);
    diag.a[0] = 0.1;
    CHECK_THROWS_AS(bound_quadratic_nabla(diag, Distribution::uniform(1.0)), DomainError);
    CHECK_THROWS_AS(bound_quadratic_D(Matrix::pairwise(2), Distribution::normalized_bernoulli(0.4)), UnsupportedKernel);
}

TEST_CASE("comparison curves") {
    CHECK(std::fabs(gamma_ratio(1e-3) - 2.0) <= 0.1);
    CHECK(gamma_ratio(1.0) < gamma_ratio(10.0));
    CHECK(gamma_ratio(10.0) < gamma_ratio(100.0));
    // the ratio is E|X|^3 / s for the centered gamma, by a separate route
    for (double s : {0.2, 1.0, 7.0, 40.0})
        CHECK(gamma_ratio(s) == doctest::Approx(Distribution::centered_gamma(s).abs_moment(3) / s).epsilon(1e-8));

    std::vector<double> grid;
    for (int i = 0; i < 100; ++i) grid.push_back(0.1 + 9.9 * i / 99.0);
    const auto rows = comparison_curves(CurveFamily::BetaRatio, grid);
    REQUIRE(rows.size() == 100);
    for (const auto& r : rows) {
        CHECK(r.ratio > 1.0);
        const auto x = Distribution::centered_beta(r.x).normalized();
        CHECK(r.third_moment == doctest::Approx(x.abs_moment(3)).epsilon(1e-9));
        CHECK(r.kernel == doctest::Approx(bound_sum_kernel({x}).w1.value).epsilon(1e-9));
    }
    CHECK_THROWS_AS(comparison_curves(CurveFamily::GammaRatio, {0.0}), DomainError);
}

TEST_CASE("reports are finite and nonnegative") {
    for (const auto& d : {Distribution::gaussian(), Distribution::uniform(1.0), Distribution::centered_beta(0.7),
                          Distribution::centered_beta(3.0)}) {
        const auto dists = normalized_iid(d, 6);
        check_recombines(bound_sum_third_moment(dists));
        check_recombines(bound_sum_normalized(dists));
        check_recombines(bound_sum_kernel(dists).w1);
        check_recombines(bound_single_integral_D(normalized_linear(d, 6)).w1);
        check_recombines(bound_single_integral_nabla(normalized_linear(d, 6)));
    }
}
