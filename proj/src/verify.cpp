#include "steinbench/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <thread>

#include "steinbench/error.hpp"
#include "steinbench/kernels.hpp"
#include "steinbench/rng.hpp"
#include "steinbench/special.hpp"

namespace steinbench {

namespace {

// Runs body(begin, end) over kReplicateBatches contiguous ranges of [0, m).
void parallel_batches(std::size_t m, const std::function<void(std::size_t, std::size_t)>& body) {
    const std::size_t workers = std::min<std::size_t>(worker_count(), kReplicateBatches);
    auto range = [m](std::size_t b) {
        return std::make_pair(b * m / kReplicateBatches, (b + 1) * m / kReplicateBatches);
    };
    if (workers <= 1) {
        for (std::size_t b = 0; b < kReplicateBatches; ++b) {
            auto [lo, hi] = range(b);
            body(lo, hi);
        }
        return;
    }
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t b = w; b < kReplicateBatches; b += workers) {
                auto [lo, hi] = range(b);
                body(lo, hi);
            }
        });
    for (auto& t : pool) t.join();
}

double u01(std::uint64_t seed, std::size_t i, std::size_t c) { return 0.5 * (1.0 + uniform_pm1(seed, i, c)); }

// int_a^b Phi(x) dx, a <= b, without cancellation in either tail.
double integral_phi(double a, double b) {
    if (a >= b) return 0.0;
    if (b <= 0.0) {
        auto g = [](double x) { return x * normal_cdf(x) + normal_pdf(x); };
        return g(b) - g(a);
    }
    if (a >= 0.0) {
        auto h = [](double x) { return normal_pdf(x) - x * normal_sf(x); };  // int_x^inf (1 - Phi)
        return (b - a) - (h(a) - h(b));
    }
    return integral_phi(a, 0.0) + integral_phi(0.0, b);
}

struct MeanSe {
    double mean = 0.0, se = 0.0;
};

MeanSe mean_se(const std::vector<double>& v) {
    MeanSe r;
    if (v.empty()) return r;
    r.mean = std::accumulate(v.begin(), v.end(), 0.0) / v.size();
    if (v.size() < 2) return r;
    double ss = 0.0;
    for (double x : v) ss += (x - r.mean) * (x - r.mean);
    r.se = std::sqrt(ss / (v.size() - 1) / v.size());
    return r;
}

ChaosSample draw(std::uint64_t seed, std::size_t i, std::size_t cells) {
    ChaosSample s;
    s.u.resize(cells);
    for (std::size_t c = 0; c < cells; ++c) s.u[c] = uniform_pm1(seed, i, c);
    return s;
}

}  // namespace

std::size_t worker_count() {
    std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("STEINBENCH_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<std::size_t>(v);
    }
    return hw;
}

std::vector<double> sample_functional(const FunctionalSpec& spec, std::size_t m, std::uint64_t seed) {
    if (m == 0) throw DomainError("sample_functional: m must be >= 1");
    std::vector<double> out(m);
    if (const auto* f = std::get_if<ChaosTensor>(&spec)) {
        parallel_batches(m, [&](std::size_t lo, std::size_t hi) {
            for (std::size_t i = lo; i < hi; ++i) out[i] = evaluate_integral(*f, draw(seed, i, f->cells()));
        });
    } else if (const auto* s = std::get_if<SumSpec>(&spec)) {
        parallel_batches(m, [&](std::size_t lo, std::size_t hi) {
            for (std::size_t i = lo; i < hi; ++i) {
                double z = 0.0;
                for (std::size_t k = 0; k < s->dists.size(); ++k) z += s->dists[k].quantile(u01(seed, i, k));
                out[i] = z;
            }
        });
    } else {
        const auto& q = std::get<QuadraticSpec>(spec);
        const std::size_t n = q.a.n;
        std::vector<double> a = q.a.a;
        for (std::size_t k = 0; k < n; ++k) a[k * n + k] = 0.0;
        parallel_batches(m, [&](std::size_t lo, std::size_t hi) {
            std::vector<double> x(n);
            for (std::size_t i = lo; i < hi; ++i) {
                for (std::size_t k = 0; k < n; ++k) x[k] = q.dist.quantile(u01(seed, i, k));
                out[i] = simd::quadratic_form(a.data(), x.data(), n);
            }
        });
    }
    return out;
}

double empirical_w1(std::vector<double> x) {
    if (x.empty()) throw DataError("empirical_w1: no samples");
    for (double v : x)
        if (!std::isfinite(v)) throw DataError("empirical_w1: non-finite sample");
    std::sort(x.begin(), x.end());
    const std::size_t m = x.size();
    // tails
    double total = integral_phi(-std::numeric_limits<double>::infinity(), 0.0);  // placeholder, replaced below
    total = 0.0;
    {
        const double a = x.front();
        total += a <= 0.0 ? a * normal_cdf(a) + normal_pdf(a) : integral_phi(-40.0, a);
        const double b = x.back();
        total += b >= 0.0 ? normal_pdf(b) - b * normal_sf(b) : (-b) - integral_phi(b, 0.0) + normal_pdf(0.0);
    }
    for (std::size_t i = 1; i < m; ++i) {
        const double a = x[i - 1], b = x[i];
        if (b <= a) continue;
        const double c = static_cast<double>(i) / static_cast<double>(m);
        const double z = normal_quantile(c);
        if (z <= a) {
            total += integral_phi(a, b) - c * (b - a);
        } else if (z >= b) {
            total += c * (b - a) - integral_phi(a, b);
        } else {
            total += c * (z - a) - integral_phi(a, z);
            total += integral_phi(z, b) - c * (b - z);
        }
    }
    return total;
}

double two_sample_w1(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.empty() || b.empty()) throw DataError("two-sample W1: empty sample");
    const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
    std::size_t i = 0, j = 0;
    double x = std::min(a[0], b[0]), s = 0.0;
    while (i < a.size() || j < b.size()) {
        const double next = (j == b.size() || (i < a.size() && a[i] <= b[j])) ? a[i] : b[j];
        s += std::fabs(i / na - j / nb) * (next - x);
        x = next;
        while (i < a.size() && a[i] == x) ++i;
        while (j < b.size() && b[j] == x) ++j;
    }
    return s;
}

WassersteinEstimate wasserstein_to_normal(const std::vector<double>& samples, std::uint64_t seed) {
    WassersteinEstimate est;
    est.sample_size = samples.size();
    est.seed = seed;
    est.value = empirical_w1(samples);
    const std::size_t m = samples.size();
    if (m >= 2 * static_cast<std::size_t>(kReplicateBatches)) {
        std::vector<double> vals;
        for (std::size_t b = 0; b < kReplicateBatches; ++b) {
            const std::size_t lo = b * m / kReplicateBatches, hi = (b + 1) * m / kReplicateBatches;
            vals.push_back(empirical_w1(std::vector<double>(samples.begin() + lo, samples.begin() + hi)));
        }
        const MeanSe ms = mean_se(vals);
        // W1(F_m, F) >= 0 even at zero distance, so the batch spread misses its level.
        // Two independent batches of size k sit sqrt(2) times that level apart at k;
        // rescaling the mean pair distance to the pooled size gives the floor.
        std::vector<std::vector<double>> sorted;
        for (std::size_t b = 0; b < kReplicateBatches; ++b) {
            const std::size_t lo = b * m / kReplicateBatches, hi = (b + 1) * m / kReplicateBatches;
            sorted.emplace_back(samples.begin() + lo, samples.begin() + hi);
            std::sort(sorted.back().begin(), sorted.back().end());
        }
        double pair_sum = 0.0;
        int pairs = 0;
        for (std::size_t a = 0; a < sorted.size(); ++a)
            for (std::size_t b = a + 1; b < sorted.size(); ++b, ++pairs) pair_sum += two_sample_w1(sorted[a], sorted[b]);
        est.noise_floor = pair_sum / pairs / std::sqrt(2.0 * kReplicateBatches);
        est.std_error = std::hypot(ms.se, est.noise_floor);
    }
    return est;
}

TvEstimate tv_to_normal_convolution(const Distribution& dist, std::size_t n) {
    if (!dist.is_continuous()) throw UnsupportedKernel("tv convolution: discrete summand");
    if (n == 0) throw DomainError("tv convolution: n must be >= 1");
    const Distribution y = dist.normalized().scaled(1.0 / std::sqrt(static_cast<double>(n)));
    TvEstimate est;
    est.step = 1e-3;
    const bool unbounded = (dist.kind() == DistKind::CenteredGamma || dist.kind() == DistKind::CenteredBeta) &&
                           dist.param() < 1.0;
    if (unbounded) {
        est.step *= 0.5;
        est.refined = true;
    }
    const double h = est.step;
    const double lo = std::max(y.lower(), y.quantile(1e-10));
    const double hi = std::min(y.upper(), y.quantile(1.0 - 1e-10));
    const long jlo = static_cast<long>(std::floor(lo / h + 0.5));
    const long jhi = static_cast<long>(std::ceil(hi / h - 0.5));
    std::vector<double> mass(static_cast<std::size_t>(jhi - jlo + 1));
    for (long j = jlo; j <= jhi; ++j) mass[j - jlo] = y.cdf((j + 0.5) * h) - y.cdf((j - 0.5) * h);

    std::vector<double> p = mass, tmp;
    long offset = jlo;
    for (std::size_t k = 1; k < n; ++k) {
        tmp.assign(p.size() + mass.size() - 1, 0.0);
        simd::convolve_full(p.data(), p.size(), mass.data(), mass.size(), tmp.data());
        offset += jlo;
        std::size_t a = 0, b = tmp.size();
        while (a < b && tmp[a] < 1e-18) ++a;
        while (b > a && tmp[b - 1] < 1e-18) --b;
        p.assign(tmp.begin() + a, tmp.begin() + b);
        offset += static_cast<long>(a);
    }
    std::vector<double> normal(p.size());
    double covered = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double c = static_cast<double>(offset + static_cast<long>(i)) * h;
        const double left = c - 0.5 * h, right = c + 0.5 * h;
        normal[i] = right <= 0.0 ? normal_cdf(right) - normal_cdf(left) : normal_sf(left) - normal_sf(right);
        covered += normal[i];
    }
    est.value = 0.5 * simd::l1_distance(p.data(), normal.data(), p.size()) + 0.5 * std::max(0.0, 1.0 - covered);
    return est;
}

CheckResult check_bound(const BoundReport& bound, const FunctionalSpec& spec, std::size_t m, std::uint64_t seed) {
    CheckResult r;
    r.bound = bound;
    if (bound.metric == Metric::GammaH) throw DomainError("check_bound: the gamma-target metric is not estimable");
    if (bound.metric == Metric::TV) {
        const auto* s = std::get_if<SumSpec>(&spec);
        if (!s || s->dists.empty()) throw DomainError("check_bound: TV needs an i.i.d. sum");
        for (const auto& d : s->dists)
            if (d.key() != s->dists.front().key()) throw DomainError("check_bound: TV needs identical summands");
        const Distribution total = s->dists.front().scaled(std::sqrt(static_cast<double>(s->dists.size())));
        r.estimate.value = tv_to_normal_convolution(total, s->dists.size()).value;
        r.estimate.sample_size = 0;
        r.estimate.seed = seed;
    } else {
        r.estimate = wasserstein_to_normal(sample_functional(spec, m, seed), seed);
    }
    r.holds = r.estimate.value <= bound.value + 3.0 * r.estimate.std_error;
    r.margin = bound.value - r.estimate.value - 3.0 * r.estimate.std_error;
    return r;
}

MultiplicationCheck verify_multiplication(const ChaosTensor& f, const ChaosTensor& g, std::size_t m,
                                          std::uint64_t seed) {
    const std::vector<ChaosTensor> h = multiply(f, g);
    const double h0 = h[0].terms().empty() ? 0.0 : h[0].scalar_value();
    std::size_t cells = std::max(f.cells(), g.cells());
    for (const auto& t : h) cells = std::max(cells, t.cells());
    std::vector<double> err(m), lhs(m);
    parallel_batches(m, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            const ChaosSample s = draw(seed, i, cells);
            const double l = evaluate_integral(f, s) * evaluate_integral(g, s);
            double r = 0.0;
            for (const auto& t : h) r += evaluate_integral(t, s);
            lhs[i] = l;
            err[i] = std::fabs(l - r);
        }
    });
    MultiplicationCheck c;
    c.max_abs_path_error = *std::max_element(err.begin(), err.end());
    const MeanSe ms = mean_se(lhs);
    c.mc_zscore = ms.se > 0.0 ? (ms.mean - h0) / ms.se : 0.0;
    return c;
}

MomentCheck verify_isometry(const ChaosTensor& f, std::size_t m, std::uint64_t seed) {
    MomentCheck c;
    c.canonical = f.is_canonical();
    double fact = 1.0;
    for (int i = 2; i <= f.order(); ++i) fact *= i;
    c.exact = fact * l2_norm_sq(symmetrize(f));
    std::vector<double> v = sample_functional(f, m, seed);
    for (double& x : v) x *= x;
    const MeanSe ms = mean_se(v);
    c.empirical = ms.mean;
    c.std_error = ms.se;
    c.zscore = ms.se > 0.0 ? (ms.mean - c.exact) / ms.se : 0.0;
    return c;
}

MomentCheck verify_orthogonality(const ChaosTensor& f, const ChaosTensor& g, std::size_t m, std::uint64_t seed) {
    MomentCheck c;
    c.canonical = f.is_canonical() && g.is_canonical();
    if (f.order() == g.order()) {
        double fact = 1.0;
        for (int i = 2; i <= f.order(); ++i) fact *= i;
        c.exact = fact * inner_product(symmetrize(f), symmetrize(g));
    }
    const std::size_t cells = std::max(f.cells(), g.cells());
    std::vector<double> v(m);
    parallel_batches(m, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            const ChaosSample s = draw(seed, i, cells);
            v[i] = evaluate_integral(f, s) * evaluate_integral(g, s);
        }
    });
    const MeanSe ms = mean_se(v);
    c.empirical = ms.mean;
    c.std_error = ms.se;
    c.zscore = ms.se > 0.0 ? (ms.mean - c.exact) / ms.se : 0.0;
    return c;
}

}  // namespace steinbench
