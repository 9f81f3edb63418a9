#include "steinbench/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <numbers>

#include <boost/math/special_functions/gamma.hpp>

#include "steinbench/csv.hpp"
#include "steinbench/error.hpp"
#include "steinbench/quadrature.hpp"
#include "steinbench/special.hpp"

namespace steinbench {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double binom(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void require_order(int p) {
    if (p < 0) throw DomainError("moment order must be nonnegative");
}

}  // namespace

Distribution Distribution::gaussian(double sigma) {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) throw InvalidDistribution("gaussian: sigma must be > 0");
    Distribution d;
    d.kind_ = DistKind::Gaussian;
    d.scale_ = sigma;
    return d;
}

Distribution Distribution::centered_gamma(double shape) {
    if (!(shape > 0.0) || !std::isfinite(shape)) throw InvalidDistribution("gamma: shape must be > 0");
    Distribution d;
    d.kind_ = DistKind::CenteredGamma;
    d.param_ = shape;
    return d;
}

Distribution Distribution::centered_beta(double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw InvalidDistribution("beta: alpha must be > 0");
    Distribution d;
    d.kind_ = DistKind::CenteredBeta;
    d.param_ = alpha;
    return d;
}

Distribution Distribution::uniform(double half_width) {
    if (!(half_width > 0.0) || !std::isfinite(half_width)) throw InvalidDistribution("uniform: half-width must be > 0");
    Distribution d;
    d.kind_ = DistKind::UniformSym;
    d.scale_ = half_width;
    return d;
}

Distribution Distribution::normalized_bernoulli(double p) {
    if (!(p > 0.0 && p < 1.0)) throw InvalidDistribution("bernoulli: p must lie in (0,1)");
    Distribution d;
    d.kind_ = DistKind::NormalizedBernoulli;
    d.param_ = p;
    return d;
}

Distribution Distribution::tabulated(std::vector<double> x, std::vector<double> cdf) {
    if (x.size() != cdf.size() || x.size() < 2) throw InvalidDistribution("tabulated: need >= 2 (x, cdf) pairs");
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!std::isfinite(x[i]) || !std::isfinite(cdf[i])) throw InvalidDistribution("tabulated: non-finite entry");
        if (i > 0 && !(x[i] > x[i - 1])) throw InvalidDistribution("tabulated: x must be strictly increasing");
        if (i > 0 && !(cdf[i] >= cdf[i - 1])) throw InvalidDistribution("tabulated: cdf must be nondecreasing");
    }
    if (std::fabs(cdf.front()) > 1e-12 || std::fabs(cdf.back() - 1.0) > 1e-12)
        throw InvalidDistribution("tabulated: cdf must run from 0 to 1");
    cdf.front() = 0.0;
    cdf.back() = 1.0;
    double mean = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) mean += (cdf[i + 1] - cdf[i]) * 0.5 * (x[i] + x[i + 1]);
    for (double& v : x) v -= mean;

    Distribution d;
    d.kind_ = DistKind::Tabulated;
    d.tx_ = std::move(x);
    d.tf_ = std::move(cdf);
    const std::size_t n = d.tx_.size();
    d.td_.resize(n - 1);
    d.tm_.assign(n, 0.0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        d.td_[i] = (d.tf_[i + 1] - d.tf_[i]) / (d.tx_[i + 1] - d.tx_[i]);
        d.tm_[i + 1] = d.tm_[i] + d.td_[i] * 0.5 * (d.tx_[i + 1] * d.tx_[i + 1] - d.tx_[i] * d.tx_[i]);
    }
    return d;
}

Distribution Distribution::tabulated_from_csv(const std::string& path) {
    const CsvTable t = read_csv(path);
    const auto xi = t.column_index("x");
    const auto ci = t.column_index("cdf");
    std::vector<double> x, c;
    for (const auto& row : t.rows) {
        x.push_back(parse_double(row.at(xi)));
        c.push_back(parse_double(row.at(ci)));
    }
    return tabulated(std::move(x), std::move(c));
}

std::string Distribution::name() const {
    switch (kind_) {
        case DistKind::Gaussian: return "gaussian(sigma=" + fmt(scale_) + ")";
        case DistKind::CenteredGamma: return "gamma(shape=" + fmt(param_) + ";scale=" + fmt(scale_) + ")";
        case DistKind::CenteredBeta: return "beta(alpha=" + fmt(param_) + ";scale=" + fmt(scale_) + ")";
        case DistKind::UniformSym: return "uniform(a=" + fmt(scale_) + ")";
        case DistKind::NormalizedBernoulli: return "bernoulli(p=" + fmt(param_) + ";scale=" + fmt(scale_) + ")";
        case DistKind::Tabulated: return "tabulated(knots=" + std::to_string(tx_.size()) + ";scale=" + fmt(scale_) + ")";
    }
    return "?";
}

std::string Distribution::key() const {
    std::string k = name();
    if (kind_ == DistKind::Tabulated) {
        // knots and cdf values identify the law
        std::size_t h = 1469598103934665603ull;
        auto mix = [&h](double v) {
            std::uint64_t bits;
            std::memcpy(&bits, &v, sizeof bits);
            h = (h ^ bits) * 1099511628211ull;
        };
        for (double v : tx_) mix(v);
        for (double v : tf_) mix(v);
        k += "#" + std::to_string(h);
    }
    return k;
}

Distribution Distribution::scaled(double factor) const {
    if (!(factor > 0.0) || !std::isfinite(factor)) throw DomainError("scaled: factor must be > 0");
    Distribution d = *this;
    d.scale_ *= factor;
    return d;
}

Distribution Distribution::normalized() const { return scaled(1.0 / std::sqrt(variance())); }

// ---- base law (scale 1) ----

double Distribution::base_lower() const {
    switch (kind_) {
        case DistKind::Gaussian: return -kInf;
        case DistKind::CenteredGamma: return -param_;
        case DistKind::CenteredBeta: return -param_ / (param_ + 1.0);
        case DistKind::UniformSym: return -1.0;
        case DistKind::NormalizedBernoulli: return -param_ / std::sqrt(param_ * (1.0 - param_));
        case DistKind::Tabulated: return tx_.front();
    }
    return -kInf;
}

double Distribution::base_upper() const {
    switch (kind_) {
        case DistKind::Gaussian: return kInf;
        case DistKind::CenteredGamma: return kInf;
        case DistKind::CenteredBeta: return 1.0 / (param_ + 1.0);
        case DistKind::UniformSym: return 1.0;
        case DistKind::NormalizedBernoulli: return (1.0 - param_) / std::sqrt(param_ * (1.0 - param_));
        case DistKind::Tabulated: return tx_.back();
    }
    return kInf;
}

double Distribution::lower() const { return scale_ * base_lower(); }
double Distribution::upper() const { return scale_ * base_upper(); }

std::size_t Distribution::segment_of(double y) const {
    auto it = std::upper_bound(tx_.begin(), tx_.end(), y);
    std::ptrdiff_t i = (it - tx_.begin()) - 1;
    i = std::clamp<std::ptrdiff_t>(i, 0, static_cast<std::ptrdiff_t>(tx_.size()) - 2);
    return static_cast<std::size_t>(i);
}

double Distribution::base_cdf(double y) const {
    if (std::isnan(y)) throw DomainError("cdf: NaN argument");
    const double lo = base_lower(), hi = base_upper();
    if (kind_ == DistKind::NormalizedBernoulli) {
        if (y < lo) return 0.0;
        return y < hi ? 1.0 - param_ : 1.0;
    }
    if (y <= lo) return 0.0;
    if (y >= hi) return 1.0;
    switch (kind_) {
        case DistKind::Gaussian: return normal_cdf(y);
        case DistKind::CenteredGamma: return boost::math::gamma_p(param_, y + param_);
        case DistKind::CenteredBeta: return std::pow(param_ / (param_ + 1.0) + y, param_);
        case DistKind::UniformSym: return 0.5 * (y + 1.0);
        case DistKind::Tabulated: {
            const std::size_t i = segment_of(y);
            return tf_[i] + td_[i] * (y - tx_[i]);
        }
        default: break;
    }
    return 0.0;
}

double Distribution::base_pdf(double y) const {
    if (kind_ == DistKind::NormalizedBernoulli) throw UnsupportedKernel("bernoulli: no density");
    const double lo = base_lower(), hi = base_upper();
    if (y < lo || y > hi) return 0.0;
    switch (kind_) {
        case DistKind::Gaussian: return normal_pdf(y);
        case DistKind::CenteredGamma:
            if (y == lo) return param_ < 1.0 ? kInf : (param_ == 1.0 ? 1.0 : 0.0);
            return boost::math::gamma_p_derivative(param_, y + param_);
        case DistKind::CenteredBeta: {
            const double c = param_ / (param_ + 1.0);
            if (y == lo) return param_ < 1.0 ? kInf : (param_ == 1.0 ? 1.0 : 0.0);
            return param_ * std::pow(c + y, param_ - 1.0);
        }
        case DistKind::UniformSym: return 0.5;
        case DistKind::Tabulated: return td_[segment_of(y)];
        default: break;
    }
    return 0.0;
}

double Distribution::base_quantile(double u) const {
    if (!(u >= 0.0 && u <= 1.0)) throw DomainError("quantile: u outside [0,1]");
    switch (kind_) {
        case DistKind::Gaussian: return normal_quantile(u);
        case DistKind::CenteredGamma:
            if (u == 1.0) return kInf;
            return boost::math::gamma_p_inv(param_, u) - param_;
        case DistKind::CenteredBeta: return std::pow(u, 1.0 / param_) - param_ / (param_ + 1.0);
        case DistKind::UniformSym: return 2.0 * u - 1.0;
        case DistKind::NormalizedBernoulli: return u <= 1.0 - param_ ? base_lower() : base_upper();
        case DistKind::Tabulated: {
            auto it = std::lower_bound(tf_.begin(), tf_.end(), u);
            if (it == tf_.begin()) return tx_.front();
            if (it == tf_.end()) return tx_.back();
            const std::size_t j = static_cast<std::size_t>(it - tf_.begin()), i = j - 1;
            return tx_[i] + (u - tf_[i]) / (tf_[j] - tf_[i]) * (tx_[j] - tx_[i]);
        }
    }
    return 0.0;
}

double Distribution::base_raw_moment(int p) const {
    require_order(p);
    if (p == 0) return 1.0;
    switch (kind_) {
        case DistKind::Gaussian: {
            if (p % 2) return 0.0;
            double r = 1.0;
            for (int k = p - 1; k > 1; k -= 2) r *= k;
            return r;
        }
        case DistKind::CenteredGamma: {
            // moments from cumulants kappa_1 = 0, kappa_k = s (k-1)!
            std::vector<double> m(p + 1, 0.0), kappa(p + 1, 0.0);
            double fact = 1.0;
            for (int k = 2; k <= p; ++k) {
                fact *= (k - 1);
                kappa[k] = param_ * fact;
            }
            m[0] = 1.0;
            for (int q = 1; q <= p; ++q) {
                double s = 0.0;
                for (int k = 2; k <= q; ++k) s += binom(q - 1, k - 1) * kappa[k] * m[q - k];
                m[q] = s;
            }
            return m[p];
        }
        case DistKind::CenteredBeta: {
            const double c = param_ / (param_ + 1.0);
            double s = 0.0;
            for (int j = 0; j <= p; ++j)
                s += binom(p, j) * std::pow(-c, p - j) * param_ / (param_ + j);
            return s;
        }
        case DistKind::UniformSym: return p % 2 ? 0.0 : 1.0 / (p + 1);
        case DistKind::NormalizedBernoulli: {
            const double q = 1.0 - param_;
            return q * std::pow(base_lower(), p) + param_ * std::pow(base_upper(), p);
        }
        case DistKind::Tabulated: {
            double s = 0.0;
            for (std::size_t i = 0; i < td_.size(); ++i)
                s += td_[i] * (std::pow(tx_[i + 1], p + 1) - std::pow(tx_[i], p + 1)) / (p + 1);
            return s;
        }
    }
    return 0.0;
}

double Distribution::base_abs_moment(int p) const {
    require_order(p);
    if (p % 2 == 0) return base_raw_moment(p);
    switch (kind_) {
        case DistKind::Gaussian:
            return std::pow(2.0, 0.5 * p) * std::tgamma(0.5 * (p + 1)) / std::sqrt(std::numbers::pi);
        case DistKind::CenteredGamma: {
            // |x|^p = x^p + 2 (-x)^p 1{x<0} for odd p
            const double s = param_;
            double neg = 0.0, ratio = 1.0;  // ratio = Gamma(s+j)/Gamma(s)
            for (int j = 0; j <= p; ++j) {
                if (j > 0) ratio *= (s + j - 1);
                neg += binom(p, j) * std::pow(s, p - j) * ((j % 2) ? -1.0 : 1.0) * ratio *
                       boost::math::gamma_p(s + j, s);
            }
            return base_raw_moment(p) + 2.0 * neg;
        }
        case DistKind::CenteredBeta: {
            const double a = param_, c = a / (a + 1.0);
            double neg = 0.0;
            for (int j = 0; j <= p; ++j)
                neg += binom(p, j) * std::pow(c, p - j) * ((j % 2) ? -1.0 : 1.0) * a * std::pow(c, a + j) / (a + j);
            return base_raw_moment(p) + 2.0 * neg;
        }
        case DistKind::UniformSym: return 1.0 / (p + 1);
        case DistKind::NormalizedBernoulli: {
            const double q = 1.0 - param_;
            return q * std::pow(std::fabs(base_lower()), p) + param_ * std::pow(base_upper(), p);
        }
        case DistKind::Tabulated: {
            double s = 0.0;
            for (std::size_t i = 0; i < td_.size(); ++i) {
                auto seg = [&](double u, double v) {
                    return td_[i] * std::fabs(std::pow(std::fabs(v), p + 1) * (v < 0 ? -1 : 1) -
                                              std::pow(std::fabs(u), p + 1) * (u < 0 ? -1 : 1)) / (p + 1);
                };
                const double u = tx_[i], v = tx_[i + 1];
                if (u < 0.0 && v > 0.0) s += seg(u, 0.0) + seg(0.0, v);
                else s += seg(u, v);
            }
            return s;
        }
    }
    return 0.0;
}

double Distribution::base_kernel(double y) const {
    switch (kind_) {
        case DistKind::Gaussian: return 1.0;
        case DistKind::CenteredGamma: return y + param_;
        case DistKind::CenteredBeta: {
            const double a = param_;
            return (a / (a + 1.0) + y) * (1.0 / (a + 1.0) - y) / (a + 1.0);
        }
        case DistKind::UniformSym: return 0.5 * (1.0 - y * y);
        case DistKind::Tabulated: {
            const std::size_t i = segment_of(y);
            if (td_[i] <= 0.0) return kInf;
            const double m = tm_[i] + td_[i] * 0.5 * (y * y - tx_[i] * tx_[i]);
            return std::max(0.0, -m / td_[i]);
        }
        default: break;
    }
    throw UnsupportedKernel("stein kernel undefined");
}

double Distribution::base_kernel_second_moment() const {
    const double a = param_;
    switch (kind_) {
        case DistKind::Gaussian: return 1.0;
        case DistKind::CenteredGamma: return a * (1.0 + a);
        case DistKind::CenteredBeta: return 2.0 * a / ((a + 4.0) * (a + 3.0) * (a + 2.0) * (a + 1.0) * (a + 1.0));
        case DistKind::UniformSym: return 2.0 / 15.0;
        case DistKind::Tabulated: {
            double s = 0.0;
            for (std::size_t i = 0; i < td_.size(); ++i) {
                if (td_[i] <= 0.0) continue;
                // phi is quadratic on the segment, phi^2 quartic: 5-point Gauss-Legendre is exact
                static const double xg[5] = {-0.9061798459386640, -0.5384693101056831, 0.0, 0.5384693101056831,
                                             0.9061798459386640};
                static const double wg[5] = {0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
                                             0.4786286704993665, 0.2369268850561891};
                const double mid = 0.5 * (tx_[i] + tx_[i + 1]), half = 0.5 * (tx_[i + 1] - tx_[i]);
                for (int g = 0; g < 5; ++g) {
                    const double y = mid + half * xg[g];
                    const double m = tm_[i] + td_[i] * 0.5 * (y * y - tx_[i] * tx_[i]);
                    const double phi = -m / td_[i];
                    s += wg[g] * half * phi * phi * td_[i];
                }
            }
            return s;
        }
        default: break;
    }
    throw UnsupportedKernel("stein kernel undefined");
}

// ---- public, scaled ----

double Distribution::cdf(double x) const { return base_cdf(x / scale_); }

double Distribution::pdf(double x) const { return base_pdf(x / scale_) / scale_; }

double Distribution::quantile(double u) const { return scale_ * base_quantile(u); }

double Distribution::quantile_derivative(double u) const {
    require_kernel("quantile_derivative");
    const double f = pdf(quantile(u));
    return f > 0.0 ? 1.0 / f : kInf;
}

double Distribution::raw_moment(int p) const { return std::pow(scale_, p) * base_raw_moment(p); }

double Distribution::abs_moment(int p) const {
    if (p < 1) throw DomainError("abs_moment: order must be a positive integer");
    return std::pow(scale_, p) * base_abs_moment(p);
}

std::vector<double> Distribution::breakpoints() const {
    std::vector<double> b{0.0};
    if (kind_ == DistKind::Tabulated)
        for (double v : tx_) b.push_back(scale_ * v);
    return b;
}

double Distribution::expect(const std::function<double(double)>& g) const {
    if (kind_ == DistKind::NormalizedBernoulli) {
        return (1.0 - param_) * g(lower()) + param_ * g(upper());
    }
    auto h = [&](double x) {
        const double f = pdf(x);
        return f == 0.0 || !std::isfinite(f) ? 0.0 : g(x) * f;
    };
    return integrate(h, lower(), upper(), breakpoints(), QuadratureOptions{1e-14, 1e-12});
}

void Distribution::require_kernel(const char* op) const {
    if (kind_ == DistKind::NormalizedBernoulli)
        throw UnsupportedKernel(std::string(op) + ": discrete law has no density");
}

SteinKernelValue Distribution::stein_kernel(double y) const {
    require_kernel("stein_kernel");
    if (std::isnan(y) || y < lower() || y > upper()) throw DomainError("stein_kernel: y outside support");
    return {y, scale_ * scale_ * base_kernel(y / scale_)};
}

SteinKernelValue Distribution::stein_kernel_quadrature(double y) const {
    require_kernel("stein_kernel_quadrature");
    if (std::isnan(y) || y < lower() || y > upper()) throw DomainError("stein_kernel: y outside support");
    const double f = pdf(y);
    if (!(f >= 1e-300)) return {y, kInf};
    // by parts: int_lo^y x dF = y F(y) - int_lo^y F, which stays bounded where f has a pole
    const QuadratureOptions opt{1e-16, 1e-12};
    double m;
    if (y <= 0.0) {
        m = y * cdf(y) - integrate([&](double x) { return cdf(x); }, lower(), y, breakpoints(), opt);
    } else {
        const double sf = 1.0 - cdf(y);
        m = -(y * sf + integrate([&](double x) { return 1.0 - cdf(x); }, y, upper(), breakpoints(), opt));
    }
    return {y, std::max(0.0, -m / f)};
}

double Distribution::kernel_second_moment() const {
    require_kernel("kernel_second_moment");
    return std::pow(scale_, 4) * base_kernel_second_moment();
}

double Distribution::kernel_second_moment_quadrature() const {
    require_kernel("kernel_second_moment");
    return expect([&](double x) {
        const double v = stein_kernel_quadrature(x).value;
        return std::isfinite(v) ? v * v : 0.0;
    });
}

double Distribution::kernel_sup() const {
    require_kernel("kernel_sup");
    const double s2 = scale_ * scale_;
    switch (kind_) {
        case DistKind::Gaussian: return s2;
        case DistKind::CenteredGamma: return kInf;
        case DistKind::CenteredBeta: return s2 / (4.0 * (param_ + 1.0));
        case DistKind::UniformSym: return 0.5 * s2;
        case DistKind::Tabulated: {
            double best = 0.0;
            for (std::size_t i = 0; i < td_.size(); ++i) {
                for (int k = 0; k <= 64; ++k) {
                    const double y = tx_[i] + (tx_[i + 1] - tx_[i]) * k / 64.0;
                    best = std::max(best, base_kernel(y));
                }
            }
            return s2 * best;
        }
        default: break;
    }
    return kInf;
}

double Distribution::density_from_kernel(double z) const {
    require_kernel("density_from_kernel");
    if (std::isnan(z) || !(z > lower() && z < upper())) throw DomainError("density_from_kernel: z not interior");
    auto integrand = [&](double u) {
        const double phi = stein_kernel(u).value;
        if (!(phi > 0.0) || !std::isfinite(phi)) throw SingularKernel("density_from_kernel: kernel vanishes on path");
        return u / phi;
    };
    const double phi_z = stein_kernel(z).value;
    if (!(phi_z > 0.0) || !std::isfinite(phi_z)) throw SingularKernel("density_from_kernel: kernel vanishes at z");
    const double expo = integrate(integrand, 0.0, z, breakpoints(), QuadratureOptions{1e-15, 1e-13});
    return abs_moment(1) / (2.0 * phi_z) * std::exp(-expo);
}

}  // namespace steinbench
