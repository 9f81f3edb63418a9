#include "steinbench/profile.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "steinbench/error.hpp"
#include "steinbench/quadrature.hpp"

namespace steinbench {

struct CellProfile::Rep {
    std::vector<double> poly;                          // coefficients of t^i
    std::vector<std::pair<Distribution, int>> factors;  // sorted by key
    std::string key;
};

namespace {

void trim_poly(std::vector<double>& p) {
    while (p.size() > 1 && p.back() == 0.0) p.pop_back();
    if (p.empty()) p.push_back(0.0);
}

std::string make_key(const std::vector<double>& poly, const std::vector<std::pair<Distribution, int>>& f) {
    std::string k = "P[";
    char buf[40];
    for (double c : poly) {
        std::snprintf(buf, sizeof buf, "%.17g,", c);
        k += buf;
    }
    k += "]";
    for (const auto& [d, e] : f) k += "*Q{" + d.key() + "}^" + std::to_string(e);
    return k;
}

double poly_eval(const std::vector<double>& p, double t) {
    double v = 0.0;
    for (std::size_t i = p.size(); i-- > 0;) v = v * t + p[i];
    return v;
}

std::vector<double> poly_deriv(const std::vector<double>& p) {
    std::vector<double> d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<double>(i));
    if (d.empty()) d.push_back(0.0);
    return d;
}

double poly_integral_0_2(const std::vector<double>& p) {
    double s = 0.0, pw = 2.0;
    for (std::size_t i = 0; i < p.size(); ++i, pw *= 2.0) s += p[i] * pw / static_cast<double>(i + 1);
    return s;
}

struct Cache {
    std::shared_mutex mu;
    std::unordered_map<std::string, double> values;
};

Cache& integral_cache() {
    static Cache c;
    return c;
}

}  // namespace

CellProfile::CellProfile(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}

CellProfile::CellProfile() : CellProfile(constant(1.0)) {}

CellProfile CellProfile::polynomial(std::vector<double> coeffs) {
    for (double c : coeffs)
        if (!std::isfinite(c)) throw DomainError("polynomial profile: non-finite coefficient");
    auto r = std::make_shared<Rep>();
    r->poly = std::move(coeffs);
    trim_poly(r->poly);
    r->key = make_key(r->poly, r->factors);
    return CellProfile(std::move(r));
}

CellProfile CellProfile::constant(double c) { return polynomial({c}); }

CellProfile CellProfile::quantile(const Distribution& d) {
    auto r = std::make_shared<Rep>();
    r->poly = {1.0};
    r->factors.emplace_back(d, 1);
    r->key = make_key(r->poly, r->factors);
    return CellProfile(std::move(r));
}

CellProfile CellProfile::operator*(const CellProfile& o) const {
    auto r = std::make_shared<Rep>();
    const auto& a = rep_->poly;
    const auto& b = o.rep_->poly;
    r->poly.assign(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r->poly[i + j] += a[i] * b[j];
    trim_poly(r->poly);
    std::map<std::string, std::pair<Distribution, int>> merged;
    for (const auto* src : {&rep_->factors, &o.rep_->factors})
        for (const auto& [d, e] : *src) {
            auto it = merged.find(d.key());
            if (it == merged.end()) merged.emplace(d.key(), std::make_pair(d, e));
            else it->second.second += e;
        }
    for (auto& [k, v] : merged) r->factors.push_back(v);
    if (r->poly.size() == 1 && r->poly[0] == 0.0) r->factors.clear();
    r->key = make_key(r->poly, r->factors);
    return CellProfile(std::move(r));
}

CellProfile CellProfile::scaled(double c) const { return constant(c) * *this; }

double CellProfile::value(double t) const {
    double v = poly_eval(rep_->poly, t);
    for (const auto& [d, e] : rep_->factors) v *= std::pow(d.quantile(0.5 * t), e);
    return v;
}

double CellProfile::derivative(double t) const {
    const auto& f = rep_->factors;
    double q_part = 1.0;
    std::vector<double> q(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        q[i] = f[i].first.quantile(0.5 * t);
        q_part *= std::pow(q[i], f[i].second);
    }
    double d = poly_eval(poly_deriv(rep_->poly), t) * q_part;
    if (f.empty()) return d;
    const double p = poly_eval(rep_->poly, t);
    for (std::size_t i = 0; i < f.size(); ++i) {
        double others = 1.0;
        for (std::size_t j = 0; j < f.size(); ++j)
            if (j != i) others *= std::pow(q[j], f[j].second);
        const double dq = 0.5 * f[i].first.quantile_derivative(0.5 * t);
        d += p * f[i].second * std::pow(q[i], f[i].second - 1) * dq * others;
    }
    return d;
}

std::vector<double> CellProfile::breaks() const {
    std::vector<double> b;
    for (const auto& [d, e] : rep_->factors)
        for (double x : d.breakpoints()) {
            const double t = 2.0 * d.cdf(x);
            if (t > 0.0 && t < 2.0) b.push_back(t);
        }
    // sign changes of the polynomial part
    const auto& p = rep_->poly;
    if (p.size() > 1) {
        const int n = 512;
        double prev = poly_eval(p, 0.0);
        for (int i = 1; i <= n; ++i) {
            const double t = 2.0 * i / n;
            const double cur = poly_eval(p, t);
            if ((prev < 0.0) != (cur < 0.0)) {
                double lo = 2.0 * (i - 1) / n, hi = t;
                for (int it = 0; it < 80; ++it) {
                    const double mid = 0.5 * (lo + hi);
                    if ((poly_eval(p, mid) < 0.0) == (prev < 0.0)) lo = mid;
                    else hi = mid;
                }
                b.push_back(0.5 * (lo + hi));
            }
            prev = cur;
        }
    }
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    return b;
}

bool CellProfile::is_polynomial() const { return rep_->factors.empty(); }

bool CellProfile::is_single_quantile() const {
    return rep_->poly.size() == 1 && rep_->factors.size() == 1 && rep_->factors[0].second == 1;
}

const std::vector<double>& CellProfile::poly() const { return rep_->poly; }
const std::vector<std::pair<Distribution, int>>& CellProfile::factors() const { return rep_->factors; }
const std::string& CellProfile::key() const { return rep_->key; }

double CellProfile::integral() const {
    const auto& p = rep_->poly;
    const auto& f = rep_->factors;
    if (f.empty()) return poly_integral_0_2(p);
    // int_0^2 Q(t/2)^e dt = 2 E[X^e]
    if (p.size() == 1 && f.size() == 1) return p[0] * 2.0 * f[0].first.raw_moment(f[0].second);
    Cache& c = integral_cache();
    {
        std::shared_lock lk(c.mu);
        auto it = c.values.find(rep_->key);
        if (it != c.values.end()) return it->second;
    }
    const double v = integrate([this](double t) { return value(t); }, 0.0, 2.0, breaks(),
                               QuadratureOptions{1e-15, 1e-13});
    std::unique_lock lk(c.mu);
    c.values.emplace(rep_->key, v);
    return v;
}

bool CellProfile::canonical() const { return std::fabs(integral()) <= 1e-10; }

double CellProfile::abs_power_integral(int q) const {
    if (q < 1) throw DomainError("abs_power_integral: q must be >= 1");
    const auto& p = rep_->poly;
    const auto& f = rep_->factors;
    if (p.size() == 1 && f.size() == 1)
        return std::pow(std::fabs(p[0]), q) * 2.0 * f[0].first.abs_moment(q * f[0].second);
    return integrate([this, q](double t) { return std::pow(std::fabs(value(t)), q); }, 0.0, 2.0, breaks(),
                     QuadratureOptions{1e-15, 1e-13});
}

double inner(const CellProfile& p, const CellProfile& q) { return 0.5 * (p * q).integral(); }

}  // namespace steinbench
