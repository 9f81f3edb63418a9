#include "steinbench/special.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/special_functions/erf.hpp>

#include "steinbench/error.hpp"

namespace steinbench {

double normal_pdf(double x) {
    return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double normal_sf(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

double normal_quantile(double u) {
    if (!(u >= 0.0 && u <= 1.0)) throw DomainError("normal_quantile: u outside [0,1]");
    if (u == 0.0) return -std::numeric_limits<double>::infinity();
    if (u == 1.0) return std::numeric_limits<double>::infinity();
    return -std::numbers::sqrt2 * boost::math::erfc_inv(2.0 * u);
}

namespace {

constexpr int kMaxIter = 100000;

double log_prefactor(double a, double x) { return a * std::log(x) - x - std::lgamma(a); }

}  // namespace

double gamma_q(double a, double x, double rel_tol) {
    if (!(a > 0.0) || !(x >= 0.0)) throw DomainError("gamma_q: need a > 0, x >= 0");
    if (x == 0.0) return 1.0;
    const double pre = std::exp(log_prefactor(a, x));
    if (x < a + 1.0) {
        // P(a,x) = x^a e^-x / Gamma(a+1) * sum_n x^n / ((a+1)...(a+n))
        double term = 1.0 / a, sum = term;
        for (int n = 1; n < kMaxIter; ++n) {
            term *= x / (a + n);
            sum += term;
            if (std::fabs(term) < std::fabs(sum) * rel_tol * 1e-3) return 1.0 - pre * sum;
        }
        throw NonConvergence("gamma_q: series did not converge");
    }
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < kMaxIter; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < rel_tol * 1e-3) return pre * h;
    }
    throw NonConvergence("gamma_q: continued fraction did not converge");
}

}  // namespace steinbench
