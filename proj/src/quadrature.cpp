#include "steinbench/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/sinh_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "steinbench/error.hpp"

namespace steinbench {
namespace bq = boost::math::quadrature;

namespace {

double checked(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw NonConvergence(std::string("quadrature did not converge (") + what + ")");
    }
    return v;
}

double tol_of(const QuadratureOptions& opt) {
    return std::max(opt.rel_tol, 1e-15);
}

}  // namespace

double integrate(const Integrand& f, double a, double b, const QuadratureOptions& opt) {
    if (std::isnan(a) || std::isnan(b)) throw DomainError("integrate: NaN limit");
    if (a == b) return 0.0;
    if (a > b) return -integrate(f, b, a, opt);
    const bool fa = std::isfinite(a), fb = std::isfinite(b);
    double err = 0.0, l1 = 0.0;
    try {
        if (fa && fb) {
            static thread_local bq::tanh_sinh<double> ts(15);
            return checked(ts.integrate(f, a, b, tol_of(opt), &err, &l1), "tanh_sinh");
        }
        if (fa || fb) {
            static thread_local bq::exp_sinh<double> es(9);
            if (fa) return checked(es.integrate(f, a, b, tol_of(opt), &err, &l1), "exp_sinh");
            auto g = [&](double x) { return f(-x); };
            return checked(es.integrate(g, -b, std::numeric_limits<double>::infinity(),
                                        tol_of(opt), &err, &l1),
                           "exp_sinh");
        }
        static thread_local bq::sinh_sinh<double> ss(9);
        return checked(ss.integrate(f, tol_of(opt), &err, &l1), "sinh_sinh");
    } catch (const Error&) {
        throw;
    } catch (const std::domain_error& e) {
        throw NonConvergence(e.what());
    } catch (const std::runtime_error& e) {  // evaluation, overflow and underflow errors
        throw NonConvergence(e.what());
    }
}

double integrate(const Integrand& f, double a, double b, const std::vector<double>& breaks,
                 const QuadratureOptions& opt) {
    if (a > b) return -integrate(f, b, a, breaks, opt);
    std::vector<double> pts{a};
    for (double c : breaks) {
        if (c > a && c < b) pts.push_back(c);
    }
    std::sort(pts.begin() + 1, pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    pts.push_back(b);
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) sum += integrate(f, pts[i], pts[i + 1], opt);
    return sum;
}

double integrate_smooth(const Integrand& f, double a, double b, const QuadratureOptions& opt) {
    if (a == b) return 0.0;
    double err = 0.0;
    double v = bq::gauss_kronrod<double, 15>::integrate(f, a, b, 30, tol_of(opt), &err);
    return checked(v, "gauss_kronrod");
}

}  // namespace steinbench
