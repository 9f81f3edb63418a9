#pragma once

#include <functional>
#include <vector>

namespace steinbench {

using Integrand = std::function<double(double)>;

struct QuadratureOptions {
    double abs_tol = 1e-12;
    double rel_tol = 1e-8;
};

// Integral of f over [a, b]; either end may be infinite. Endpoint
// singularities are tolerated (double-exponential rules).
double integrate(const Integrand& f, double a, double b,
                 const QuadratureOptions& opt = {});

// Same, but splits [a, b] at the given interior points first.
double integrate(const Integrand& f, double a, double b,
                 const std::vector<double>& breaks,
                 const QuadratureOptions& opt = {});

// Adaptive Gauss-Kronrod (15 point) for smooth integrands on finite ranges.
double integrate_smooth(const Integrand& f, double a, double b,
                        const QuadratureOptions& opt = {});

}  // namespace steinbench
