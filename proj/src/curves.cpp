#include <cmath>

#include "steinbench/bounds.hpp"
#include "steinbench/error.hpp"
#include "steinbench/special.hpp"

namespace steinbench {

double gamma_ratio(double s) {
    if (!(s > 0.0)) throw DomainError("gamma ratio: s must be > 0");
    const double q = gamma_q(3.0 + s, s);
    const double tail = std::exp((2.0 + s) * std::log(s) - s + std::log1p(s) - std::lgamma(3.0 + s));
    return 2.0 * (2.0 * q + 2.0 * tail - 1.0);
}

std::vector<CurveRow> comparison_curves(CurveFamily family, const std::vector<double>& grid) {
    std::vector<CurveRow> rows;
    for (double x : grid) {
        if (!(x > 0.0)) throw DomainError("comparison curves: grid must be positive");
        CurveRow r;
        r.x = x;
        if (family == CurveFamily::GammaRatio) {
            try {
                r.ratio = gamma_ratio(x);
            } catch (const NonConvergence&) {
                r.ratio = std::nan("");
                r.failed = true;
            }
        } else {
            const double a = x;
            r.third_moment = 2.0 * std::sqrt((a + 2.0) / a) *
                             (6.0 * a * std::pow(a / (a + 1.0), a + 1.0) + 1.0 - a) / (a + 3.0);
            r.kernel = std::sqrt((4.0 + a * (a * a + a - 2.0)) / (a * (a + 3.0) * (a + 4.0)));
            r.ratio = r.third_moment / r.kernel;
        }
        rows.push_back(r);
    }
    return rows;
}

}  // namespace steinbench
