#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace steinbench {

enum class DistKind { Gaussian, CenteredGamma, CenteredBeta, UniformSym, NormalizedBernoulli, Tabulated };

struct SteinKernelValue {
    double y = 0.0;
    double value = 0.0;
    bool is_infinite() const { return value == std::numeric_limits<double>::infinity(); }
};

// A centered univariate law. Internally X = scale * Y where Y is the base law of
// the kind (standard normal, centered gamma, centered Beta(alpha,1), uniform on
// [-1,1], normalized Bernoulli, or a recentred tabulated CDF).
class Distribution {
public:
    static Distribution gaussian(double sigma = 1.0);
    static Distribution centered_gamma(double shape);
    static Distribution centered_beta(double alpha);
    static Distribution uniform(double half_width = 1.0);
    static Distribution normalized_bernoulli(double p);
    // Piecewise-linear CDF through (x[i], cdf[i]); recentred to mean 0.
    static Distribution tabulated(std::vector<double> x, std::vector<double> cdf);
    static Distribution tabulated_from_csv(const std::string& path);

    DistKind kind() const { return kind_; }
    double param() const { return param_; }
    double scale() const { return scale_; }
    bool is_continuous() const { return kind_ != DistKind::NormalizedBernoulli; }
    std::string name() const;
    // Stable identity used for caching and term merging.
    std::string key() const;

    // Law of factor * X.
    Distribution scaled(double factor) const;
    // Unit-variance rescaling.
    Distribution normalized() const;

    double lower() const;
    double upper() const;

    double cdf(double x) const;
    double pdf(double x) const;
    double quantile(double u) const;
    // d quantile / du = 1 / pdf(quantile(u)).
    double quantile_derivative(double u) const;

    double variance() const { return raw_moment(2); }
    double raw_moment(int p) const;
    double abs_moment(int p) const;
    // E[g(X)] by quadrature.
    double expect(const std::function<double(double)>& g) const;

    SteinKernelValue stein_kernel(double y) const;
    // phi(y) = -(1/F'(y)) * int_{lo}^{y} x dF(x), evaluated by quadrature.
    SteinKernelValue stein_kernel_quadrature(double y) const;
    double kernel_second_moment() const;
    double kernel_second_moment_quadrature() const;
    // sup of the kernel over the support (+inf when unbounded).
    double kernel_sup() const;
    double density_from_kernel(double z) const;

    // Interior points where the density is not smooth (for splitting integrals).
    std::vector<double> breakpoints() const;

private:
    Distribution() = default;

    double base_cdf(double y) const;
    double base_pdf(double y) const;
    double base_quantile(double u) const;
    double base_raw_moment(int p) const;
    double base_abs_moment(int p) const;
    double base_kernel(double y) const;
    double base_kernel_second_moment() const;
    double base_lower() const;
    double base_upper() const;
    void require_kernel(const char* op) const;
    std::size_t segment_of(double y) const;

    DistKind kind_ = DistKind::Gaussian;
    double param_ = 1.0;
    double scale_ = 1.0;
    // Tabulated: knots (already recentred), cdf values, segment densities,
    // and partial first moments M[i] = int_{x0}^{x_i} x dF.
    std::vector<double> tx_, tf_, td_, tm_;
};

}  // namespace steinbench
