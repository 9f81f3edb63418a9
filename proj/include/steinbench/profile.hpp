#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "steinbench/distributions.hpp"

namespace steinbench {

// A real function on one cell, in local coordinate t in [0, 2). Stored as
// poly(t) * prod_d Q_d(t/2)^{e_d}, where Q_d is the quantile function of a
// distribution. Products of profiles stay in this form.
class CellProfile {
public:
    CellProfile();  // constant 1
    static CellProfile quantile(const Distribution& d);
    static CellProfile polynomial(std::vector<double> coeffs);
    static CellProfile constant(double c);

    CellProfile operator*(const CellProfile& o) const;
    CellProfile scaled(double c) const;

    double value(double t) const;
    double derivative(double t) const;
    // int_0^2 p(t) dt
    double integral() const;
    // (1/2) int_0^2 p(t) dt
    double mean() const { return 0.5 * integral(); }
    bool canonical() const;
    // int_0^2 |p(t)|^q dt
    double abs_power_integral(int q) const;

    bool is_polynomial() const;
    bool is_single_quantile() const;  // constant * Q_d with exponent 1
    const std::vector<double>& poly() const;
    const std::vector<std::pair<Distribution, int>>& factors() const;
    // Points in (0,2) where the profile may have kinks or jumps.
    std::vector<double> breaks() const;
    const std::string& key() const;

private:
    struct Rep;
    explicit CellProfile(std::shared_ptr<const Rep> rep);
    std::shared_ptr<const Rep> rep_;
};

// (1/2) int_0^2 p q dt, memoized by profile keys.
double inner(const CellProfile& p, const CellProfile& q);

}  // namespace steinbench
