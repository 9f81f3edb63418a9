#include "steinbench/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "steinbench/csv.hpp"
#include "steinbench/error.hpp"
#include "steinbench/quadrature.hpp"

namespace steinbench {

namespace {

const std::vector<FormulaInfo> kFormulas = {
    {FormulaId::ThirdMoment, "third-moment", "W1",
     "single-integral nabla bound rewritten for sums: |1-E Z^2| + sum E|X|^3 + sum E|X| E X^2"},
    {FormulaId::NormalizedSum, "normalized-sum", "W1", "Holder form for the normalized sum: 2 sum E|X|^3 / (E Z^2)^(3/2)"},
    {FormulaId::KernelSum, "kernel-sum", "W1,TV",
     "Stein-kernel bound for sums with densities: |1-E Z^2| + sqrt(sum(E phi^2 - (E X^2)^2)); TV doubled"},
    {FormulaId::GenericKernel, "generic-kernel", "W1,TV",
     "generic kernel bound |1-E X^2| + ||phi(X) - E phi(X)||_2; TV doubled"},
    {FormulaId::GammaTarget, "gamma-target", "GammaH",
     "gamma-target bound ||2(X+nu) - E X^2||_2 + ||phi(X) - E phi(X)||_2"},
    {FormulaId::SingleNabla, "single-nabla", "W1",
     "finite-difference bound for single integrals (three-term form, two-term form as a term)"},
    {FormulaId::SingleD, "single-D", "W1,TV",
     "derivative-operator bound for single integrals via the per-cell kernel identity; TV doubled"},
    {FormulaId::BernoulliWeighted, "bernoulli-weighted", "W1",
     "weighted sums of normalized Bernoulli variables: |1-sum a^2| + 2 sum |a|^3 (1-2pq)/sqrt(pq)"},
    {FormulaId::MultipleNabla, "multiple-nabla", "W1",
     "finite-difference bound for multiple integrals of order n <= 3 via the G-operator"},
    {FormulaId::QuadraticNabla, "quadratic-nabla", "W1",
     "quadratic forms, matrix form of the order-2 finite-difference bound"},
    {FormulaId::QuadraticD, "quadratic-D", "W1,TV",
     "quadratic forms, derivative-operator bound with the Stein kernel; TV doubled"},
    {FormulaId::CombClt, "comb-clt", "W1",
     "combinatorial CLT bracket for symmetric index sets; constant C(q) unknown (reported as 1)"},
};

double sq(double x) { return x * x; }

BoundReport make(FormulaId id, Metric m, double value, std::vector<BoundTerm> terms) {
    BoundReport r;
    r.formula = id;
    r.metric = m;
    r.value = value;
    r.terms = std::move(terms);
    r.source = formula_info(id).source;
    return r;
}

BoundPair with_tv(BoundReport w1) {
    BoundReport tv = w1;
    tv.metric = Metric::TV;
    tv.value = 2.0 * w1.value;
    tv.terms.push_back({"w1_value", w1.value});
    return {std::move(w1), std::move(tv)};
}

void require_nonempty(const std::vector<Distribution>& d) {
    if (d.empty()) throw DomainError("bound needs at least one summand");
}

double kernel_variance(const Distribution& d) {
    // constant kernel: the variance term vanishes identically
    if (d.kind() == DistKind::Gaussian) return 0.0;
    return std::max(0.0, d.kernel_second_moment() - sq(d.variance()));
}

// A cell of an order-1 tensor: sum_j c_j p_j(t).
struct CellFn {
    std::vector<std::pair<double, CellProfile>> parts;

    double value(double t) const {
        double v = 0.0;
        for (const auto& [c, p] : parts) v += c * p.value(t);
        return v;
    }
    double derivative(double t) const {
        double v = 0.0;
        for (const auto& [c, p] : parts) v += c * p.derivative(t);
        return v;
    }
    std::vector<double> breaks() const {
        std::vector<double> b;
        for (const auto& [c, p] : parts) {
            auto pb = p.breaks();
            b.insert(b.end(), pb.begin(), pb.end());
        }
        // sign changes of the combination
        const int n = 400;
        double prev = value(1e-9);
        for (int i = 1; i <= n; ++i) {
            const double t = std::min(2.0 * i / n, 2.0 - 1e-9);
            const double cur = value(t);
            if ((prev < 0.0) != (cur < 0.0)) {
                double lo = 2.0 * (i - 1) / n, hi = t;
                for (int it = 0; it < 60; ++it) {
                    const double mid = 0.5 * (lo + hi);
                    if ((value(mid) < 0.0) == (prev < 0.0)) lo = mid;
                    else hi = mid;
                }
                b.push_back(0.5 * (lo + hi));
            }
            prev = cur;
        }
        std::sort(b.begin(), b.end());
        return b;
    }
    bool single() const { return parts.size() == 1; }
    bool polynomial() const {
        return std::all_of(parts.begin(), parts.end(), [](const auto& x) { return x.second.is_polynomial(); });
    }
    std::vector<double> poly() const {
        std::vector<double> r;
        for (const auto& [c, p] : parts) {
            const auto& q = p.poly();
            if (q.size() > r.size()) r.resize(q.size(), 0.0);
            for (std::size_t i = 0; i < q.size(); ++i) r[i] += c * q[i];
        }
        return r;
    }
    double abs_power(int q) const {
        if (single()) return std::pow(std::fabs(parts[0].first), q) * parts[0].second.abs_power_integral(q);
        return integrate([&](double t) { return std::pow(std::fabs(value(t)), q); }, 0.0, 2.0, breaks(),
                         QuadratureOptions{1e-15, 1e-13});
    }
};

std::map<CellIndex, CellFn> cells_of(const ChaosTensor& f) {
    std::map<CellIndex, CellFn> cells;
    for (const auto& t : f.terms())
        for (const auto& e : t.coeffs.entries()) cells[e.idx[0]].parts.emplace_back(e.value, t.profiles[0]);
    return cells;
}

void require_order1_canonical(const ChaosTensor& f) {
    if (f.order() != 1) throw DomainError("single-integral bound needs an order-1 tensor");
    if (!f.is_canonical()) throw PreconditionError("single-integral bound needs canonical profiles");
}

std::vector<double> poly_mul(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> r(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

double poly_int_0_2(const std::vector<double>& p) {
    double s = 0.0, pw = 2.0;
    for (std::size_t i = 0; i < p.size(); ++i, pw *= 2.0) s += p[i] * pw / static_cast<double>(i + 1);
    return s;
}

// int_0^2 |f'(x) int_0^x f|^2 dx for one cell.
double derivative_energy(const CellFn& c) {
    if (c.single() && c.parts[0].second.is_single_quantile()) {
        // kernel identity: int |f' F|^2 = 2 c^4 E[phi^2] for f = c Q(t/2)
        const double coef = c.parts[0].first * c.parts[0].second.poly()[0];
        const Distribution& d = c.parts[0].second.factors()[0].first;
        if (!d.is_continuous()) throw UnsupportedKernel("single-D bound: discrete profile has no kernel");
        return 2.0 * std::pow(coef, 4) * d.kernel_second_moment();
    }
    if (c.polynomial()) {
        const auto p = c.poly();
        std::vector<double> dp, prim{0.0};
        for (std::size_t i = 1; i < p.size(); ++i) dp.push_back(p[i] * static_cast<double>(i));
        if (dp.empty()) dp.push_back(0.0);
        for (std::size_t i = 0; i < p.size(); ++i) prim.push_back(p[i] / static_cast<double>(i + 1));
        const auto g = poly_mul(dp, prim);
        return poly_int_0_2(poly_mul(g, g));
    }
    for (const auto& [coef, p] : c.parts)
        for (const auto& [d, e] : p.factors())
            if (!d.is_continuous()) throw UnsupportedKernel("single-D bound: discrete profile has no kernel");
    const auto br = c.breaks();
    auto integrand = [&](double x) {
        const double prim = integrate([&](double t) { return c.value(t); }, 0.0, x, br, QuadratureOptions{1e-15, 1e-12});
        return sq(c.derivative(x) * prim);
    };
    return integrate(integrand, 0.0, 2.0, br, QuadratureOptions{1e-14, 1e-10});
}

double factorial(int n) {
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

double binom(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

void check_quadratic(const Matrix& a) {
    if (a.n == 0 || a.a.size() != a.n * a.n) throw DomainError("quadratic form: malformed matrix");
    for (std::size_t i = 0; i < a.n; ++i) {
        if (a(i, i) != 0.0) throw DomainError("quadratic form: nonzero diagonal");
        for (std::size_t j = 0; j < a.n; ++j)
            if (std::fabs(a(i, j) - a(j, i)) > 1e-14 * (1.0 + std::fabs(a(i, j))))
                throw DomainError("quadratic form: matrix not symmetric");
    }
}

struct MatrixSums {
    double s2 = 0.0;      // sum a^2
    double sum_r2 = 0.0;  // sum_l (sum_k a_kl^2)^2
    double sum_b2 = 0.0;  // sum_{l,p} (A^2)_{lp}^2
    double sum_b2_off = 0.0;
    double sum_a4 = 0.0;
    double lower_r2 = 0.0;  // sum_k (sum_{l<k} a_kl^2)^2
    double l2 = 0.0;        // max row sum of squares
};

MatrixSums matrix_sums(const Matrix& a) {
    MatrixSums s;
    const std::size_t n = a.n;
    for (std::size_t k = 0; k < n; ++k) {
        double row = 0.0, low = 0.0;
        for (std::size_t l = 0; l < n; ++l) {
            row += sq(a(k, l));
            s.sum_a4 += std::pow(a(k, l), 4);
            if (l < k) low += sq(a(k, l));
        }
        s.s2 += row;
        s.sum_r2 += row * row;
        s.lower_r2 += low * low;
        s.l2 = std::max(s.l2, row);
    }
    for (std::size_t l = 0; l < n; ++l)
        for (std::size_t p = 0; p < n; ++p) {
            double b = 0.0;
            for (std::size_t k = 0; k < n; ++k) b += a(k, l) * a(k, p);
            s.sum_b2 += b * b;
            if (l != p) s.sum_b2_off += b * b;
        }
    return s;
}

bool is_perfect_matching(const Matrix& a) {
    if (a.n % 2) return false;
    double v = -1.0;
    for (std::size_t k = 0; k < a.n; ++k) {
        int nz = 0;
        for (std::size_t l = 0; l < a.n; ++l) {
            if (a(k, l) == 0.0) continue;
            ++nz;
            if (v < 0.0) v = std::fabs(a(k, l));
            if (std::fabs(a(k, l)) != v) return false;
        }
        if (nz != 1) return false;
    }
    return true;
}

}  // namespace

// ---- table ----

const std::vector<FormulaInfo>& formula_table() { return kFormulas; }

const FormulaInfo& formula_info(FormulaId id) {
    for (const auto& f : kFormulas)
        if (f.id == id) return f;
    throw DomainError("unknown formula id");
}

FormulaId formula_from_slug(const std::string& slug) {
    for (const auto& f : kFormulas)
        if (slug == f.slug) return f.id;
    throw DomainError("unknown formula '" + slug + "'");
}

const char* metric_name(Metric m) {
    switch (m) {
        case Metric::W1: return "W1";
        case Metric::TV: return "TV";
        case Metric::GammaH: return "GammaH";
    }
    return "?";
}

double BoundReport::term(const std::string& name) const {
    for (const auto& t : terms)
        if (t.name == name) return t.value;
    throw DomainError("bound report has no term '" + name + "'");
}

bool BoundReport::has_term(const std::string& name) const {
    return std::any_of(terms.begin(), terms.end(), [&](const BoundTerm& t) { return t.name == name; });
}

Matrix Matrix::from_csv(const std::string& path) {
    const CsvTable t = read_csv(path);
    std::vector<std::tuple<std::size_t, std::size_t, double>> e;
    std::size_t n = 0;
    for (const auto& row : t.rows) {
        if (row.size() != 3) throw DataError("matrix csv rows need k,l,value");
        const long long k = parse_int(row[0]), l = parse_int(row[1]);
        if (k < 0 || l < 0) throw DataError("matrix csv: negative index");
        e.emplace_back(k, l, parse_double(row[2]));
        n = std::max<std::size_t>(n, std::max(k, l) + 1);
    }
    Matrix m;
    m.n = n;
    m.a.assign(n * n, 0.0);
    for (auto [k, l, v] : e) m.a[k * n + l] += v;
    return m;
}

Matrix Matrix::pairwise(std::size_t pairs) {
    Matrix m;
    m.n = 2 * pairs;
    m.a.assign(m.n * m.n, 0.0);
    const double v = 0.5 / std::sqrt(static_cast<double>(pairs));
    for (std::size_t k = 0; k < pairs; ++k) {
        m.a[(2 * k) * m.n + 2 * k + 1] = v;
        m.a[(2 * k + 1) * m.n + 2 * k] = v;
    }
    return m;
}

std::vector<Distribution> normalized_iid(const Distribution& dist, std::size_t n) {
    if (n == 0) throw DomainError("normalized_iid: n must be >= 1");
    const Distribution x = dist.normalized().scaled(1.0 / std::sqrt(static_cast<double>(n)));
    return std::vector<Distribution>(n, x);
}

// ---- sums ----

BoundReport bound_sum_third_moment(const std::vector<Distribution>& dists) {
    require_nonempty(dists);
    double e2 = 0.0, third = 0.0, cross = 0.0;
    for (const auto& d : dists) {
        const double v = d.variance();
        e2 += v;
        third += d.abs_moment(3);
        cross += d.abs_moment(1) * v;
    }
    const double gap = std::fabs(1.0 - e2);
    return make(FormulaId::ThirdMoment, Metric::W1, gap + third + cross,
                {{"variance_gap", gap}, {"third_moment_sum", third}, {"cross_moment_sum", cross}});
}

BoundReport bound_sum_normalized(const std::vector<Distribution>& dists) {
    require_nonempty(dists);
    double e2 = 0.0, third = 0.0;
    for (const auto& d : dists) {
        e2 += d.variance();
        third += d.abs_moment(3);
    }
    if (!(e2 > 0.0)) throw DomainError("normalized-sum bound: zero variance");
    return make(FormulaId::NormalizedSum, Metric::W1, 2.0 * third / std::pow(e2, 1.5),
                {{"third_moment_sum", third}, {"variance", e2}});
}

BoundPair bound_sum_kernel(const std::vector<Distribution>& dists) {
    require_nonempty(dists);
    double e2 = 0.0, kv = 0.0;
    for (const auto& d : dists) {
        if (!d.is_continuous()) throw UnsupportedKernel("kernel-sum bound: discrete summand");
        e2 += d.variance();
        kv += kernel_variance(d);
    }
    const double gap = std::fabs(1.0 - e2);
    const double root = std::sqrt(kv);
    return with_tv(make(FormulaId::KernelSum, Metric::W1, gap + root,
                        {{"variance_gap", gap}, {"kernel_variance_sum", kv}, {"kernel_term", root}}));
}

BoundPair bound_generic_kernel(double e2, double kernel_sq) {
    if (!(e2 >= 0.0) || !std::isfinite(kernel_sq)) throw InvalidMoments("generic-kernel: bad moments");
    const double kv = kernel_sq - e2 * e2;
    if (kv < -1e-12 * std::max(1.0, kernel_sq)) throw InvalidMoments("generic-kernel: E[phi^2] < (E X^2)^2");
    const double gap = std::fabs(1.0 - e2);
    const double root = std::sqrt(std::max(0.0, kv));
    return with_tv(make(FormulaId::GenericKernel, Metric::W1, gap + root,
                        {{"variance_gap", gap}, {"kernel_variance", std::max(0.0, kv)}, {"kernel_term", root}}));
}

BoundReport bound_gamma_target(const Distribution& dist, double nu) {
    if (!(nu > 0.0)) throw DomainError("gamma-target: nu must be > 0");
    if (!std::isfinite(dist.lower()) || dist.lower() < -nu)
        throw DomainError("gamma-target: support must lie in (-nu, inf)");
    if (!dist.is_continuous()) throw UnsupportedKernel("gamma-target: discrete law has no kernel");
    const double e2 = dist.variance();
    const double l2 = std::sqrt(dist.expect([&](double x) { return sq(2.0 * (x + nu) - e2); }));
    const double kv = dist.kind() == DistKind::Gaussian ? 0.0
                                                        : std::max(0.0, dist.kernel_second_moment() - e2 * e2);
    const double root = std::sqrt(kv);
    const double first_form =
        dist.expect([&](double x) { return std::fabs(2.0 * (x + nu) - dist.stein_kernel(x).value); });
    return make(FormulaId::GammaTarget, Metric::GammaH, l2 + root,
                {{"target_l2_term", l2}, {"kernel_term", root}, {"first_form", first_form}});
}

// ---- single integrals ----

BoundReport bound_single_integral_nabla(const ChaosTensor& f) {
    require_order1_canonical(f);
    const double gap = std::fabs(1.0 - l2_norm_sq(f));
    double cube = 0.0, cell_product = 0.0;
    for (const auto& [cell, c] : cells_of(f)) {
        const double a1 = c.abs_power(1), a2 = c.abs_power(2), a3 = c.abs_power(3);
        cube += a3;
        cell_product += a1 * a2;
    }
    const double three = gap + 0.5 * cube + 0.25 * cell_product;
    const double two = gap + cube;
    return make(FormulaId::SingleNabla, Metric::W1, three,
                {{"variance_gap", gap},
                 {"abs_cube_integral", cube},
                 {"cell_product_sum", cell_product},
                 {"two_term_value", two}});
}

BoundPair bound_single_integral_D(const ChaosTensor& f) {
    require_order1_canonical(f);
    const double gap = std::fabs(1.0 - l2_norm_sq(f));
    double energy = 0.0, cell_sq = 0.0;
    for (const auto& [cell, c] : cells_of(f)) {
        energy += derivative_energy(c);
        cell_sq += sq(c.abs_power(2));
    }
    const double inside = std::max(0.0, 2.0 * energy - cell_sq);
    const double root = 0.5 * std::sqrt(inside);
    return with_tv(make(FormulaId::SingleD, Metric::W1, gap + root,
                        {{"variance_gap", gap},
                         {"derivative_energy", energy},
                         {"cell_energy_sq", cell_sq},
                         {"root_term", root}}));
}

BoundReport bound_bernoulli_weighted(const std::vector<double>& alphas, const std::vector<double>& ps) {
    if (alphas.size() != ps.size()) throw DomainError("bernoulli-weighted: length mismatch");
    double s2 = 0.0, third = 0.0;
    for (std::size_t k = 0; k < alphas.size(); ++k) {
        const double p = ps[k];
        if (!(p > 0.0 && p < 1.0)) throw DomainError("bernoulli-weighted: p outside (0,1)");
        const double pq = p * (1.0 - p);
        s2 += sq(alphas[k]);
        third += std::pow(std::fabs(alphas[k]), 3) * (1.0 - 2.0 * pq) / std::sqrt(pq);
    }
    const double gap = std::fabs(1.0 - s2);
    return make(FormulaId::BernoulliWeighted, Metric::W1, gap + 2.0 * third,
                {{"variance_gap", gap}, {"weighted_third_sum", third}});
}

// ---- multiple integrals ----

BoundReport bound_multiple_nabla(const ChaosTensor& f0) {
    const int n = f0.order();
    if (n < 1) throw DomainError("multiple-nabla: order must be >= 1");
    if (n > 3) throw CapacityError("multiple-nabla: order above 3");
    if (!f0.is_canonical()) throw PreconditionError("multiple-nabla: non-canonical integrand");
    const ChaosTensor f = symmetrize(restrict_to_delta(f0));
    const double norm2 = l2_norm_sq(f);
    const int m = n - 1;
    auto w = [m](int r, int l) { return factorial(r) * binom(m, r) * binom(m, r) * binom(r, l); };

    double ghat = 0.0;
    for (int k = 1; k <= 2 * m; ++k) {
        ChaosTensor g(k, f.cells());
        for (int r = 0; r <= m; ++r)
            for (int l = 0; l <= r; ++l)
                if (2 * m - r - l == k) g.add(symmetrize(contract(f, f, r + 1, l + 1)), w(r, l));
        ghat += factorial(k) * l2_norm_sq(restrict_to_delta(g));
    }
    double inner_sum = 0.0;
    for (int k = 0; k <= 2 * m; ++k) {
        ChaosTensor g(k + 1, f.cells());
        for (int r = 0; r <= m; ++r)
            for (int l = 0; l <= r; ++l)
                if (2 * m - r - l == k) g.add(symmetrize(contract(f, f, r + 1, l), 1), w(r, l));
        // leading axis carries t; int dt = 2 * (1/2) int dt
        inner_sum += factorial(k) * 2.0 * l2_norm_sq(restrict_to_delta(g));
    }
    const double nn = static_cast<double>(n) * n;
    const double first = std::sqrt(sq(1.0 - factorial(n) * norm2) + nn * ghat);
    const double second = nn * std::sqrt(2.0 * factorial(m)) * std::sqrt(norm2) * std::sqrt(inner_sum);
    return make(FormulaId::MultipleNabla, Metric::W1, first + second,
                {{"norm_sq", norm2},
                 {"ghat_sum", ghat},
                 {"g_inner_sum", inner_sum},
                 {"first_part", first},
                 {"second_part", second}});
}

BoundReport bound_quadratic_nabla(const Matrix& a, const Distribution& dist) {
    check_quadratic(a);
    const MatrixSums s = matrix_sums(a);
    if (!(s.s2 > 0.0)) throw DomainError("quadratic-nabla: zero matrix");
    const Distribution x = dist.normalized();
    const double mu4 = x.raw_moment(4);
    const double c4 = 3.0 * mu4 + mu4 * mu4;
    const double part1 = 2.0 * std::sqrt(mu4 * s.sum_r2 + 2.0 * s.sum_b2);
    const double part2 = 4.0 * std::sqrt(c4 * s.sum_r2);
    const double value = part1 + part2;

    const double nd = static_cast<double>(a.n);
    const double jdk2 = 2.0 * std::sqrt(nd) * s.l2 *
                        (std::sqrt(mu4 + 2.0 * s.sum_b2 / (nd * s.l2 * s.l2)) + 2.0 * std::sqrt(c4));

    // order-2 finite-difference bound written out in matrix sums (unit-variance entries)
    const double exp_first = std::sqrt(sq(1.0 - 2.0 * s.s2) + 4.0 * mu4 * s.sum_r2 + 8.0 * s.sum_b2_off);
    const double exp_second =
        8.0 * std::sqrt(s.s2) * std::sqrt(mu4 * (3.0 * s.sum_r2 + (mu4 - 2.0) * s.sum_a4));

    std::vector<BoundTerm> terms = {{"first_part", part1},
                                    {"second_part", part2},
                                    {"fourth_moment", mu4},
                                    {"L_n_sq", s.l2},
                                    {"jdk2_value", jdk2},
                                    {"expanded_value", exp_first + exp_second},
                                    {"variance_normalized", std::fabs(2.0 * s.s2 - 1.0) <= 1e-9 ? 1.0 : 0.0}};
    if (is_perfect_matching(a)) terms.push_back({"pairwise_cap", 8.0 * mu4 / std::sqrt(nd / 2.0)});
    return make(FormulaId::QuadraticNabla, Metric::W1, value, std::move(terms));
}

BoundPair bound_quadratic_D(const Matrix& a, const Distribution& dist) {
    check_quadratic(a);
    if (!dist.is_continuous()) throw UnsupportedKernel("quadratic-D: discrete law has no kernel");
    const MatrixSums s = matrix_sums(a);
    if (!(s.s2 > 0.0)) throw DomainError("quadratic-D: zero matrix");
    const Distribution x = dist.normalized();
    const double mu4 = x.raw_moment(4);
    const double kphi = x.kernel_second_moment();
    const double inside = kphi * (2.0 + mu4) * s.l2 + 2.0 * s.sum_b2 - s.lower_r2;
    const double value = 4.0 * std::sqrt(std::max(0.0, inside));
    return with_tv(make(FormulaId::QuadraticD, Metric::W1, value,
                        {{"kernel_second_moment", kphi},
                         {"fourth_moment", mu4},
                         {"L_n_sq", s.l2},
                         {"inside", inside},
                         {"variance_normalized", std::fabs(2.0 * s.s2 - 1.0) <= 1e-9 ? 1.0 : 0.0}}));
}

}  // namespace steinbench
