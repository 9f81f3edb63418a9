#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "steinbench/bounds.hpp"
#include "steinbench/chaos.hpp"
#include "steinbench/csv.hpp"
#include "steinbench/distributions.hpp"
#include "steinbench/error.hpp"
#include "steinbench/kernels.hpp"
#include "steinbench/profile.hpp"
#include "steinbench/verify.hpp"

using namespace steinbench;

namespace {

struct Options {
    std::string formula;
    std::string dist = "gaussian";
    std::string table;
    double shape = 1.0;
    double alpha = 1.0;
    double sigma = 1.0;
    double p = 0.5;
    double nu = 1.0;
    std::size_t n = 1;
    std::string matrix;
    std::vector<std::string> tensors;
    std::string weights;
    std::string family;
    std::string grid;
    std::size_t m = 200000;
    std::uint64_t seed = 1;
    std::string out;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Distribution make_dist(const Options& o) {
    if (o.dist == "gaussian") return Distribution::gaussian(o.sigma);
    if (o.dist == "gamma") return Distribution::centered_gamma(o.shape);
    if (o.dist == "beta") return Distribution::centered_beta(o.alpha);
    if (o.dist == "uniform") return Distribution::uniform(1.0);
    if (o.dist == "bernoulli") return Distribution::normalized_bernoulli(o.p);
    if (o.dist == "tabulated") {
        if (o.table.empty()) throw UsageError("--dist tabulated needs --table <csv>");
        return Distribution::tabulated_from_csv(o.table);
    }
    throw UsageError("unknown --dist '" + o.dist + "'");
}

struct Grid {
    double lo, hi;
    std::size_t count;
};

Grid parse_grid(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
    if (parts.size() != 3) throw UsageError("--grid expects lo:hi:count");
    Grid g{parse_double(parts[0]), parse_double(parts[1]), static_cast<std::size_t>(parse_int(parts[2]))};
    if (g.count == 0 || !(g.lo <= g.hi)) throw UsageError("--grid needs lo <= hi and count >= 1");
    return g;
}

std::vector<double> grid_points(const Grid& g) {
    std::vector<double> x(g.count);
    for (std::size_t i = 0; i < g.count; ++i)
        x[i] = g.count == 1 ? g.lo : g.lo + (g.hi - g.lo) * static_cast<double>(i) / static_cast<double>(g.count - 1);
    return x;
}

std::string with_header(const std::string& header, const std::string& body) { return header + "\n" + body; }

void emit(const Options& o, const std::string& header, const std::string& body, bool append) {
    if (o.out.empty()) {
        std::cout << with_header(header, body);
        return;
    }
    std::string content;
    if (append && std::filesystem::exists(o.out)) {
        std::ifstream in(o.out, std::ios::binary);
        std::stringstream buf;
        buf << in.rdbuf();
        content = buf.str();
        if (!content.empty() && content.back() != '\n') content += '\n';
        content += body;
    } else {
        content = with_header(header, body);
    }
    write_file_atomic(o.out, content);
}

CellProfile dist_profile(const Distribution& d) { return CellProfile::quantile(d.normalized()); }

ChaosTensor load_tensor(const Options& o, std::size_t idx, const Distribution& d) {
    if (o.tensors.size() <= idx) throw UsageError("missing --tensor <csv>");
    return ChaosTensor::from_csv(o.tensors[idx], dist_profile(d));
}

ChaosTensor single_integral(const Options& o, const Distribution& d) {
    if (!o.tensors.empty()) {
        ChaosTensor f = load_tensor(o, 0, d);
        if (f.order() != 1) throw UsageError("single-integral formulas need an order-1 tensor");
        return f;
    }
    return ChaosTensor::linear(std::vector<double>(o.n, 1.0 / std::sqrt(static_cast<double>(o.n))), dist_profile(d));
}

Matrix quadratic_matrix(const Options& o) {
    if (!o.matrix.empty()) return Matrix::from_csv(o.matrix);
    if (o.n < 2 || o.n % 2 != 0) throw UsageError("pairwise quadratic form needs an even --n");
    return Matrix::pairwise(o.n / 2);
}

void bernoulli_inputs(const Options& o, std::vector<double>& alphas, std::vector<double>& ps) {
    if (o.weights.empty()) {
        alphas.assign(o.n, 1.0 / std::sqrt(static_cast<double>(o.n)));
        ps.assign(o.n, o.p);
        return;
    }
    const CsvTable t = read_csv(o.weights);
    for (const auto& row : t.rows) {
        if (row.empty() || row.size() > 2) throw DataError("weights csv rows need alpha[,p]");
        alphas.push_back(parse_double(row[0]));
        ps.push_back(row.size() == 2 ? parse_double(row[1]) : o.p);
    }
}

struct Computed {
    std::vector<BoundReport> reports;
    std::optional<FunctionalSpec> spec;
};

Computed compute(const Options& o) {
    if (o.formula.empty()) throw UsageError("--formula is required");
    if (o.n == 0) throw UsageError("--n must be >= 1");
    const FormulaId id = formula_from_slug(o.formula);
    const Distribution d = make_dist(o);
    Computed c;
    auto pair = [&c](const BoundPair& p) {
        c.reports.push_back(p.w1);
        c.reports.push_back(p.tv);
    };
    switch (id) {
        case FormulaId::ThirdMoment:
        case FormulaId::NormalizedSum:
        case FormulaId::KernelSum: {
            const auto dists = normalized_iid(d, o.n);
            if (id == FormulaId::ThirdMoment) c.reports.push_back(bound_sum_third_moment(dists));
            if (id == FormulaId::NormalizedSum) c.reports.push_back(bound_sum_normalized(dists));
            if (id == FormulaId::KernelSum) pair(bound_sum_kernel(dists));
            c.spec = SumSpec{dists};
            break;
        }
        case FormulaId::GenericKernel: {
            pair(bound_generic_kernel(d.variance(), d.kernel_second_moment()));
            c.spec = SumSpec{{d}};
            break;
        }
        case FormulaId::GammaTarget: c.reports.push_back(bound_gamma_target(d, o.nu)); break;
        case FormulaId::SingleNabla:
        case FormulaId::SingleD: {
            ChaosTensor f = single_integral(o, d);
            if (id == FormulaId::SingleNabla)
                c.reports.push_back(bound_single_integral_nabla(f));
            else
                pair(bound_single_integral_D(f));
            c.spec = std::move(f);
            break;
        }
        case FormulaId::BernoulliWeighted: {
            std::vector<double> alphas, ps;
            bernoulli_inputs(o, alphas, ps);
            c.reports.push_back(bound_bernoulli_weighted(alphas, ps));
            SumSpec s;
            for (std::size_t k = 0; k < alphas.size(); ++k)
                s.dists.push_back(Distribution::normalized_bernoulli(ps[k]).scaled(alphas[k]));
            c.spec = std::move(s);
            break;
        }
        case FormulaId::MultipleNabla: {
            ChaosTensor f = load_tensor(o, 0, d);
            c.reports.push_back(bound_multiple_nabla(f));
            c.spec = std::move(f);
            break;
        }
        case FormulaId::QuadraticNabla:
        case FormulaId::QuadraticD: {
            const Matrix a = quadratic_matrix(o);
            const Distribution x = d.normalized();
            if (id == FormulaId::QuadraticNabla)
                c.reports.push_back(bound_quadratic_nabla(a, x));
            else
                pair(bound_quadratic_D(a, x));
            c.spec = QuadraticSpec{a, x};
            break;
        }
        case FormulaId::CombClt: {
            if (o.tensors.empty()) throw UsageError("comb-clt needs --tensor <index tuples csv>");
            const IndexSetFamily fam = IndexSetFamily::from_csv(o.tensors[0], o.weights);
            c.reports.push_back(bound_comb_clt(fam, d.normalized()));
            break;
        }
    }
    return c;
}

int cmd_bound(const Options& o) {
    const Computed c = compute(o);
    std::string body;
    for (const auto& r : c.reports) {
        const std::string lead = std::string(formula_info(r.formula).slug) + "," + metric_name(r.metric) + "," +
                                 format_double(r.value) + ",";
        body += lead + ",\n";
        for (const auto& t : r.terms) body += lead + t.name + "," + format_double(t.value) + "\n";
    }
    emit(o, "formula_id,metric,value,term_name,term_value", body, false);
    return 0;
}

int cmd_verify(const Options& o) {
    if (o.m < 1000) throw UsageError("--m must be >= 1000 for verify");
    const Computed c = compute(o);
    if (!c.spec) throw UsageError("formula '" + o.formula + "' has no sample-estimable metric");
    std::string body;
    bool all_hold = true;
    for (const auto& r : c.reports) {
        if (r.metric == Metric::GammaH) continue;
        const CheckResult res = check_bound(r, *c.spec, o.m, o.seed);
        all_hold = all_hold && res.holds;
        std::ostringstream row;
        row << formula_info(r.formula).slug << "-" << metric_name(r.metric) << "," << formula_info(r.formula).slug
            << "," << o.n << "," << make_dist(o).name() << "," << format_double(r.value) << ","
            << format_double(res.estimate.value) << "," << format_double(res.estimate.std_error) << ","
            << (res.holds ? "true" : "false") << "," << format_double(res.margin) << "," << o.seed << "\n";
        body += row.str();
    }
    emit(o, "check_id,formula_id,n,dist,bound,estimate,std_error,holds,margin,seed", body, true);
    return all_hold ? 0 : 2;
}

int cmd_compare(const Options& o) {
    CurveFamily fam;
    if (o.family == "beta-ratio")
        fam = CurveFamily::BetaRatio;
    else if (o.family == "gamma-ratio")
        fam = CurveFamily::GammaRatio;
    else
        throw UsageError("--family must be beta-ratio or gamma-ratio");
    const Grid g = parse_grid(o.grid.empty() ? "0.1:10:100" : o.grid);
    std::string body;
    for (const auto& r : comparison_curves(fam, grid_points(g)))
        body += format_double(r.x) + "," + format_double(r.third_moment) + "," + format_double(r.kernel) + "," +
                format_double(r.ratio) + "," + (r.failed ? "true" : "false") + "\n";
    emit(o, "x,third_moment,kernel,ratio,failed", body, false);
    return 0;
}

int cmd_kernel(const Options& o) {
    const Distribution d = make_dist(o);
    std::vector<double> ys;
    if (!o.grid.empty()) {
        ys = grid_points(parse_grid(o.grid));
    } else {
        for (int i = 1; i < 100; ++i) ys.push_back(d.quantile(i / 100.0));
    }
    std::string body;
    for (double y : ys) {
        const SteinKernelValue v = d.stein_kernel(y);
        body += format_double(y) + "," + format_double(v.value) + "\n";
    }
    body += "# kernel_second_moment," + format_double(d.kernel_second_moment()) + "\n";
    emit(o, "y,kernel", body, false);
    return 0;
}

int cmd_multiply(const Options& o) {
    const Distribution d = make_dist(o);
    if (o.tensors.size() != 2) throw UsageError("multiply-check needs two --tensor files");
    const ChaosTensor f = load_tensor(o, 0, d), g = load_tensor(o, 1, d);
    const MultiplicationCheck r = verify_multiplication(f, g, o.m, o.seed);
    const bool ok = r.max_abs_path_error <= 1e-9 && std::fabs(r.mc_zscore) <= 4.0;
    emit(o, "max_abs_path_error,mc_zscore,holds,seed",
         format_double(r.max_abs_path_error) + "," + format_double(r.mc_zscore) + "," + (ok ? "true" : "false") +
             "," + std::to_string(o.seed) + "\n",
         false);
    return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"steinbench: Stein-method normal approximation bounds and Monte Carlo checks"};
    app.set_config("--config", "", "TOML config file; flags override its values");
    app.require_subcommand(0, 1);
    Options o;
    bool list = false;
    app.add_flag("--list-formulas", list, "List formula ids");

    auto add_common = [&o](CLI::App* sub) {
        sub->add_option("--formula", o.formula, "Formula id (see --list-formulas)");
        sub->add_option("--dist", o.dist, "gaussian|gamma|beta|uniform|bernoulli|tabulated");
        sub->add_option("--table", o.table, "CSV of x,cdf knots for --dist tabulated");
        sub->add_option("--shape", o.shape, "Gamma shape s");
        sub->add_option("--alpha", o.alpha, "Beta parameter alpha");
        sub->add_option("--sigma", o.sigma, "Gaussian standard deviation");
        sub->add_option("--p", o.p, "Bernoulli success probability");
        sub->add_option("--nu", o.nu, "Gamma-target parameter");
        sub->add_option("--n", o.n, "Number of summands / cells");
        sub->add_option("--matrix", o.matrix, "CSV k,l,value for quadratic forms");
        sub->add_option("--tensor", o.tensors, "CSV k1,...,kn,value (repeatable); index tuples for comb-clt");
        sub->add_option("--weights", o.weights, "Weights CSV");
        sub->add_option("--family", o.family, "Curve family for compare");
        sub->add_option("--grid", o.grid, "lo:hi:count");
        sub->add_option("--m", o.m, "Monte Carlo sample size");
        sub->add_option("--seed", o.seed, "Seed");
        sub->add_option("--out", o.out, "Output CSV path (stdout if omitted)");
    };
    auto* kernel = app.add_subcommand("kernel", "Tabulate a Stein kernel");
    auto* bound = app.add_subcommand("bound", "Evaluate a bound formula");
    auto* verify = app.add_subcommand("verify", "Check a bound against a Monte Carlo estimate");
    auto* compare = app.add_subcommand("compare", "Comparison curves");
    auto* multiply = app.add_subcommand("multiply-check", "Check the multiplication formula");
    for (auto* s : {kernel, bound, verify, compare, multiply}) add_common(s);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (list) {
            std::cout << "formula_id,metrics,source\n";
            for (const auto& f : formula_table()) std::cout << f.slug << ",\"" << f.metrics << "\",\"" << f.source << "\"\n";
            return 0;
        }
        if (*kernel) return cmd_kernel(o);
        if (*bound) return cmd_bound(o);
        if (*verify) return cmd_verify(o);
        if (*compare) return cmd_compare(o);
        if (*multiply) return cmd_multiply(o);
        std::cerr << app.help();
        return 1;
    } catch (const UsageError& e) {
        std::cerr << "steinbench: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "steinbench: " << e.what() << "\n";
        return 1;
    }
}
