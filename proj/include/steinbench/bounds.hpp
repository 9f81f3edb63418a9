#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "steinbench/chaos.hpp"
#include "steinbench/distributions.hpp"

namespace steinbench {

enum class Metric { W1, TV, GammaH };

enum class FormulaId {
    ThirdMoment,
    NormalizedSum,
    KernelSum,
    GenericKernel,
    GammaTarget,
    SingleNabla,
    SingleD,
    BernoulliWeighted,
    MultipleNabla,
    QuadraticNabla,
    QuadraticD,
    CombClt,
};

struct BoundTerm {
    std::string name;
    double value;
};

struct BoundReport {
    FormulaId formula = FormulaId::ThirdMoment;
    Metric metric = Metric::W1;
    double value = 0.0;
    std::vector<BoundTerm> terms;
    std::string source;

    // Throws DomainError when absent.
    double term(const std::string& name) const;
    bool has_term(const std::string& name) const;
};

struct BoundPair {
    BoundReport w1;
    BoundReport tv;
};

struct FormulaInfo {
    FormulaId id;
    const char* slug;
    const char* metrics;
    const char* source;
};

const std::vector<FormulaInfo>& formula_table();
const FormulaInfo& formula_info(FormulaId id);
FormulaId formula_from_slug(const std::string& slug);
const char* metric_name(Metric m);

// Row-major dense square matrix.
struct Matrix {
    std::size_t n = 0;
    std::vector<double> a;

    double operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
    static Matrix from_csv(const std::string& path);
    // Pairs (2k, 2k+1), k < pairs, with entries chosen so Var[Q] = 1 for unit-variance inputs.
    static Matrix pairwise(std::size_t pairs);
};

BoundReport bound_sum_third_moment(const std::vector<Distribution>& dists);
BoundReport bound_sum_normalized(const std::vector<Distribution>& dists);
BoundPair bound_sum_kernel(const std::vector<Distribution>& dists);
BoundPair bound_generic_kernel(double e2, double kernel_sq);
BoundReport bound_gamma_target(const Distribution& dist, double nu);
BoundReport bound_single_integral_nabla(const ChaosTensor& f);
BoundPair bound_single_integral_D(const ChaosTensor& f);
BoundReport bound_bernoulli_weighted(const std::vector<double>& alphas, const std::vector<double>& ps);
BoundReport bound_multiple_nabla(const ChaosTensor& f);
BoundReport bound_quadratic_nabla(const Matrix& a, const Distribution& dist);
BoundPair bound_quadratic_D(const Matrix& a, const Distribution& dist);

// n i.i.d. copies of dist, each scaled so that the sum has unit variance.
std::vector<Distribution> normalized_iid(const Distribution& dist, std::size_t n);

// ---- combinatorial CLT ----

struct IndexSetFamily {
    int q = 1;
    std::vector<std::vector<std::size_t>> tuples;  // K, closed under permutation
    std::vector<double> b;                         // weights b_k (missing entries count as 0)

    static IndexSetFamily from_csv(const std::string& tuples_path, const std::string& weights_path);
    // Adds every permutation of every tuple (deduplicated).
    void close_under_permutation();
};

struct CombCltQuantities {
    double mu_K = 0.0;
    double mu_Ksharp = 0.0;
    double sup_star = 0.0;  // sup_j mu(K*_j)
    double sup_ratio = 0.0;
    double bracket = 0.0;
    std::size_t ksharp_pairs = 0;
};

CombCltQuantities comb_clt_quantities(const IndexSetFamily& fam);
// C(q) is unknown: reported as 1 with a `constant_unknown` flag term.
BoundReport bound_comb_clt(const IndexSetFamily& fam, const Distribution& dist);

// ---- comparison curves ----

enum class CurveFamily { GammaRatio, BetaRatio };

struct CurveRow {
    double x = 0.0;
    double third_moment = 0.0;  // BetaRatio only
    double kernel = 0.0;        // BetaRatio only
    double ratio = 0.0;
    bool failed = false;
};

std::vector<CurveRow> comparison_curves(CurveFamily family, const std::vector<double>& grid);
double gamma_ratio(double s);

}  // namespace steinbench
