#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "steinbench/profile.hpp"

namespace steinbench {

constexpr int kMaxOrder = 8;
using CellIndex = std::uint32_t;
using IndexTuple = std::array<CellIndex, kMaxOrder>;

struct CoefficientEntry {
    IndexTuple idx{};
    double value = 0.0;
};

// Sparse coefficient tensor over cell tuples, entries sorted lexicographically.
class CoefficientTensor {
public:
    explicit CoefficientTensor(int order = 0);

    int order() const { return order_; }
    const std::vector<CoefficientEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    // Adds v at idx (accumulating). Call finalize() before reading.
    void add(const IndexTuple& idx, double v);
    void add(const std::vector<CellIndex>& idx, double v);
    void finalize();
    double at(const std::vector<CellIndex>& idx) const;
    CellIndex max_index() const;
    void scale(double c);

private:
    int order_;
    std::vector<CoefficientEntry> entries_;
    bool sorted_ = true;
};

struct ChaosTerm {
    CoefficientTensor coeffs;
    std::vector<CellProfile> profiles;  // one per axis
};

// f_n as a formal sum of separable terms.
class ChaosTensor {
public:
    ChaosTensor(int order, std::size_t cells);

    static ChaosTensor scalar(double c, std::size_t cells = 0);
    // Single term with the same profile on every axis.
    static ChaosTensor uniform_profile(CoefficientTensor coeffs, const CellProfile& p, std::size_t cells);
    // Order 1: sum_k w[k] p on cell k.
    static ChaosTensor linear(const std::vector<double>& w, const CellProfile& p);
    // Order 2: entries a[k][l] (k != l) with profile p on both axes; a row-major n x n.
    static ChaosTensor quadratic(const std::vector<double>& a, std::size_t n, const CellProfile& p);
    // Rows `k1,...,kn,value`; every axis gets profile p.
    static ChaosTensor from_csv(const std::string& path, const CellProfile& p);

    int order() const { return order_; }
    std::size_t cells() const { return cells_; }
    const std::vector<ChaosTerm>& terms() const { return terms_; }

    void add_term(CoefficientTensor coeffs, std::vector<CellProfile> profiles);
    void add(const ChaosTensor& other, double weight = 1.0);
    ChaosTensor scaled(double c) const;
    // Merges terms with identical profile sequences and drops empty ones.
    void compact();

    // Value of an order-0 tensor.
    double scalar_value() const;
    bool is_canonical() const;
    bool supported_on_delta() const;
    std::size_t nnz() const;

private:
    int order_;
    std::size_t cells_;
    std::vector<ChaosTerm> terms_;
};

// One uniform variate in [-1, 1] per cell.
struct ChaosSample {
    std::vector<double> u;
};

double evaluate_integral(const ChaosTensor& f, const ChaosSample& s);
// Same value, computed from the finite r-sum definition; exponential in the
// order, used as an oracle.
double evaluate_integral_by_definition(const ChaosTensor& f, const ChaosSample& s);

ChaosTensor contract(const ChaosTensor& f, const ChaosTensor& g, int k, int i, bool restrict = true);
// Averages over permutations of axes [first_axis, n).
ChaosTensor symmetrize(const ChaosTensor& f, int first_axis = 0);
ChaosTensor restrict_to_delta(const ChaosTensor& f);
// h[j] is the order-j component of I_n(f) I_m(g); size n + m + 1.
std::vector<ChaosTensor> multiply(const ChaosTensor& f, const ChaosTensor& g);
ChaosTensor g_operator(const ChaosTensor& f, int k);
double inner_product(const ChaosTensor& f, const ChaosTensor& g);
double l2_norm_sq(const ChaosTensor& f);
ChaosTensor apply_L_inverse(const ChaosTensor& f);

}  // namespace steinbench
