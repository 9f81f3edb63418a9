#include "steinbench/chaos.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <unordered_map>

#include "steinbench/csv.hpp"
#include "steinbench/error.hpp"

namespace steinbench {

namespace {

bool less_prefix(const IndexTuple& a, const IndexTuple& b, int k) {
    for (int j = 0; j < k; ++j)
        if (a[j] != b[j]) return a[j] < b[j];
    return false;
}

bool distinct(const IndexTuple& idx, int n) {
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (idx[a] == idx[b]) return false;
    return true;
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

std::string profile_signature(const std::vector<CellProfile>& ps) {
    std::string s;
    for (const auto& p : ps) s += p.key() + "|";
    return s;
}

void check_order(int n) {
    if (n < 0 || n > kMaxOrder) throw CapacityError("chaos order exceeds " + std::to_string(kMaxOrder));
}

}  // namespace

// ---- CoefficientTensor ----

CoefficientTensor::CoefficientTensor(int order) : order_(order) {
    check_order(order);
}

void CoefficientTensor::add(const IndexTuple& idx, double v) {
    if (v == 0.0) return;
    CoefficientEntry e;
    for (int j = 0; j < order_; ++j) e.idx[j] = idx[j];
    e.value = v;
    entries_.push_back(e);
    sorted_ = false;
}

void CoefficientTensor::add(const std::vector<CellIndex>& idx, double v) {
    if (static_cast<int>(idx.size()) != order_) throw DomainError("coefficient index has wrong arity");
    IndexTuple t{};
    std::copy(idx.begin(), idx.end(), t.begin());
    add(t, v);
}

void CoefficientTensor::finalize() {
    if (sorted_) return;
    std::sort(entries_.begin(), entries_.end(),
              [](const CoefficientEntry& a, const CoefficientEntry& b) { return a.idx < b.idx; });
    std::vector<CoefficientEntry> merged;
    for (const auto& e : entries_) {
        if (!merged.empty() && merged.back().idx == e.idx) merged.back().value += e.value;
        else merged.push_back(e);
    }
    std::erase_if(merged, [](const CoefficientEntry& e) { return e.value == 0.0; });
    entries_ = std::move(merged);
    sorted_ = true;
}

double CoefficientTensor::at(const std::vector<CellIndex>& idx) const {
    if (!sorted_) throw PreconditionError("coefficient tensor not finalized");
    IndexTuple t{};
    std::copy(idx.begin(), idx.end(), t.begin());
    auto it = std::lower_bound(entries_.begin(), entries_.end(), t,
                               [](const CoefficientEntry& e, const IndexTuple& x) { return e.idx < x; });
    return (it != entries_.end() && it->idx == t) ? it->value : 0.0;
}

CellIndex CoefficientTensor::max_index() const {
    CellIndex m = 0;
    for (const auto& e : entries_)
        for (int j = 0; j < order_; ++j) m = std::max(m, e.idx[j]);
    return m;
}

void CoefficientTensor::scale(double c) {
    for (auto& e : entries_) e.value *= c;
    if (c == 0.0) entries_.clear();
}

// ---- ChaosTensor ----

ChaosTensor::ChaosTensor(int order, std::size_t cells) : order_(order), cells_(cells) { check_order(order); }

ChaosTensor ChaosTensor::scalar(double c, std::size_t cells) {
    ChaosTensor t(0, cells);
    CoefficientTensor ct(0);
    ct.add(IndexTuple{}, c);
    t.add_term(std::move(ct), {});
    return t;
}

ChaosTensor ChaosTensor::uniform_profile(CoefficientTensor coeffs, const CellProfile& p, std::size_t cells) {
    const int n = coeffs.order();
    ChaosTensor t(n, cells);
    t.add_term(std::move(coeffs), std::vector<CellProfile>(n, p));
    return t;
}

ChaosTensor ChaosTensor::linear(const std::vector<double>& w, const CellProfile& p) {
    CoefficientTensor c(1);
    for (std::size_t k = 0; k < w.size(); ++k) c.add(std::vector<CellIndex>{static_cast<CellIndex>(k)}, w[k]);
    return uniform_profile(std::move(c), p, w.size());
}

ChaosTensor ChaosTensor::quadratic(const std::vector<double>& a, std::size_t n, const CellProfile& p) {
    if (a.size() != n * n) throw DomainError("quadratic: matrix size mismatch");
    CoefficientTensor c(2);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
            if (k != l) c.add(std::vector<CellIndex>{static_cast<CellIndex>(k), static_cast<CellIndex>(l)}, a[k * n + l]);
    return uniform_profile(std::move(c), p, n);
}

ChaosTensor ChaosTensor::from_csv(const std::string& path, const CellProfile& p) {
    const CsvTable t = read_csv(path);
    if (t.rows.empty()) throw DataError("tensor csv '" + path + "' has no rows");
    const std::size_t width = t.rows.front().size();
    if (width < 2) throw DataError("tensor csv rows need k1,...,kn,value");
    const int n = static_cast<int>(width) - 1;
    CoefficientTensor c(n);
    for (const auto& row : t.rows) {
        if (row.size() != width) throw DataError("tensor csv: ragged row");
        std::vector<CellIndex> idx;
        for (int j = 0; j < n; ++j) {
            const long long v = parse_int(row[j]);
            if (v < 0) throw DataError("tensor csv: negative cell index");
            idx.push_back(static_cast<CellIndex>(v));
        }
        c.add(idx, parse_double(row[n]));
    }
    c.finalize();
    const std::size_t cells = c.size() ? c.max_index() + 1 : 0;
    return uniform_profile(std::move(c), p, cells);
}

void ChaosTensor::add_term(CoefficientTensor coeffs, std::vector<CellProfile> profiles) {
    if (coeffs.order() != order_ || static_cast<int>(profiles.size()) != order_)
        throw DomainError("term order does not match tensor order");
    coeffs.finalize();
    if (coeffs.size() && order_ > 0) cells_ = std::max<std::size_t>(cells_, coeffs.max_index() + 1);
    terms_.push_back({std::move(coeffs), std::move(profiles)});
}

void ChaosTensor::add(const ChaosTensor& other, double weight) {
    if (other.order_ != order_) throw DomainError("cannot add tensors of different order");
    cells_ = std::max(cells_, other.cells_);
    for (const auto& t : other.terms_) {
        ChaosTerm c = t;
        c.coeffs.scale(weight);
        terms_.push_back(std::move(c));
    }
    compact();
}

ChaosTensor ChaosTensor::scaled(double c) const {
    ChaosTensor r = *this;
    for (auto& t : r.terms_) t.coeffs.scale(c);
    r.compact();
    return r;
}

void ChaosTensor::compact() {
    std::map<std::string, std::size_t> slot;
    std::vector<ChaosTerm> out;
    for (auto& t : terms_) {
        const std::string sig = profile_signature(t.profiles);
        auto it = slot.find(sig);
        if (it == slot.end()) {
            slot.emplace(sig, out.size());
            out.push_back(std::move(t));
        } else {
            auto& dst = out[it->second].coeffs;
            for (const auto& e : t.coeffs.entries()) dst.add(e.idx, e.value);
            dst.finalize();
        }
    }
    std::erase_if(out, [](const ChaosTerm& t) { return t.coeffs.size() == 0; });
    terms_ = std::move(out);
}

double ChaosTensor::scalar_value() const {
    if (order_ != 0) throw DomainError("scalar_value: tensor order is not 0");
    double s = 0.0;
    for (const auto& t : terms_)
        for (const auto& e : t.coeffs.entries()) s += e.value;
    return s;
}

bool ChaosTensor::is_canonical() const {
    for (const auto& t : terms_)
        for (const auto& p : t.profiles)
            if (!p.canonical()) return false;
    return true;
}

bool ChaosTensor::supported_on_delta() const {
    for (const auto& t : terms_)
        for (const auto& e : t.coeffs.entries())
            if (!distinct(e.idx, order_)) return false;
    return true;
}

std::size_t ChaosTensor::nnz() const {
    std::size_t s = 0;
    for (const auto& t : terms_) s += t.coeffs.size();
    return s;
}

// ---- evaluation ----

double evaluate_integral(const ChaosTensor& f, const ChaosSample& s) {
    if (f.order() == 0) return f.scalar_value();
    if (s.u.size() < f.cells()) throw DomainError("sample shorter than tensor cell count");
    const int n = f.order();
    std::unordered_map<std::string, std::vector<double>> centred;
    auto values_for = [&](const CellProfile& p) -> const std::vector<double>& {
        auto it = centred.find(p.key());
        if (it != centred.end()) return it->second;
        const double avg = p.mean();
        std::vector<double> v(f.cells());
        for (std::size_t c = 0; c < v.size(); ++c) v[c] = p.value(1.0 + s.u[c]) - avg;
        return centred.emplace(p.key(), std::move(v)).first->second;
    };
    double total = 0.0;
    std::vector<const std::vector<double>*> axis(n);
    for (const auto& t : f.terms()) {
        for (int j = 0; j < n; ++j) axis[j] = &values_for(t.profiles[j]);
        for (const auto& e : t.coeffs.entries()) {
            if (!distinct(e.idx, n)) continue;
            double prod = e.value;
            for (int j = 0; j < n; ++j) prod *= (*axis[j])[e.idx[j]];
            total += prod;
        }
    }
    return total;
}

double evaluate_integral_by_definition(const ChaosTensor& f0, const ChaosSample& s) {
    if (f0.order() == 0) return f0.scalar_value();
    const ChaosTensor f = symmetrize(restrict_to_delta(f0));
    const int n = f.order();
    const std::size_t cells = f.cells();
    if (s.u.size() < cells) throw DomainError("sample shorter than tensor cell count");
    double total = 0.0;
    for (int r = 0; r <= n; ++r) {
        const double w = std::pow(-0.5, n - r) * binom(n, r);
        // all n-tuples of cells; the first r must be distinct (the rest are integrated over)
        std::vector<CellIndex> idx(n, 0);
        double sum_r = 0.0;
        while (true) {
            bool ok = true;
            for (int a = 0; a < r && ok; ++a)
                for (int b = a + 1; b < r && ok; ++b) ok = idx[a] != idx[b];
            if (ok) {
                for (const auto& t : f.terms()) {
                    const double c = t.coeffs.at(idx);
                    if (c == 0.0) continue;
                    double prod = c;
                    for (int j = 0; j < r; ++j) prod *= t.profiles[j].value(1.0 + s.u[idx[j]]);
                    for (int j = r; j < n; ++j) prod *= t.profiles[j].integral();
                    sum_r += prod;
                }
            }
            int pos = n - 1;
            while (pos >= 0 && ++idx[pos] == cells) idx[pos--] = 0;
            if (pos < 0) break;
        }
        total += w * sum_r;
    }
    return total;
}

// ---- algebra ----

ChaosTensor contract(const ChaosTensor& f, const ChaosTensor& g, int k, int i, bool restrict) {
    const int n = f.order(), m = g.order();
    if (!(0 <= i && i <= k && k <= std::min(n, m))) throw DomainError("contract: need 0 <= i <= k <= min(n, m)");
    const int out_order = n + m - k - i;
    check_order(out_order);
    ChaosTensor out(out_order, std::max(f.cells(), g.cells()));
    for (const auto& tf : f.terms()) {
        for (const auto& tg : g.terms()) {
            double scalar = 1.0;
            for (int j = 0; j < i; ++j) scalar *= inner(tf.profiles[j], tg.profiles[j]);
            if (scalar == 0.0) continue;
            std::vector<CellProfile> prof;
            for (int j = i; j < k; ++j) prof.push_back(tf.profiles[j] * tg.profiles[j]);
            for (int j = k; j < n; ++j) prof.push_back(tf.profiles[j]);
            for (int j = k; j < m; ++j) prof.push_back(tg.profiles[j]);

            CoefficientTensor c(out_order);
            const auto& ge = tg.coeffs.entries();
            for (const auto& ef : tf.coeffs.entries()) {
                auto [lo, hi] = std::equal_range(
                    ge.begin(), ge.end(), ef,
                    [k](const CoefficientEntry& a, const CoefficientEntry& b) { return less_prefix(a.idx, b.idx, k); });
                for (auto it = lo; it != hi; ++it) {
                    IndexTuple idx{};
                    int p = 0;
                    for (int j = i; j < n; ++j) idx[p++] = ef.idx[j];
                    for (int j = k; j < m; ++j) idx[p++] = it->idx[j];
                    if (restrict && !distinct(idx, out_order)) continue;
                    c.add(idx, scalar * ef.value * it->value);
                }
            }
            c.finalize();
            if (c.size()) out.add_term(std::move(c), std::move(prof));
        }
    }
    out.compact();
    return out;
}

ChaosTensor restrict_to_delta(const ChaosTensor& f) {
    ChaosTensor out(f.order(), f.cells());
    for (const auto& t : f.terms()) {
        CoefficientTensor c(f.order());
        for (const auto& e : t.coeffs.entries())
            if (distinct(e.idx, f.order())) c.add(e.idx, e.value);
        c.finalize();
        if (c.size()) out.add_term(std::move(c), t.profiles);
    }
    return out;
}

namespace {

bool term_is_symmetric(const ChaosTerm& t, int n, int first) {
    for (int j = first + 1; j < n; ++j)
        if (t.profiles[j].key() != t.profiles[first].key()) return false;
    std::vector<int> perm(n - first);
    for (const auto& e : t.coeffs.entries()) {
        std::iota(perm.begin(), perm.end(), first);
        while (std::next_permutation(perm.begin(), perm.end())) {
            std::vector<CellIndex> idx(e.idx.begin(), e.idx.begin() + n);
            for (int a = first; a < n; ++a) idx[a] = e.idx[perm[a - first]];
            if (t.coeffs.at(idx) != e.value) return false;
        }
    }
    return true;
}

}  // namespace

ChaosTensor symmetrize(const ChaosTensor& f, int first_axis) {
    const int n = f.order();
    if (n > 6) throw CapacityError("symmetrize: order above 6");
    if (first_axis < 0 || first_axis > n) throw DomainError("symmetrize: bad first axis");
    const int free = n - first_axis;
    if (free <= 1) return f;
    ChaosTensor out(n, f.cells());
    const double inv = 1.0 / factorial(free);
    for (const auto& t : f.terms()) {
        if (term_is_symmetric(t, n, first_axis)) {
            out.add_term(t.coeffs, t.profiles);
            continue;
        }
        std::vector<int> perm(free);
        std::iota(perm.begin(), perm.end(), first_axis);
        do {
            std::vector<CellProfile> prof(t.profiles);
            for (int a = first_axis; a < n; ++a) prof[a] = t.profiles[perm[a - first_axis]];
            CoefficientTensor c(n);
            for (const auto& e : t.coeffs.entries()) {
                IndexTuple idx = e.idx;
                for (int a = first_axis; a < n; ++a) idx[a] = e.idx[perm[a - first_axis]];
                c.add(idx, e.value * inv);
            }
            out.add_term(std::move(c), std::move(prof));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    out.compact();
    return out;
}

std::vector<ChaosTensor> multiply(const ChaosTensor& f, const ChaosTensor& g) {
    const int n = f.order(), m = g.order();
    if (n > 3 || m > 3) throw CapacityError("multiply: orders above 3");
    if (!f.is_canonical() || !g.is_canonical()) throw PreconditionError("multiply: non-canonical input");
    const std::size_t cells = std::max(f.cells(), g.cells());
    const ChaosTensor fs = symmetrize(f), gs = symmetrize(g);
    std::vector<ChaosTensor> h;
    for (int j = 0; j <= n + m; ++j) h.emplace_back(j, cells);
    for (int k = 0; k <= std::min(n, m); ++k) {
        for (int i = 0; i <= k; ++i) {
            const double w = factorial(k) * binom(m, k) * binom(n, k) * binom(k, i);
            h[n + m - k - i].add(symmetrize(contract(fs, gs, k, i)), w);
        }
    }
    return h;
}

ChaosTensor g_operator(const ChaosTensor& f, int k) {
    const int n = f.order();
    if (k < 0 || k > 2 * n) throw DomainError("g_operator: k outside [0, 2n]");
    const ChaosTensor fs = symmetrize(f);
    ChaosTensor out(k, f.cells());
    for (int r = 0; r <= n; ++r)
        for (int l = 0; l <= r; ++l) {
            if (2 * n - r - l != k) continue;
            const double w = factorial(r) * binom(n, r) * binom(n, r) * binom(r, l);
            out.add(symmetrize(contract(fs, fs, r, l)), w);
        }
    return restrict_to_delta(out);
}

double inner_product(const ChaosTensor& f, const ChaosTensor& g) {
    if (f.order() != g.order()) throw DomainError("inner_product: orders differ");
    const int n = f.order();
    double total = 0.0;
    for (const auto& tf : f.terms())
        for (const auto& tg : g.terms()) {
            double prof = 1.0;
            for (int j = 0; j < n; ++j) prof *= inner(tf.profiles[j], tg.profiles[j]);
            if (prof == 0.0) continue;
            const auto& a = tf.coeffs.entries();
            const auto& b = tg.coeffs.entries();
            double dotv = 0.0;
            std::size_t x = 0, y = 0;
            while (x < a.size() && y < b.size()) {
                if (a[x].idx < b[y].idx) ++x;
                else if (b[y].idx < a[x].idx) ++y;
                else dotv += a[x++].value * b[y++].value;
            }
            total += prof * dotv;
        }
    return total;
}

double l2_norm_sq(const ChaosTensor& f) { return inner_product(f, f); }

ChaosTensor apply_L_inverse(const ChaosTensor& f) {
    if (f.order() == 0) throw DomainError("apply_L_inverse: order 0");
    return f.scaled(-1.0 / f.order());
}

}  // namespace steinbench
