#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "steinbench/bounds.hpp"
#include "steinbench/csv.hpp"
#include "steinbench/error.hpp"

namespace steinbench {

namespace {

using Tuple = std::vector<std::size_t>;

double weight_sq(const IndexSetFamily& fam, std::size_t i) {
    if (fam.b.empty()) return 1.0;
    if (i >= fam.b.size()) throw InvalidFamily("index " + std::to_string(i) + " has no weight");
    return fam.b[i] * fam.b[i];
}

double mass(const IndexSetFamily& fam, const Tuple& t) {
    double m = 1.0;
    for (std::size_t i : t) m *= weight_sq(fam, i);
    return m;
}

Tuple sorted(Tuple t) {
    std::sort(t.begin(), t.end());
    return t;
}

}  // namespace

void IndexSetFamily::close_under_permutation() {
    std::set<Tuple> all;
    for (const auto& t : tuples) {
        Tuple p = sorted(t);
        do all.insert(p);
        while (std::next_permutation(p.begin(), p.end()));
    }
    tuples.assign(all.begin(), all.end());
}

IndexSetFamily IndexSetFamily::from_csv(const std::string& tuples_path, const std::string& weights_path) {
    IndexSetFamily fam;
    const CsvTable t = read_csv(tuples_path);
    if (t.rows.empty()) throw DataError("index-set csv has no rows");
    fam.q = static_cast<int>(t.rows.front().size());
    for (const auto& row : t.rows) {
        if (static_cast<int>(row.size()) != fam.q) throw DataError("index-set csv: ragged row");
        Tuple tp;
        for (const auto& f : row) {
            const long long v = parse_int(f);
            if (v < 0) throw DataError("index-set csv: negative index");
            tp.push_back(static_cast<std::size_t>(v));
        }
        fam.tuples.push_back(std::move(tp));
    }
    if (!weights_path.empty()) {
        const CsvTable w = read_csv(weights_path);
        for (const auto& row : w.rows) {
            if (row.size() != 2) throw DataError("weights csv rows need k,b");
            const long long k = parse_int(row[0]);
            if (k < 0) throw DataError("weights csv: negative index");
            if (static_cast<std::size_t>(k) >= fam.b.size()) fam.b.resize(k + 1, 0.0);
            fam.b[k] = parse_double(row[1]);
        }
    }
    return fam;
}

CombCltQuantities comb_clt_quantities(const IndexSetFamily& fam) {
    const int q = fam.q;
    if (q < 1) throw InvalidFamily("q must be >= 1");
    std::set<Tuple> uniq;
    for (const auto& t : fam.tuples) {
        if (static_cast<int>(t.size()) != q) throw InvalidFamily("tuple of wrong length");
        if (std::set<std::size_t>(t.begin(), t.end()).size() != t.size())
            throw InvalidFamily("tuple with repeated entries");
        uniq.insert(t);
    }
    std::set<Tuple> sets;
    for (const auto& t : uniq) {
        Tuple p = sorted(t);
        do
            if (!uniq.count(p)) throw InvalidFamily("family is not closed under permutation");
        while (std::next_permutation(p.begin(), p.end()));
        sets.insert(sorted(t));
    }
    const std::vector<Tuple> k(uniq.begin(), uniq.end());

    CombCltQuantities r;
    std::map<std::size_t, double> star;
    std::vector<double> masses(k.size());
    for (std::size_t a = 0; a < k.size(); ++a) {
        masses[a] = mass(fam, k[a]);
        r.mu_K += masses[a];
        for (std::size_t j : k[a]) star[j] += masses[a];
    }
    for (const auto& [j, m] : star) r.sup_star = std::max(r.sup_star, m);

    std::vector<Tuple> ks(k.size());
    for (std::size_t a = 0; a < k.size(); ++a) ks[a] = sorted(k[a]);
    std::map<std::pair<Tuple, Tuple>, bool> memo;
    for (std::size_t a = 0; a < k.size(); ++a)
        for (std::size_t b = 0; b < k.size(); ++b) {
            const Tuple& si = ks[a];
            const Tuple& sj = ks[b];
            Tuple uni;
            std::set_union(si.begin(), si.end(), sj.begin(), sj.end(), std::back_inserter(uni));
            if (static_cast<int>(uni.size()) != 2 * q) continue;  // not disjoint
            auto key = std::make_pair(si, sj);
            auto it = memo.find(key);
            bool member;
            if (it != memo.end()) {
                member = it->second;
            } else {
                member = false;
                // q-subsets of the union that split it into two members of K
                const unsigned full = (1u << (2 * q)) - 1;
                for (unsigned mask = 0; mask <= full && !member; ++mask) {
                    if (__builtin_popcount(mask) != q) continue;
                    Tuple s1, s2;
                    for (int x = 0; x < 2 * q; ++x) ((mask >> x) & 1u ? s1 : s2).push_back(uni[x]);
                    if (s1 == si || s1 == sj) continue;
                    member = sets.count(s1) && sets.count(s2);
                }
                memo.emplace(key, member);
            }
            if (member) {
                r.mu_Ksharp += masses[a] * masses[b];
                ++r.ksharp_pairs;
            }
        }
    if (r.mu_K > 0.0) {
        r.sup_ratio = r.sup_star / r.mu_K;
        r.bracket = std::sqrt(r.mu_Ksharp) / r.mu_K + std::pow(r.sup_ratio, 0.25);
    }
    return r;
}

BoundReport bound_comb_clt(const IndexSetFamily& fam, const Distribution& dist) {
    const CombCltQuantities c = comb_clt_quantities(fam);
    if (!(c.mu_K > 0.0)) throw DomainError("comb-clt: family has zero mass");
    const double mu4 = dist.normalized().raw_moment(4);
    const double factor = std::pow(mu4, fam.q);
    BoundReport r;
    r.formula = FormulaId::CombClt;
    r.metric = Metric::W1;
    r.value = factor * c.bracket;
    r.source = formula_info(FormulaId::CombClt).source;
    r.terms = {{"mu_K", c.mu_K},
               {"mu_Ksharp", c.mu_Ksharp},
               {"sup_star", c.sup_star},
               {"bracket", c.bracket},
               {"fourth_moment_power", factor},
               {"constant", 1.0},
               {"constant_unknown", 1.0}};
    return r;
}

}  // namespace steinbench
