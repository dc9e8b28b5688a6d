#pragma once

// Multiplicity bookkeeping for the finite component groups S_n (n <= 5):
// conjugacy classes as cycle types, centralizer shapes prod_k Z_k wr S_{m_k},
// irreducible character degrees via the wreath-product degree formula, the
// pair set {(x, sigma)}, and the block-diagonal multiplicity table
// entry((x,sigma), y) = sigma(1) * [x = y].

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace rootwork {

/// A conjugacy class of S_n, i.e. a partition of n with parts descending.
struct CycleType {
    std::vector<int> parts;

    int n() const { return std::accumulate(parts.begin(), parts.end(), 0); }

    std::string to_string() const {
        std::string s;
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) s += '+';
            s += std::to_string(parts[i]);
        }
        return s;
    }

    friend auto operator<=>(const CycleType&, const CycleType&) = default;

    static CycleType of(std::vector<int> p) {
        std::sort(p.begin(), p.end(), std::greater<int>());
        for (int x : p)
            if (x < 1) throw std::invalid_argument("cycle type: parts must be positive");
        return CycleType{std::move(p)};
    }
};

namespace detail {

inline void partitions_rec(int n, int max_part, std::vector<int>& cur,
                           std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(n - p, p, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<int>> partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

inline long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

/// Number of standard Young tableaux of shape lambda (hook length formula).
inline long long syt_count(const std::vector<int>& lambda) {
    const int n = std::accumulate(lambda.begin(), lambda.end(), 0);
    if (n == 0) return 1;
    long long hooks = 1;
    const int rows = static_cast<int>(lambda.size());
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < lambda[r]; ++c) {
            int arm = lambda[r] - c - 1;
            int leg = 0;
            for (int r2 = r + 1; r2 < rows; ++r2)
                if (lambda[r2] > c) ++leg;
            hooks *= arm + leg + 1;
        }
    long long f = factorial(n);
    if (f % hooks != 0) throw std::logic_error("syt_count: hook product does not divide n!");
    return f / hooks;
}

}  // namespace detail

/// Centralizer of a cycle type in S_n: a direct product of Z_k wr S_{m}
/// over the distinct part sizes k with multiplicity m.
struct CentralizerShape {
    std::vector<std::pair<int, int>> factors;  // (part size k, multiplicity m)

    long long order() const {
        long long o = 1;
        for (auto [k, m] : factors) {
            for (int i = 0; i < m; ++i) o *= k;
            o *= detail::factorial(m);
        }
        return o;
    }
};

/// Conjugacy classes of S_n in canonical order: partitions sorted
/// lexicographically on the descending part tuples (1^n first, (n) last).
inline std::vector<CycleType> classes(int n) {
    if (n < 1 || n > 5)
        throw std::invalid_argument("classes: n must lie in 1..5");
    std::vector<CycleType> out;
    for (auto& p : detail::partitions(n)) out.push_back(CycleType{std::move(p)});
    std::sort(out.begin(), out.end());
    return out;
}

inline CentralizerShape centralizer(const CycleType& x) {
    std::map<int, int> mult;
    for (int p : x.parts) ++mult[p];
    CentralizerShape c;
    for (auto [k, m] : mult) c.factors.push_back({k, m});
    return c;
}

/// Irreducible character degrees of the shape, as a sorted multiset.
/// For one factor Z_k wr S_m the characters are indexed by k-tuples of
/// partitions of total size m, with degree multinomial(m; |lambda^i|) *
/// prod_i f^{lambda^i}; factors multiply.
inline std::vector<long long> irr_degrees(const CentralizerShape& c) {
    std::vector<long long> degrees{1};
    for (auto [k, m] : c.factors) {
        // enumerate k-tuples of partitions with total size m
        std::vector<long long> factor_degrees;
        // sizes composition: iterate over all ways to write m as ordered sum of k nonneg ints
        std::vector<int> sizes(k, 0);
        auto rec = [&](auto&& self, int pos, int remaining) -> void {
            if (pos == k - 1) {
                sizes[pos] = remaining;
                // multinomial coefficient m! / prod sizes!
                long long multinomial = detail::factorial(m);
                for (int s : sizes) multinomial /= detail::factorial(s);
                // product over choices of partition per slot
                std::vector<long long> prods{multinomial};
                for (int s : sizes) {
                    std::vector<long long> next;
                    for (auto& lam : detail::partitions(s))
                        for (long long d : prods) next.push_back(d * detail::syt_count(lam));
                    prods = std::move(next);
                }
                factor_degrees.insert(factor_degrees.end(), prods.begin(), prods.end());
                return;
            }
            for (int s = 0; s <= remaining; ++s) {
                sizes[pos] = s;
                self(self, pos + 1, remaining - s);
            }
        };
        rec(rec, 0, m);
        std::vector<long long> combined;
        for (long long a : degrees)
            for (long long b : factor_degrees) combined.push_back(a * b);
        degrees = std::move(combined);
    }
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

/// All pairs (x, sigma) with x a class of S_n and sigma an irreducible
/// character of its centralizer, identified by degree plus an index.
struct PairSet {
    struct Pair {
        CycleType x;
        long long degree = 0;
        int tag = 0;  // position of sigma within the sorted degree multiset of C(x)
    };
    std::vector<Pair> pairs;
};

inline PairSet pair_set(int n) {
    if (n < 3 || n > 5)
        throw std::invalid_argument("pair_set: n must lie in 3..5");
    PairSet ps;
    for (const CycleType& x : classes(n)) {
        const auto degs = irr_degrees(centralizer(x));
        for (size_t i = 0; i < degs.size(); ++i)
            ps.pairs.push_back({x, degs[i], static_cast<int>(i)});
    }
    return ps;
}

/// entry((x,sigma), y) = sigma(1) if x = y, else 0.
struct MultiplicityTable {
    std::vector<PairSet::Pair> rows;
    std::vector<CycleType> cols;
    std::vector<std::vector<long long>> entries;
};

inline MultiplicityTable kawanaka_table(int n) {
    if (n < 3 || n > 5)
        throw std::invalid_argument("kawanaka_table: n must lie in 3..5");
    MultiplicityTable t;
    t.rows = pair_set(n).pairs;
    t.cols = classes(n);
    t.entries.assign(t.rows.size(), std::vector<long long>(t.cols.size(), 0));
    for (size_t r = 0; r < t.rows.size(); ++r)
        for (size_t c = 0; c < t.cols.size(); ++c)
            if (t.rows[r].x == t.cols[c]) t.entries[r][c] = t.rows[r].degree;
    return t;
}

/// The pairs whose character is linear; only these can contribute
/// multiplicity one.
inline std::vector<PairSet::Pair> degree_one_pairs(int n) {
    std::vector<PairSet::Pair> out;
    for (const auto& p : pair_set(n).pairs)
        if (p.degree == 1) out.push_back(p);
    return out;
}

/// Number of rational orbits within the class: equals the number of
/// (F-)conjugacy classes of the component group, which for split Frobenius
/// is its ordinary class count, supplied as data.
inline int orbit_count(int component_group_classes) {
    if (component_group_classes < 1)
        throw std::invalid_argument("orbit_count: class count must be positive");
    return component_group_classes;
}

}  // namespace rootwork
