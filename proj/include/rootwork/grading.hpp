#pragma once

// Weighted Dynkin diagrams and the gradings they induce on a root system:
// the additive extension d(alpha), the level decomposition of the positive
// roots, the even index exponent #{alpha > 0 : d(alpha) = 1}, and the
// closure of a weight-2 support set under addition of weight-0 roots.

#include "rootwork/exact_linalg.hpp"
#include "rootwork/root_system.hpp"

#include <map>
#include <set>
#include <vector>

namespace rootwork {

/// Weights in {0,1,2} on the simple roots, extended additively to all roots.
struct WeightedDynkinDiagram {
    const RootSystem* rs = nullptr;
    std::vector<int> weights;

    static WeightedDynkinDiagram make(const RootSystem& system, std::vector<int> w) {
        if (static_cast<int>(w.size()) != system.rank())
            throw std::invalid_argument("weighted diagram: weight vector length != rank");
        for (int x : w)
            if (x < 0 || x > 2)
                throw std::invalid_argument("weighted diagram: weights must lie in {0,1,2}");
        return WeightedDynkinDiagram{&system, std::move(w)};
    }

    /// d(r) = sum of coeffs[i] * weights[i]; additive on root sums.
    int extend(const Root& r) const {
        if (r.rank() != rs->rank())
            throw std::invalid_argument("extend: rank mismatch");
        int s = 0;
        for (int i = 0; i < r.rank(); ++i) s += r[i] * weights[i];
        return s;
    }
};

/// Eagerly materialized level decomposition of a diagram.
struct Grading {
    std::vector<Root> levi_roots;              // all roots (both signs) with d = 0
    std::map<int, std::vector<Root>> level_sets;  // i >= 1 -> positive roots with d = i

    static Grading of(const WeightedDynkinDiagram& wdd) {
        Grading g;
        for (const Root& r : wdd.rs->positive_roots()) {
            const int d = wdd.extend(r);
            if (d == 0) {
                g.levi_roots.push_back(r);
                g.levi_roots.push_back(-r);
            } else {
                g.level_sets[d].push_back(r);
            }
        }
        std::sort(g.levi_roots.begin(), g.levi_roots.end(), height_lex_less);
        return g;
    }

    std::vector<Root> level(int i) const {
        auto it = level_sets.find(i);
        return it == level_sets.end() ? std::vector<Root>{} : it->second;
    }

    /// Positive roots with d = 0 (the positive part of the Levi).
    std::vector<Root> levi_positive() const {
        std::vector<Root> pos;
        for (const Root& r : levi_roots)
            if (r.is_positive()) pos.push_back(r);
        return pos;
    }
};

/// k with [U_{d,1} : U_{d,2}] = q^k, i.e. the number of positive roots at
/// level 1. Genuine weighted Dynkin diagrams always give an even k.
inline int index_exponent(const WeightedDynkinDiagram& wdd) {
    int k = 0;
    for (const Root& r : wdd.rs->positive_roots())
        if (wdd.extend(r) == 1) ++k;
    if (k % 2 != 0)
        throw std::logic_error("index_exponent: odd level-1 count (not a weighted Dynkin diagram?)");
    return k;
}

/// A set of weight-2 roots marking which root subgroups carry a nonzero
/// coefficient in a unipotent representative.
struct SupportSpec {
    WeightedDynkinDiagram wdd;
    std::vector<Root> support;

    static SupportSpec make(WeightedDynkinDiagram d, std::vector<Root> roots) {
        std::set<std::vector<int>> seen;
        for (const Root& r : roots) {
            if (!d.rs->is_root(r))
                throw std::invalid_argument("support: not a root of the ambient system");
            if (d.extend(r) != 2)
                throw std::invalid_argument("support: root does not have weight 2");
            seen.insert(r.coeffs);
        }
        std::vector<Root> uniq;
        for (const auto& c : seen) uniq.emplace_back(c);
        std::sort(uniq.begin(), uniq.end(), height_lex_less);
        return SupportSpec{std::move(d), std::move(uniq)};
    }
};

/// Fixed point of support |-> support + {weight-0 roots}, intersected with
/// the root set. Stays inside level 2 by additivity.
inline std::vector<Root> saturate_support(const SupportSpec& spec) {
    const Grading g = Grading::of(spec.wdd);
    std::set<std::vector<int>> closed;
    std::vector<Root> work = spec.support;
    for (const Root& r : work) closed.insert(r.coeffs);
    while (!work.empty()) {
        Root alpha = work.back();
        work.pop_back();
        for (const Root& beta : g.levi_roots) {
            Root sum = alpha + beta;
            if (!spec.wdd.rs->is_root(sum)) continue;
            if (closed.insert(sum.coeffs).second) work.emplace_back(sum.coeffs);
        }
    }
    std::vector<Root> out;
    for (const auto& c : closed) out.emplace_back(c);
    std::sort(out.begin(), out.end(), height_lex_less);
    return out;
}

/// A weighted diagram whose base is an arbitrary simple system inside a
/// parent root system (e.g. a subsystem's simple roots, one of which may be
/// a negative root of the parent). Extension works through exact coordinates
/// over the base.
struct SubsystemDiagram {
    const RootSystem* rs = nullptr;
    std::vector<Root> base;
    std::vector<int> weights;

    static SubsystemDiagram make(const RootSystem& system, std::vector<Root> base_roots,
                                 std::vector<int> w) {
        if (base_roots.size() != w.size())
            throw std::invalid_argument("subsystem diagram: base/weight length mismatch");
        for (const Root& r : base_roots)
            if (!system.is_root(r))
                throw std::invalid_argument("subsystem diagram: base element is not a root");
        for (int x : w)
            if (x < 0 || x > 2)
                throw std::invalid_argument("subsystem diagram: weights must lie in {0,1,2}");
        return SubsystemDiagram{&system, std::move(base_roots), std::move(w)};
    }

    /// Coordinates of r over the base, if r lies in its rational span.
    std::optional<std::vector<BigRat>> coordinates(const Root& r) const {
        const int l = rs->rank();
        const int k = static_cast<int>(base.size());
        std::vector<std::vector<BigRat>> mat(l, std::vector<BigRat>(k));
        for (int row = 0; row < l; ++row)
            for (int col = 0; col < k; ++col) mat[row][col] = base[col][row];
        std::vector<BigRat> rhs(l);
        for (int row = 0; row < l; ++row) rhs[row] = r[row];
        return solve_rational(mat, rhs);
    }

    /// Rational d-value of any root in the span of the base.
    BigRat extend_rational(const Root& r) const {
        auto x = coordinates(r);
        if (!x)
            throw std::invalid_argument("subsystem diagram: root outside the span of the base");
        BigRat s = 0;
        for (size_t i = 0; i < x->size(); ++i) s += (*x)[i] * weights[i];
        return s;
    }

    /// Integer d-value for roots with integral base coordinates (in
    /// particular all roots of the subsystem generated by the base).
    std::optional<int> extend(const Root& r) const {
        auto x = coordinates(r);
        if (!x) return std::nullopt;
        BigRat s = 0;
        for (size_t i = 0; i < x->size(); ++i) {
            if (boost::multiprecision::denominator((*x)[i]) != 1) return std::nullopt;
            s += (*x)[i] * weights[i];
        }
        return static_cast<int>(boost::multiprecision::numerator(s));
    }
};

}  // namespace rootwork
