#pragma once

// Subsystem analysis: extracting a simple system from a closed subsystem,
// testing a candidate simple system, and identifying the Dynkin type of each
// connected component by catalogue matching.

#include "rootwork/exact_linalg.hpp"
#include "rootwork/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace rootwork {

/// True iff every member of `sub` is a sign-uniform integer combination of
/// `candidate` and the candidate's mutual Cartan integers form a generalized
/// Cartan matrix. Candidates must lie inside the subsystem.
inline bool is_simple_system(const Subsystem& sub, const std::vector<Root>& candidate) {
    const RootSystem& rs = *sub.parent;
    for (const Root& c : candidate)
        if (!sub.contains(c))
            throw std::invalid_argument("is_simple_system: candidate root outside the subsystem");
    if (candidate.empty()) return sub.members.empty();

    const int l = rs.rank();
    const int k = static_cast<int>(candidate.size());
    // mutual Cartan integers: diagonal 2, off-diagonal <= 0
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const int a = rs.pairing_with_coroot(candidate[i], candidate[j]);
            if (i == j ? a != 2 : a > 0) return false;
        }
    // expansion of every member over the candidate: integral and sign-uniform
    std::vector<std::vector<BigRat>> mat(l, std::vector<BigRat>(k));
    for (int r = 0; r < l; ++r)
        for (int c = 0; c < k; ++c) mat[r][c] = candidate[c][r];
    for (const Root& m : sub.members) {
        std::vector<BigRat> rhs(l);
        for (int r = 0; r < l; ++r) rhs[r] = m[r];
        auto x = solve_rational(mat, rhs);
        if (!x) return false;
        bool nonneg = true, nonpos = true;
        for (const BigRat& xi : *x) {
            if (boost::multiprecision::denominator(xi) != 1) return false;
            if (xi > 0) nonpos = false;
            if (xi < 0) nonneg = false;
        }
        if (!nonneg && !nonpos) return false;
    }
    return true;
}

/// The indecomposable elements of sub's positive part under the parent's
/// positivity; for a closed subsystem this is its canonical simple system.
inline std::vector<Root> extract_simple_system(const Subsystem& sub) {
    const std::vector<Root> pos = sub.positive_members();
    std::set<std::vector<int>> pos_set;
    for (const Root& r : pos) pos_set.insert(r.coeffs);
    std::vector<Root> simple;
    for (const Root& beta : pos) {
        bool decomposable = false;
        for (const Root& gamma : pos) {
            Root delta = beta - gamma;
            if (!delta.is_zero() && pos_set.count(delta.coeffs)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) simple.push_back(beta);
    }
    std::sort(simple.begin(), simple.end(), height_lex_less);
    return simple;
}

namespace detail {

// connected components of the mutual-pairing graph on a candidate simple system
inline std::vector<std::vector<int>> pairing_components(
    const std::vector<std::vector<int>>& pairing) {
    const int k = static_cast<int>(pairing.size());
    std::vector<int> comp(k, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < k; ++s) {
        if (comp[s] >= 0) continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            out[id].push_back(i);
            for (int j = 0; j < k; ++j)
                if (comp[j] < 0 && pairing[i][j] != 0) {
                    comp[j] = id;
                    stack.push_back(j);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

// invariants used to pre-filter catalogue candidates: sorted multiset of edge
// multiplicities c_ij*c_ji and sorted degree sequence
struct DiagramSignature {
    std::vector<int> edge_mults;
    std::vector<int> degrees;

    static DiagramSignature of(const std::vector<std::vector<int>>& m) {
        const int k = static_cast<int>(m.size());
        DiagramSignature sig;
        sig.degrees.assign(k, 0);
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (m[i][j] != 0) {
                    sig.edge_mults.push_back(m[i][j] * m[j][i]);
                    ++sig.degrees[i];
                    ++sig.degrees[j];
                }
        std::sort(sig.edge_mults.begin(), sig.edge_mults.end());
        std::sort(sig.degrees.begin(), sig.degrees.end());
        return sig;
    }

    friend bool operator==(const DiagramSignature&, const DiagramSignature&) = default;
};

inline bool permutation_match(const std::vector<std::vector<int>>& m,
                              const CartanMatrix& cat) {
    const int k = static_cast<int>(m.size());
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < k && ok; ++i)
            for (int j = 0; j < k; ++j)
                if (m[i][j] != cat(perm[i], perm[j])) {
                    ok = false;
                    break;
                }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Connected catalogue at a given rank, in canonical preference order.
// C starts at rank 3 (C2 is B2 renumbered) and D at rank 4 (D3 is A3), so
// every connected diagram gets exactly one label.
inline std::vector<SimpleType> connected_catalogue(int rank) {
    std::vector<SimpleType> cat;
    cat.push_back({Family::A, rank});
    if (rank >= 2) cat.push_back({Family::B, rank});
    if (rank >= 3) cat.push_back({Family::C, rank});
    if (rank >= 4) cat.push_back({Family::D, rank});
    if (rank >= 6 && rank <= 8) cat.push_back({Family::E, rank});
    if (rank == 4) cat.push_back({Family::F, rank});
    if (rank == 2) cat.push_back({Family::G, rank});
    return cat;
}

}  // namespace detail

/// Dynkin types of the connected components of a closed subsystem, sorted
/// canonically (family letter, then rank). The trivial subsystem gives {}.
inline std::vector<SimpleType> classify_type(const Subsystem& sub) {
    const RootSystem& rs = *sub.parent;
    std::vector<Root> simple = extract_simple_system(sub);
    if (simple.empty()) return {};
    const int k = static_cast<int>(simple.size());
    std::vector<std::vector<int>> pairing(k, std::vector<int>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            pairing[i][j] = rs.pairing_with_coroot(simple[i], simple[j]);

    std::vector<SimpleType> types;
    for (const std::vector<int>& comp : detail::pairing_components(pairing)) {
        const int r = static_cast<int>(comp.size());
        std::vector<std::vector<int>> m(r, std::vector<int>(r));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) m[i][j] = pairing[comp[i]][comp[j]];
        const auto sig = detail::DiagramSignature::of(m);
        bool matched = false;
        for (SimpleType t : detail::connected_catalogue(r)) {
            const CartanMatrix cat = CartanMatrix::of(t);
            if (sig != detail::DiagramSignature::of(cat.entries)) continue;
            if (detail::permutation_match(m, cat)) {
                types.push_back(t);
                matched = true;
                break;
            }
        }
        if (!matched)
            throw std::logic_error("classify_type: component matches no connected type");
    }
    std::sort(types.begin(), types.end());
    return types;
}

}  // namespace rootwork
