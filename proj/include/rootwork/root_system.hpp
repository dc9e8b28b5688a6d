#pragma once

// Crystallographic root systems of the simple types, generated exactly from
// their Cartan matrices. Everything is integer arithmetic over coefficient
// vectors in the simple-root basis; no floating point, no real embeddings.

#include <algorithm>
#include <compare>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace rootwork {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// One of the simple Cartan types, with the usual rank restrictions
/// (E6/E7/E8, F4, G2, D>=2, B/C>=2, A>=1). Node numbering is Bourbaki
/// throughout: in E-types the chain is 1-3-4-5-6(-7-8) with node 2 hanging
/// off node 4.
struct SimpleType {
    Family family = Family::A;
    int rank = 1;

    friend auto operator<=>(const SimpleType&, const SimpleType&) = default;

    bool valid() const {
        switch (family) {
            case Family::A: return rank >= 1;
            case Family::B:
            case Family::C:
            case Family::D: return rank >= 2;
            case Family::E: return rank >= 6 && rank <= 8;
            case Family::F: return rank == 4;
            case Family::G: return rank == 2;
        }
        return false;
    }

    std::string to_string() const {
        return std::string(1, static_cast<char>(family)) + std::to_string(rank);
    }

    static SimpleType parse(const std::string& s) {
        if (s.size() < 2)
            throw std::invalid_argument("simple type: expected e.g. \"A3\" or \"E8\", got \"" + s + "\"");
        char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
        if (f < 'A' || f > 'G')
            throw std::invalid_argument("simple type: unknown family '" + std::string(1, s[0]) + "'");
        int r = 0;
        try {
            size_t pos = 0;
            r = std::stoi(s.substr(1), &pos);
            if (pos != s.size() - 1) throw std::invalid_argument("");
        } catch (...) {
            throw std::invalid_argument("simple type: bad rank in \"" + s + "\"");
        }
        SimpleType t{static_cast<Family>(f), r};
        if (!t.valid())
            throw std::invalid_argument("simple type: invalid rank/family combination \"" + s + "\"");
        return t;
    }
};

/// Integer Cartan matrix, entry(i,j) = <alpha_i, alpha_j^vee>.
struct CartanMatrix {
    std::vector<std::vector<int>> entries;

    int rank() const { return static_cast<int>(entries.size()); }
    int operator()(int i, int j) const { return entries[i][j]; }

    void validate() const {
        const int l = rank();
        for (int i = 0; i < l; ++i) {
            if (static_cast<int>(entries[i].size()) != l)
                throw std::invalid_argument("Cartan matrix: not square");
            if (entries[i][i] != 2)
                throw std::invalid_argument("Cartan matrix: diagonal entry != 2");
            for (int j = 0; j < l; ++j) {
                if (i == j) continue;
                const int a = entries[i][j];
                if (a > 0 || a < -3)
                    throw std::invalid_argument("Cartan matrix: off-diagonal entry outside {0,-1,-2,-3}");
                if ((a == 0) != (entries[j][i] == 0))
                    throw std::invalid_argument("Cartan matrix: zero pattern not symmetric");
            }
        }
    }

    /// Cartan matrix of a simple type under Bourbaki numbering.
    static CartanMatrix of(SimpleType t) {
        if (!t.valid())
            throw std::invalid_argument("invalid simple type " + t.to_string());
        const int l = t.rank;
        std::vector<std::vector<int>> c(l, std::vector<int>(l, 0));
        for (int i = 0; i < l; ++i) c[i][i] = 2;
        auto chain = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
        switch (t.family) {
            case Family::A:
                for (int i = 0; i + 1 < l; ++i) chain(i, i + 1);
                break;
            case Family::B:  // alpha_l short: <alpha_{l-1}, alpha_l^vee> = -2
                for (int i = 0; i + 1 < l; ++i) chain(i, i + 1);
                c[l - 2][l - 1] = -2;
                break;
            case Family::C:  // alpha_l long
                for (int i = 0; i + 1 < l; ++i) chain(i, i + 1);
                c[l - 1][l - 2] = -2;
                break;
            case Family::D:  // nodes l-1, l both attached to l-2; D2 = A1 x A1
                for (int i = 0; i + 1 < l - 1; ++i) chain(i, i + 1);
                if (l >= 3) chain(l - 3, l - 1);
                if (l == 2) { c[0][1] = c[1][0] = 0; }
                break;
            case Family::E:
                chain(0, 2);
                chain(2, 3);
                chain(1, 3);
                for (int i = 3; i + 1 < l; ++i) chain(i, i + 1);
                break;
            case Family::F:  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
                chain(0, 1);
                chain(1, 2);
                chain(2, 3);
                c[1][2] = -2;
                break;
            case Family::G:  // alpha_1 short, alpha_2 long
                c[0][1] = -1;
                c[1][0] = -3;
                break;
        }
        CartanMatrix m{std::move(c)};
        m.validate();
        return m;
    }
};

/// A root, stored as its integer coefficient vector over the simple roots.
/// Valid roots are sign-uniform: all coefficients >= 0 or all <= 0.
struct Root {
    std::vector<int> coeffs;

    Root() = default;
    explicit Root(std::vector<int> c) : coeffs(std::move(c)) {}

    int rank() const { return static_cast<int>(coeffs.size()); }
    int operator[](int i) const { return coeffs[i]; }

    int height() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0); }
    bool is_zero() const {
        return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c == 0; });
    }
    bool is_positive() const {
        return !is_zero() && std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c >= 0; });
    }
    bool is_negative() const {
        return !is_zero() && std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c <= 0; });
    }

    Root operator-() const {
        std::vector<int> c(coeffs.size());
        for (size_t i = 0; i < coeffs.size(); ++i) c[i] = -coeffs[i];
        return Root(std::move(c));
    }
    friend Root operator+(const Root& a, const Root& b) {
        if (a.rank() != b.rank()) throw std::invalid_argument("root sum: rank mismatch");
        std::vector<int> c(a.coeffs.size());
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs[i] + b.coeffs[i];
        return Root(std::move(c));
    }
    friend Root operator-(const Root& a, const Root& b) { return a + (-b); }

    friend auto operator<=>(const Root&, const Root&) = default;

    /// i-th simple root of a rank-l system.
    static Root simple(int l, int i) {
        std::vector<int> c(l, 0);
        c.at(i) = 1;
        return Root(std::move(c));
    }
};

/// Ordering used everywhere a deterministic root sequence is needed:
/// by height, then lexicographic on the coefficient vector.
inline bool height_lex_less(const Root& a, const Root& b) {
    const int ha = a.height(), hb = b.height();
    if (ha != hb) return ha < hb;
    return a.coeffs < b.coeffs;
}

/// A full root system: simple type, Cartan matrix, and the positive roots
/// generated height by height via root strings. Immutable after build().
class RootSystem {
public:
    static RootSystem build(SimpleType t) {
        if (!t.valid())
            throw std::invalid_argument("invalid simple type " + t.to_string());
        RootSystem rs;
        rs.type_ = t;
        rs.cartan_ = CartanMatrix::of(t);
        rs.length2_ = symmetrizer(rs.cartan_);
        rs.generate();
        return rs;
    }

    SimpleType type() const { return type_; }
    int rank() const { return type_.rank; }
    const CartanMatrix& cartan() const { return cartan_; }
    const std::vector<Root>& positive_roots() const { return positive_roots_; }

    /// Positive and negative roots, positives first in the canonical order.
    std::vector<Root> all_roots() const {
        std::vector<Root> all = positive_roots_;
        all.reserve(2 * positive_roots_.size());
        for (const Root& r : positive_roots_) all.push_back(-r);
        return all;
    }

    bool is_root(const Root& r) const {
        if (r.rank() != rank()) return false;
        if (positive_set_.count(r.coeffs)) return true;
        return positive_set_.count((-r).coeffs) != 0;
    }

    /// <beta, alpha_i^vee>, extended linearly to any lattice vector.
    int coroot_pairing(const Root& beta, int i) const {
        check_rank(beta);
        int s = 0;
        for (int j = 0; j < rank(); ++j) s += beta[j] * cartan_(j, i);
        return s;
    }

    /// <beta, omega_j> = j-th coefficient of beta over the simple roots
    /// (omega_j is the dual basis of the coroots).
    int coweight_pairing(const Root& beta, int j) const {
        check_rank(beta);
        if (j < 0 || j >= rank()) throw std::invalid_argument("coweight_pairing: index out of range");
        return beta[j];
    }

    /// W-invariant inner product, scaled so short simple roots have
    /// squared length 2 within each component.
    int inner(const Root& a, const Root& b) const {
        check_rank(a);
        check_rank(b);
        // (alpha_i, alpha_j) = cartan(i,j) * len2[j] / 2; len2 is even by construction
        long long s = 0;
        for (int i = 0; i < rank(); ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; j < rank(); ++j)
                s += static_cast<long long>(a[i]) * b[j] * cartan_(i, j) * (length2_[j] / 2);
        }
        return static_cast<int>(s);
    }

    /// <beta, gamma^vee> = 2(beta,gamma)/(gamma,gamma) for an arbitrary root gamma.
    int pairing_with_coroot(const Root& beta, const Root& gamma) const {
        if (!is_root(gamma)) throw std::invalid_argument("pairing_with_coroot: gamma is not a root");
        const int num = 2 * inner(beta, gamma);
        const int den = inner(gamma, gamma);
        if (num % den != 0)
            throw std::logic_error("pairing_with_coroot: non-integral Cartan integer");
        return num / den;
    }

    bool is_irreducible() const {
        // connectivity of the Dynkin graph
        const int l = rank();
        std::vector<int> seen(l, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j = 0; j < l; ++j)
                if (!seen[j] && cartan_(i, j) != 0) {
                    seen[j] = 1;
                    stack.push_back(j);
                }
        }
        return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
    }

    /// The unique highest root. Rejects reducible systems (e.g. D2).
    Root highest_root() const {
        if (!is_irreducible())
            throw std::invalid_argument("highest_root: system " + type_.to_string() + " is reducible");
        const Root& top = positive_roots_.back();  // max height in canonical order
        for (int i = 0; i < rank(); ++i)
            if (is_root(top + Root::simple(rank(), i)))
                throw std::logic_error("highest_root: maximal-height root is not highest");
        return top;
    }

    /// Squared lengths (alpha_i, alpha_i) under the scaling used by inner().
    const std::vector<int>& simple_lengths2() const { return length2_; }

private:
    RootSystem() = default;

    void check_rank(const Root& r) const {
        if (r.rank() != rank())
            throw std::invalid_argument("root of rank " + std::to_string(r.rank()) +
                                        " used with " + type_.to_string());
    }

    // Symmetrizer: even integers len2[i] = (alpha_i, alpha_i), with
    // len2[i]/len2[j] = cartan(i,j)/cartan(j,i) along edges and the short
    // roots of each component at length^2 = 2.
    static std::vector<int> symmetrizer(const CartanMatrix& c) {
        const int l = c.rank();
        std::vector<long long> num(l, 0), den(l, 0);  // len2 ratio within a component
        std::vector<int> len2(l, 2);
        for (int start = 0; start < l; ++start) {
            if (num[start] != 0) continue;
            num[start] = den[start] = 1;
            std::vector<int> comp{start};
            std::vector<int> stack{start};
            while (!stack.empty()) {
                int i = stack.back();
                stack.pop_back();
                for (int j = 0; j < l; ++j) {
                    if (j == i || c(i, j) == 0 || num[j] != 0) continue;
                    // c(i,j) * len2[j] = c(j,i) * len2[i]
                    num[j] = num[i] * std::abs(c(j, i));
                    den[j] = den[i] * std::abs(c(i, j));
                    comp.push_back(j);
                    stack.push_back(j);
                }
            }
            long long lcm_den = 1;
            for (int i : comp) lcm_den = std::lcm(lcm_den, den[i]);
            long long mn = 0;
            std::vector<long long> v(l, 0);
            for (int i : comp) {
                v[i] = num[i] * (lcm_den / den[i]);
                if (mn == 0 || v[i] < mn) mn = v[i];
            }
            for (int i : comp) {
                if (2 * v[i] % mn != 0)
                    throw std::logic_error("symmetrizer: non-integral length ratio");
                len2[i] = static_cast<int>(2 * v[i] / mn);
            }
        }
        return len2;
    }

    // Height-by-height generation. beta + alpha_i is a root iff q > 0 in the
    // alpha_i-string through beta, where q = p - <beta, alpha_i^vee> and p is
    // the number of steps down that stay inside the root set.
    void generate() {
        const int l = rank();
        positive_roots_.clear();
        positive_set_.clear();
        std::vector<Root> current;
        for (int i = 0; i < l; ++i) {
            Root s = Root::simple(l, i);
            positive_set_.insert(s.coeffs);
            current.push_back(std::move(s));
        }
        std::sort(current.begin(), current.end(), height_lex_less);
        for (const Root& r : current) positive_roots_.push_back(r);

        while (!current.empty()) {
            std::set<std::vector<int>> next_set;
            for (const Root& beta : current) {
                for (int i = 0; i < l; ++i) {
                    const Root alpha = Root::simple(l, i);
                    int p = 0;
                    Root down = beta - alpha;
                    while (!down.is_zero() && positive_set_.count(down.coeffs)) {
                        ++p;
                        down = down - alpha;
                    }
                    const int q = p - coroot_pairing(beta, i);
                    if (q > 0) {
                        Root up = beta + alpha;
                        if (!positive_set_.count(up.coeffs)) next_set.insert(up.coeffs);
                    }
                }
            }
            current.clear();
            for (const auto& c : next_set) {
                positive_set_.insert(c);
                current.emplace_back(c);
            }
            std::sort(current.begin(), current.end(), height_lex_less);
            for (const Root& r : current) positive_roots_.push_back(r);
        }
    }

    SimpleType type_;
    CartanMatrix cartan_;
    std::vector<Root> positive_roots_;
    std::set<std::vector<int>> positive_set_;
    std::vector<int> length2_;
};

inline RootSystem build_root_system(SimpleType t) { return RootSystem::build(t); }

/// A subset of the roots of a parent system, closed under negation and under
/// addition within the parent. Holds a non-owning pointer: the parent must
/// outlive the subsystem.
struct Subsystem {
    const RootSystem* parent = nullptr;
    std::vector<Root> members;  // sorted, height_lex on (sign, |.|)

    static Subsystem make(const RootSystem& rs, std::vector<Root> roots) {
        std::set<std::vector<int>> set;
        for (const Root& r : roots) {
            if (!rs.is_root(r))
                throw std::invalid_argument("subsystem: member is not a root of the parent");
            set.insert(r.coeffs);
        }
        for (const auto& c : set) {
            Root r(c);
            if (!set.count((-r).coeffs))
                throw std::invalid_argument("subsystem: not closed under negation");
        }
        for (const auto& a : set)
            for (const auto& b : set) {
                Root sum = Root(a) + Root(b);
                if (sum.is_zero()) continue;
                if (rs.is_root(sum) && !set.count(sum.coeffs))
                    throw std::invalid_argument("subsystem: not closed under root addition");
            }
        Subsystem sub;
        sub.parent = &rs;
        for (const auto& c : set) sub.members.emplace_back(c);
        std::sort(sub.members.begin(), sub.members.end(), height_lex_less);
        return sub;
    }

    bool contains(const Root& r) const {
        return std::binary_search(members.begin(), members.end(), r,
                                  height_lex_less);
    }

    /// Members that are positive roots of the parent.
    std::vector<Root> positive_members() const {
        std::vector<Root> pos;
        for (const Root& r : members)
            if (r.is_positive()) pos.push_back(r);
        return pos;
    }

    static Subsystem whole(const RootSystem& rs) {
        Subsystem sub;
        sub.parent = &rs;
        sub.members = rs.all_roots();
        std::sort(sub.members.begin(), sub.members.end(), height_lex_less);
        return sub;
    }
};

}  // namespace rootwork
