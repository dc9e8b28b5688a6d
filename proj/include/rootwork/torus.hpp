#pragma once

// Split torus elements h(g^{m_1},...,g^{m_l}) over F_q, modeled as exponent
// vectors modulo q-1 with respect to a fixed abstract generator g of the
// multiplicative group. Field elements are never materialized: orders and
// kernels only depend on exponents.

#include "rootwork/root_system.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace rootwork {

/// Parameters of F_q with q = p^e; the exponent arithmetic lives in Z/(q-1).
struct CyclicParams {
    long long p = 0;
    int e = 1;
    long long q = 0;

    long long modulus() const { return q - 1; }

    static bool is_prime(long long n) {
        if (n < 2) return false;
        for (long long d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    static CyclicParams make(long long p, int e) {
        if (!is_prime(p))
            throw std::invalid_argument("cyclic params: p = " + std::to_string(p) + " is not prime");
        if (e < 1) throw std::invalid_argument("cyclic params: exponent must be positive");
        long long q = 1;
        for (int i = 0; i < e; ++i) {
            if (q > (1LL << 62) / p)
                throw std::invalid_argument("cyclic params: q = p^e overflows");
            q *= p;
        }
        return CyclicParams{p, e, q};
    }

    /// Exponent of nu = g^{(q-1)/(p-1)}, a generator of the prime subfield's
    /// multiplicative group.
    long long nu_exponent() const { return modulus() / (p - 1); }
};

/// h(g^{m_1},...,g^{m_l}) as the residue vector (m_j) mod q-1.
struct TorusElement {
    CyclicParams params;
    std::vector<long long> exponents;

    static TorusElement make(CyclicParams cp, std::vector<long long> m) {
        const long long mod = cp.modulus();
        for (long long& x : m) {
            x %= mod;
            if (x < 0) x += mod;
        }
        return TorusElement{cp, std::move(m)};
    }

    int rank() const { return static_cast<int>(exponents.size()); }
};

/// Exponent of alpha(t) over the fixed generator: sum_j coeffs[j]*m_j mod q-1.
inline long long eval_root(const TorusElement& t, const Root& r) {
    if (r.rank() != t.rank())
        throw std::invalid_argument("eval_root: rank mismatch");
    const long long mod = t.params.modulus();
    __int128 s = 0;
    for (int j = 0; j < r.rank(); ++j) s += (__int128)r[j] * t.exponents[j];
    long long out = static_cast<long long>(s % mod);
    if (out < 0) out += mod;
    return out;
}

/// Multiplicative order of t: (q-1) / gcd(q-1, m_1, ..., m_l).
inline long long order(const TorusElement& t) {
    long long g = t.params.modulus();
    for (long long m : t.exponents) g = std::gcd(g, m);
    return t.params.modulus() / g;
}

/// The subsystem {alpha in Phi : alpha(t) = 1}. Always closed and stable
/// under negation, so the Subsystem invariants hold by construction.
inline Subsystem kernel_subsystem(const TorusElement& t, const RootSystem& rs) {
    if (t.rank() != rs.rank())
        throw std::invalid_argument("kernel_subsystem: rank mismatch");
    std::vector<Root> members;
    for (const Root& r : rs.all_roots())
        if (eval_root(t, r) == 0) members.push_back(r);
    return Subsystem::make(rs, std::move(members));
}

/// t = h(nu^{n_1},...,n_l) (half = false) or h(nu^{n_1/2},...) (half = true),
/// where nu generates the prime subfield's multiplicative group. The half
/// form needs q to be an even power of p, so that a square root of nu exists.
inline TorusElement make_ohmori_torus(const CyclicParams& cp,
                                      const std::vector<long long>& n, bool half) {
    long long unit;
    if (half) {
        if (cp.e % 2 != 0)
            throw std::invalid_argument("make_ohmori_torus: half exponents need q to be an even power of p");
        const long long denom = 2 * (cp.p - 1);
        if (cp.modulus() % denom != 0)
            throw std::invalid_argument("make_ohmori_torus: (q-1)/(2(p-1)) is not an integer");
        unit = cp.modulus() / denom;
    } else {
        unit = cp.nu_exponent();
    }
    const long long mod = cp.modulus();
    std::vector<long long> m(n.size());
    for (size_t j = 0; j < n.size(); ++j) {
        long long nj = n[j] % mod;
        m[j] = static_cast<long long>((__int128)nj * unit % mod);
    }
    return TorusElement::make(cp, std::move(m));
}

}  // namespace rootwork
