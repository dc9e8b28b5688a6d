#pragma once

// Ohmori systems: integer linear systems sum_j n_j <alpha, omega_j> = target
// over a set of support roots, together with zero constraints over a chosen
// weight-0 domain. Since <alpha, omega_j> is just the j-th coefficient of
// alpha, the constraint matrix rows are exactly the roots' coefficient
// vectors; negative roots enter by linearity. Solved exactly, never in
// floating point.

#include "rootwork/exact_linalg.hpp"
#include "rootwork/grading.hpp"
#include "rootwork/root_system.hpp"

#include <optional>
#include <vector>

namespace rootwork {

struct OhmoriConstraint {
    Root root;
    long long target = 0;
};

struct OhmoriSystem {
    int rank = 0;
    std::vector<OhmoriConstraint> constraints;
};

struct OhmoriSolution {
    enum class Status { unique, none, affine } status = Status::none;
    std::optional<IntVector> point;     // present unless status == none
    std::optional<int> kernel_rank;     // present iff status == affine

    static const char* status_name(Status s) {
        switch (s) {
            case Status::unique: return "unique";
            case Status::none: return "none";
            case Status::affine: return "affine";
        }
        return "?";
    }
};

/// Constraints {(alpha, target) : alpha in support} together with
/// {(beta, 0) : beta in zero_domain}. All roots must belong to the ambient
/// system.
inline OhmoriSystem build_system(const RootSystem& rs, const std::vector<Root>& support,
                                 long long support_target,
                                 const std::vector<Root>& zero_domain) {
    OhmoriSystem sys;
    sys.rank = rs.rank();
    auto add = [&](const Root& r, long long t) {
        if (!rs.is_root(r))
            throw std::invalid_argument("build_system: constraint root from a different ambient system");
        sys.constraints.push_back({r, t});
    };
    for (const Root& r : support) add(r, support_target);
    for (const Root& r : zero_domain) add(r, 0);
    return sys;
}

inline OhmoriSystem build_system(const WeightedDynkinDiagram& wdd,
                                 const std::vector<Root>& support,
                                 long long support_target,
                                 const std::vector<Root>& zero_domain) {
    return build_system(*wdd.rs, support, support_target, zero_domain);
}

/// Exact solve over the integers. `none` means no integer solution exists;
/// `unique` means full column rank with an integral solution; `affine`
/// carries one integer point plus the kernel rank.
inline OhmoriSolution solve(const OhmoriSystem& sys) {
    IntMatrix a(sys.constraints.size(), IntVector(sys.rank));
    IntVector b(sys.constraints.size());
    for (size_t r = 0; r < sys.constraints.size(); ++r) {
        const OhmoriConstraint& c = sys.constraints[r];
        if (c.root.rank() != sys.rank)
            throw std::invalid_argument("solve: constraint rank mismatch");
        for (int j = 0; j < sys.rank; ++j) a[r][j] = c.root[j];
        b[r] = c.target;
    }
    OhmoriSolution out;
    if (sys.constraints.empty()) {
        // empty system: every vector solves it
        out.status = sys.rank == 0 ? OhmoriSolution::Status::unique
                                   : OhmoriSolution::Status::affine;
        out.point = IntVector(sys.rank, 0);
        if (sys.rank > 0) out.kernel_rank = sys.rank;
        return out;
    }
    IntSolve s = solve_integer(a, b);
    switch (s.status) {
        case IntSolve::Status::none:
            out.status = OhmoriSolution::Status::none;
            break;
        case IntSolve::Status::unique:
            out.status = OhmoriSolution::Status::unique;
            out.point = std::move(s.point);
            break;
        case IntSolve::Status::affine:
            out.status = OhmoriSolution::Status::affine;
            out.point = std::move(s.point);
            out.kernel_rank = s.kernel_rank;
            break;
    }
    return out;
}

/// Independent checker: true iff n satisfies every constraint exactly.
inline bool verify(const OhmoriSystem& sys, const IntVector& n) {
    if (static_cast<int>(n.size()) != sys.rank)
        throw std::invalid_argument("verify: solution length != system rank");
    for (const OhmoriConstraint& c : sys.constraints) {
        BigInt lhs = 0;
        for (int j = 0; j < sys.rank; ++j) lhs += c.root[j] * n[j];
        if (lhs != c.target) return false;
    }
    return true;
}

inline bool verify(const OhmoriSystem& sys, const std::vector<long long>& n) {
    IntVector v(n.begin(), n.end());
    return verify(sys, v);
}

}  // namespace rootwork
