#pragma once

// Small exact linear-algebra kit over arbitrary-precision integers and
// rationals. Systems here are tiny (at most ~120 x 8), so clarity wins over
// asymptotics everywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <vector>

namespace rootwork {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

using IntMatrix = std::vector<std::vector<BigInt>>;
using IntVector = std::vector<BigInt>;

/// Rank of a rational matrix by Gaussian elimination.
inline int rational_rank(std::vector<std::vector<BigRat>> m) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            BigRat f = m[r][col] / m[rank][col];
            for (int c2 = col; c2 < cols; ++c2) m[r][c2] -= f * m[rank][c2];
        }
        ++rank;
    }
    return rank;
}

/// Solve A x = b exactly over the rationals. Returns a solution iff one
/// exists; when the kernel is nontrivial the returned point has value 0 in
/// the free coordinates.
inline std::optional<std::vector<BigRat>> solve_rational(
    std::vector<std::vector<BigRat>> a, std::vector<BigRat> b) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        std::swap(b[rank], b[pivot]);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || a[r][col] == 0) continue;
            BigRat f = a[r][col] / a[rank][col];
            for (int c2 = col; c2 < cols; ++c2) a[r][c2] -= f * a[rank][c2];
            b[r] -= f * b[rank];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (int r = rank; r < rows; ++r)
        if (b[r] != 0) return std::nullopt;
    std::vector<BigRat> x(cols, BigRat(0));
    for (int r = 0; r < rank; ++r) x[pivot_col[r]] = b[r] / a[r][pivot_col[r]];
    return x;
}

/// Column-style Hermite reduction: returns (H, V) with H = A*V, V unimodular,
/// H in column echelon form (pivot rows strictly increasing, zero columns
/// last). Solving A x = b over the integers reduces to forward substitution
/// on H.
struct ColumnEchelon {
    IntMatrix h;  // rows x cols
    IntMatrix v;  // cols x cols, unimodular
    std::vector<int> pivot_row;  // per pivot column
    int rank = 0;
};

inline ColumnEchelon column_echelon(const IntMatrix& a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
    ColumnEchelon ce;
    ce.h = a;
    ce.v.assign(cols, IntVector(cols, 0));
    for (int i = 0; i < cols; ++i) ce.v[i][i] = 1;

    auto col_combine = [&](int cj, int ck, const BigInt& x, const BigInt& y,
                           const BigInt& z, const BigInt& w) {
        // (col_j, col_k) <- (x*col_j + y*col_k, z*col_j + w*col_k), det = xw - yz = +-1
        for (int r = 0; r < rows; ++r) {
            BigInt nj = x * ce.h[r][cj] + y * ce.h[r][ck];
            BigInt nk = z * ce.h[r][cj] + w * ce.h[r][ck];
            ce.h[r][cj] = nj;
            ce.h[r][ck] = nk;
        }
        for (int r = 0; r < cols; ++r) {
            BigInt nj = x * ce.v[r][cj] + y * ce.v[r][ck];
            BigInt nk = z * ce.v[r][cj] + w * ce.v[r][ck];
            ce.v[r][cj] = nj;
            ce.v[r][ck] = nk;
        }
    };

    int lead = 0;
    for (int row = 0; row < rows && lead < cols; ++row) {
        // gcd-reduce the row tail into column `lead`
        for (int c = lead + 1; c < cols; ++c) {
            if (ce.h[row][c] == 0) continue;
            if (ce.h[row][lead] == 0) {
                col_combine(lead, c, 0, 1, 1, 0);  // swap
                continue;
            }
            // extended gcd on (h[row][lead], h[row][c])
            BigInt g, s, t;
            {
                BigInt old_r = ce.h[row][lead], r = ce.h[row][c];
                BigInt old_s = 1, s2 = 0, old_t = 0, t2 = 1;
                while (r != 0) {
                    BigInt q = old_r / r;
                    BigInt tmp = old_r - q * r;
                    old_r = r;
                    r = tmp;
                    tmp = old_s - q * s2;
                    old_s = s2;
                    s2 = tmp;
                    tmp = old_t - q * t2;
                    old_t = t2;
                    t2 = tmp;
                }
                g = old_r;
                s = old_s;
                t = old_t;
            }
            BigInt u = ce.h[row][lead] / g, w = ce.h[row][c] / g;
            // new lead column picks up the gcd, new column c drops to zero in
            // this row; det = s*u + t*w = 1 (Bezout), so this is unimodular
            col_combine(lead, c, s, t, -w, u);
        }
        if (ce.h[row][lead] != 0) {
            if (ce.h[row][lead] < 0) {
                for (int r = 0; r < rows; ++r) ce.h[r][lead] = -ce.h[r][lead];
                for (int r = 0; r < cols; ++r) ce.v[r][lead] = -ce.v[r][lead];
            }
            ce.pivot_row.push_back(row);
            ++lead;
        }
    }
    ce.rank = lead;
    return ce;
}

/// Exact integer solve A x = b. Status distinguishes "no integer solution",
/// "unique", and "solvable with free lattice directions" (kernel_rank > 0).
struct IntSolve {
    enum class Status { none, unique, affine } status = Status::none;
    IntVector point;   // valid unless status == none
    int kernel_rank = 0;
};

inline IntSolve solve_integer(const IntMatrix& a, const IntVector& b) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
    IntSolve out;
    if (rows == 0 || cols == 0) {
        // no constraints (or no unknowns): solvable iff b is all zero
        for (const BigInt& x : b)
            if (x != 0) return out;
        out.point.assign(cols, 0);
        out.kernel_rank = cols;
        out.status = cols == 0 ? IntSolve::Status::unique : IntSolve::Status::affine;
        return out;
    }
    ColumnEchelon ce = column_echelon(a);
    // forward substitution: y on pivot columns, 0 on free columns
    IntVector y(cols, 0);
    IntVector residual = b;
    for (int k = 0; k < ce.rank; ++k) {
        const int row = ce.pivot_row[k];
        const BigInt& pivot = ce.h[row][k];
        if (residual[row] % pivot != 0) return out;  // no integer solution
        y[k] = residual[row] / pivot;
        for (int r = 0; r < rows; ++r) residual[r] -= y[k] * ce.h[r][k];
    }
    for (int r = 0; r < rows; ++r)
        if (residual[r] != 0) return out;  // inconsistent
    out.point.assign(cols, 0);
    for (int c = 0; c < cols; ++c)
        for (int k = 0; k < ce.rank; ++k) out.point[c] += ce.v[c][k] * y[k];
    out.kernel_rank = cols - ce.rank;
    out.status = out.kernel_rank == 0 ? IntSolve::Status::unique : IntSolve::Status::affine;
    return out;
}

}  // namespace rootwork
