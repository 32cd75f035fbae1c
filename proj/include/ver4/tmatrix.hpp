#pragma once

// Matrices over a twisted-commutative algebra: Leibniz determinants with a
// selectable factor order, the block matrices of GL(m+nP), geometric
// series inverses in truncated algebras, the kernel-valued determinant
// factorization, and the Frobenius projection.

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ver4/twisted.hpp"

namespace ver4 {

using TMatrix = std::vector<std::vector<TwistedElement>>;

inline TMatrix tmat_zero(const VarTableRef& t, int rows, int cols) {
    return TMatrix(rows, std::vector<TwistedElement>(cols, TwistedElement::zero(t)));
}

inline TMatrix tmat_identity(const VarTableRef& t, int n) {
    TMatrix m = tmat_zero(t, n, n);
    for (int i = 0; i < n; ++i)
        m[i][i] = TwistedElement::one(t);
    return m;
}

inline TMatrix tmat_add(const TMatrix& a, const TMatrix& b) {
    TMatrix out = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j)
            out[i][j] += b[i][j];
    return out;
}

inline TMatrix tmat_mul(const TMatrix& a, const TMatrix& b) {
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    TMatrix out(n, std::vector<TwistedElement>(m, TwistedElement::zero(a[0][0].table())));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t l = 0; l < k; ++l)
                out[i][j] += a[i][l] * b[l][j];
    return out;
}

inline TMatrix tmat_delta(const TMatrix& a) {
    TMatrix out = a;
    for (auto& row : out)
        for (auto& e : row)
            e = delta(e);
    return out;
}

inline bool tmat_equal(const TMatrix& a, const TMatrix& b) { return a == b; }

// Leibniz expansion sum_sigma prod_t M[order[t]][sigma(order[t])], the
// factors multiplied in the given row-consumption order (identity row
// order when omitted). Distinct orders give representatives of the same
// determinant modulo the delta-ideal.
inline TwistedElement det_representative(const TMatrix& m, std::vector<int> order = {}) {
    const int n = static_cast<int>(m.size());
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("det_representative: matrix is not square");
    if (order.empty()) {
        order.resize(n);
        std::iota(order.begin(), order.end(), 0);
    }
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("det_representative: order must list every row once");
    if (n == 0)
        throw std::invalid_argument("det_representative: empty matrix");
    const VarTableRef& t = m[0][0].table();
    TwistedElement out = TwistedElement::zero(t);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        TwistedElement prod = TwistedElement::one(t);
        for (int row : order) {
            prod = prod * m[row][perm[row]];
            if (prod.is_zero())
                break;
        }
        out += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// The blocks of an element of GL(m+nP); the full matrix is
//   [ F   C   C'    ]
//   [ B'  D   D'    ]
//   [ B   E   D+E'  ]
// with the F entries in ker delta.
struct BlockMatrix {
    int m = 0, n = 0;
    TMatrix F, C, B, D, E;

    static BlockMatrix identity(const VarTableRef& t, int m, int n) {
        BlockMatrix b;
        b.m = m;
        b.n = n;
        b.F = tmat_identity(t, m);
        b.C = tmat_zero(t, m, n);
        b.B = tmat_zero(t, n, m);
        b.D = tmat_identity(t, n);
        b.E = tmat_zero(t, n, n);
        return b;
    }

    const VarTableRef& table() const {
        if (n > 0)
            return D[0][0].table();
        if (m > 0)
            return F[0][0].table();
        throw std::logic_error("BlockMatrix: empty shape");
    }

    void check_kernel_block() const {
        for (const auto& row : F)
            for (const auto& e : row)
                if (!delta(e).is_zero())
                    throw std::invalid_argument("BlockMatrix: F entries must lie in ker delta");
    }

    TMatrix full() const {
        const VarTableRef& t = table();
        TMatrix out = tmat_zero(t, m + 2 * n, m + 2 * n);
        auto put = [&](const TMatrix& blk, int r0, int c0) {
            for (std::size_t i = 0; i < blk.size(); ++i)
                for (std::size_t j = 0; j < blk[i].size(); ++j)
                    out[r0 + i][c0 + j] = blk[i][j];
        };
        put(F, 0, 0);
        put(C, 0, m);
        put(tmat_delta(C), 0, m + n);
        put(tmat_delta(B), m, 0);
        put(D, m, m);
        put(tmat_delta(D), m, m + n);
        put(B, m + n, 0);
        put(E, m + n, m);
        put(tmat_add(D, tmat_delta(E)), m + n, m + n);
        return out;
    }
};

// Product in GL(m+nP). The group is closed under multiplication, so the
// derived blocks of the product must again be the delta-images of the
// primary ones; this is asserted as a consistency check of the kernel.
inline BlockMatrix block_mul(const BlockMatrix& a, const BlockMatrix& b) {
    if (a.m != b.m || a.n != b.n)
        throw std::invalid_argument("block_mul: shape mismatch");
    TMatrix p = tmat_mul(a.full(), b.full());
    const int m = a.m, n = a.n;
    auto slice = [&](int r0, int c0, int rows, int cols) {
        TMatrix out(rows, std::vector<TwistedElement>(cols, TwistedElement::zero(a.table())));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                out[i][j] = p[r0 + i][c0 + j];
        return out;
    };
    BlockMatrix out;
    out.m = m;
    out.n = n;
    out.F = slice(0, 0, m, m);
    out.C = slice(0, m, m, n);
    out.B = slice(m + n, 0, n, m);
    out.D = slice(m, m, n, n);
    out.E = slice(m + n, m, n, n);
    if (!tmat_equal(slice(0, m + n, m, n), tmat_delta(out.C)) ||
        !tmat_equal(slice(m, 0, n, m), tmat_delta(out.B)) ||
        !tmat_equal(slice(m, m + n, n, n), tmat_delta(out.D)) ||
        !tmat_equal(slice(m + n, m + n, n, n), tmat_add(out.D, tmat_delta(out.E))))
        throw std::logic_error("block_mul: product left the block-matrix form");
    return out;
}

// Inverse of I + N with N nilpotent in the truncated algebra, via the
// geometric series.
inline TMatrix tmat_inverse_series(const TMatrix& a) {
    const int n = static_cast<int>(a.size());
    const VarTableRef& t = a[0][0].table();
    TMatrix nil = a;
    for (int i = 0; i < n; ++i)
        nil[i][i] += TwistedElement::one(t);
    const int cap = t->trunc_degree > 0 ? t->trunc_degree + 1 : 64;
    TMatrix out = tmat_identity(t, n);
    TMatrix power = tmat_identity(t, n);
    for (int k = 1; k <= cap; ++k) {
        power = tmat_mul(power, nil);
        bool all_zero = true;
        for (const auto& row : power)
            for (const auto& e : row)
                if (!e.is_zero())
                    all_zero = false;
        if (all_zero)
            return out;
        out = tmat_add(out, power);
    }
    throw std::invalid_argument("tmat_inverse_series: matrix is not unipotent in the truncation");
}

// The factorized determinant representative det(F) * det(I_n + (E~ D~^-1)')
// * (det D~)^2 with D~ = B'F^-1C + D and E~ = BF^-1C + E (the tilded blocks
// reduce to D, E when m = 0). Returns the representative together with
// delta(rep) == 0.
inline std::pair<TwistedElement, bool> det_block_kernel_check(const BlockMatrix& bm) {
    const VarTableRef& t = bm.table();
    bm.check_kernel_block();
    TMatrix dt = bm.D, et = bm.E;
    TwistedElement detF = TwistedElement::one(t);
    if (bm.m > 0) {
        TMatrix finv = tmat_inverse_series(bm.F);
        TMatrix fc = tmat_mul(finv, bm.C);
        dt = tmat_add(tmat_mul(tmat_delta(bm.B), fc), bm.D);
        et = tmat_add(tmat_mul(bm.B, fc), bm.E);
        detF = det_representative(bm.F);
    }
    TwistedElement rep = detF;
    if (bm.n > 0) {
        TMatrix u = tmat_mul(et, tmat_inverse_series(dt));
        TMatrix inner = tmat_delta(u);
        for (int i = 0; i < bm.n; ++i)
            inner[i][i] += TwistedElement::one(t);
        TwistedElement detD = det_representative(dt);
        rep = rep * det_representative(inner) * detD * detD;
    }
    return {rep, delta(rep).is_zero()};
}

// Projection onto the reductive factor: entrywise squares of F, entrywise
// fourth powers of D.
inline std::pair<TMatrix, TMatrix> frobenius_project(const BlockMatrix& bm) {
    TMatrix f2 = bm.F, d4 = bm.D;
    for (auto& row : f2)
        for (auto& e : row)
            e = e * e;
    for (auto& row : d4)
        for (auto& e : row) {
            e = e * e;
            e = e * e;
        }
    return {f2, d4};
}

}  // namespace ver4
