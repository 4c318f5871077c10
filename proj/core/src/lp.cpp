#include "latslice/lp.hpp"

namespace latslice {

namespace {

// Full-tableau simplex over the rationals.  Variables 0..n-1 structural,
// n..n+m-1 slack, n+m the phase-1 auxiliary (when present).
struct Tableau {
    Eigen::Index m = 0, n = 0;
    Eigen::Index ncols = 0;  // number of variable columns
    RatMat body;             // m x ncols
    RatVec rhs;              // m
    RatVec zrow;             // ncols, reduced costs
    Rat zval;
    std::vector<Eigen::Index> basis;

    void pivot(Eigen::Index row, Eigen::Index col) {
        Rat piv = body(row, col);
        body.row(row) /= piv;
        rhs(row) /= piv;
        for (Eigen::Index i = 0; i < m; ++i) {
            if (i == row) continue;
            Rat f = body(i, col);
            if (f == 0) continue;
            body.row(i) -= body.row(row) * f;
            rhs(i) -= rhs(row) * f;
        }
        Rat fz = zrow(col);
        if (fz != 0) {
            zrow -= body.row(row).transpose() * fz;
            zval += rhs(row) * fz;
        }
        basis[static_cast<size_t>(row)] = col;
    }

    // Bland's rule; returns false when the objective is unbounded.
    bool run() {
        while (true) {
            Eigen::Index enter = -1;
            for (Eigen::Index j = 0; j < ncols; ++j)
                if (zrow(j) > 0) { enter = j; break; }
            if (enter < 0) return true;
            Eigen::Index leave = -1;
            Rat best;
            for (Eigen::Index i = 0; i < m; ++i) {
                if (body(i, enter) <= 0) continue;
                Rat ratio = rhs(i) / body(i, enter);
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis[static_cast<size_t>(i)] < basis[static_cast<size_t>(leave)])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }
};

}  // namespace

LpResult lp_maximize_nonneg(const RatMat& A, const RatVec& b, const RatVec& c) {
    const Eigen::Index m = A.rows(), n = A.cols();
    LpResult res;

    if (m == 0) {
        bool nontrivial = false;
        for (Eigen::Index j = 0; j < n; ++j)
            if (c(j) > 0) nontrivial = true;
        res.status = nontrivial ? LpStatus::unbounded : LpStatus::optimal;
        res.value = 0;
        res.x = RatVec::Zero(n);
        return res;
    }

    Tableau t;
    t.m = m;
    t.n = n;
    bool need_phase1 = false;
    for (Eigen::Index i = 0; i < m; ++i)
        if (b(i) < 0) need_phase1 = true;
    t.ncols = n + m + (need_phase1 ? 1 : 0);
    t.body = RatMat::Zero(m, t.ncols);
    t.body.block(0, 0, m, n) = A;
    for (Eigen::Index i = 0; i < m; ++i) t.body(i, n + i) = 1;
    t.rhs = b;
    t.basis.resize(static_cast<size_t>(m));
    for (Eigen::Index i = 0; i < m; ++i) t.basis[static_cast<size_t>(i)] = n + i;
    t.zrow = RatVec::Zero(t.ncols);
    t.zval = 0;

    if (need_phase1) {
        const Eigen::Index aux = n + m;
        for (Eigen::Index i = 0; i < m; ++i) t.body(i, aux) = -1;
        t.zrow(aux) = -1;
        Eigen::Index worst = 0;
        for (Eigen::Index i = 1; i < m; ++i)
            if (t.rhs(i) < t.rhs(worst)) worst = i;
        t.pivot(worst, aux);
        t.run();  // bounded by construction (objective <= 0)
        if (t.zval != 0) {
            res.status = LpStatus::infeasible;
            return res;
        }
        // Drive the auxiliary out of the basis if it lingers at level zero.
        for (Eigen::Index i = 0; i < t.m; ++i) {
            if (t.basis[static_cast<size_t>(i)] != aux) continue;
            Eigen::Index col = -1;
            for (Eigen::Index j = 0; j < n + m; ++j)
                if (t.body(i, j) != 0) { col = j; break; }
            if (col >= 0) {
                t.pivot(i, col);  // rhs is zero, feasibility is preserved
            } else {
                // 0 = 0 row: the constraint was redundant, drop it.
                Eigen::Index last = t.m - 1;
                if (i != last) {
                    t.body.row(i) = t.body.row(last);
                    t.rhs(i) = t.rhs(last);
                    t.basis[static_cast<size_t>(i)] = t.basis[static_cast<size_t>(last)];
                    --i;
                }
                t.m -= 1;
                t.body.conservativeResize(t.m, Eigen::NoChange);
                t.rhs.conservativeResize(t.m);
                t.basis.resize(static_cast<size_t>(t.m));
            }
        }
        t.ncols = n + m;
        t.body.conservativeResize(t.m, t.ncols);
        t.zrow.conservativeResize(t.ncols);
    }

    // Phase 2 objective expressed over the current basis.
    t.zrow.setZero();
    t.zval = 0;
    for (Eigen::Index j = 0; j < n; ++j) t.zrow(j) = c(j);
    for (Eigen::Index i = 0; i < t.m; ++i) {
        Eigen::Index bv = t.basis[static_cast<size_t>(i)];
        if (bv >= n) continue;
        Rat cb = c(bv);
        if (cb == 0) continue;
        t.zrow -= t.body.row(i).transpose() * cb;
        t.zval += t.rhs(i) * cb;
    }
    for (Eigen::Index i = 0; i < t.m; ++i) t.zrow(t.basis[static_cast<size_t>(i)]) = 0;

    if (!t.run()) {
        res.status = LpStatus::unbounded;
        return res;
    }
    res.status = LpStatus::optimal;
    res.value = t.zval;
    res.x = RatVec::Zero(n);
    for (Eigen::Index i = 0; i < t.m; ++i) {
        Eigen::Index bv = t.basis[static_cast<size_t>(i)];
        if (bv < n) res.x(bv) = t.rhs(i);
    }
    return res;
}

LpResult lp_maximize(const RatMat& A, const RatVec& b, const RatVec& c) {
    const Eigen::Index m = A.rows(), n = A.cols();
    RatMat As(m, 2 * n);
    As.block(0, 0, m, n) = A;
    As.block(0, n, m, n) = -A;
    RatVec cs(2 * n);
    cs.head(n) = c;
    cs.tail(n) = -c;
    LpResult inner = lp_maximize_nonneg(As, b, cs);
    LpResult res;
    res.status = inner.status;
    if (inner.status == LpStatus::optimal) {
        res.value = inner.value;
        res.x = inner.x.head(n) - inner.x.tail(n);
    }
    return res;
}

bool lp_feasible(const RatMat& A, const RatVec& b) {
    RatVec c = RatVec::Zero(A.cols());
    return lp_maximize(A, b, c).status == LpStatus::optimal;
}

bool in_convex_hull(const RatVec& p, const std::vector<RatVec>& points) {
    if (points.empty()) return false;
    const Eigen::Index n = p.size();
    const Eigen::Index k = static_cast<Eigen::Index>(points.size());
    // sum lambda_i points_i = p, sum lambda_i = 1, lambda >= 0, as pairs of
    // inequalities over lambda >= 0.
    RatMat A(2 * (n + 1), k);
    RatVec b(2 * (n + 1));
    for (Eigen::Index d = 0; d < n; ++d) {
        for (Eigen::Index i = 0; i < k; ++i) {
            A(2 * d, i) = points[static_cast<size_t>(i)](d);
            A(2 * d + 1, i) = -points[static_cast<size_t>(i)](d);
        }
        b(2 * d) = p(d);
        b(2 * d + 1) = -p(d);
    }
    for (Eigen::Index i = 0; i < k; ++i) {
        A(2 * n, i) = 1;
        A(2 * n + 1, i) = -1;
    }
    b(2 * n) = 1;
    b(2 * n + 1) = -1;
    RatVec c = RatVec::Zero(k);
    return lp_maximize_nonneg(A, b, c).status == LpStatus::optimal;
}

}  // namespace latslice
