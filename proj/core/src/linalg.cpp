#include "latslice/linalg.hpp"

#include <numeric>

namespace latslice {

RatVec to_rat_vec(const IntVec& v) {
    RatVec r(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) r(i) = Rat(v(i));
    return r;
}

RatMat to_rat_mat(const IntMat& m) {
    RatMat r(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

int rank_of(const RatMat& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::FullPivLU<RatMat> lu(m);
    return static_cast<int>(lu.rank());
}

Rat det_of(const RatMat& m) {
    if (m.rows() == 0) return Rat(1);
    Eigen::FullPivLU<RatMat> lu(m);
    return lu.determinant();
}

RatMat kernel_of(const RatMat& m) {
    if (m.rows() == 0) {
        // Everything is in the kernel.
        RatMat id = RatMat::Zero(m.cols(), m.cols());
        for (Eigen::Index i = 0; i < m.cols(); ++i) id(i, i) = 1;
        return id;
    }
    Eigen::FullPivLU<RatMat> lu(m);
    if (lu.rank() == m.cols()) return RatMat(m.cols(), 0);
    return lu.kernel();
}

std::optional<RatVec> solve_linear(const RatMat& A, const RatVec& b) {
    if (A.rows() == 0) return RatVec(A.cols());
    Eigen::FullPivLU<RatMat> lu(A);
    RatVec x = lu.solve(b);
    if (A * x == b) return x;
    return std::nullopt;
}

Rat gram_det_rows(const RatMat& basis_rows) {
    if (basis_rows.rows() == 0) return Rat(1);
    RatMat g = basis_rows * basis_rows.transpose();
    return det_of(g);
}

Int gcd_all(const IntVec& v) {
    Int g(0);
    for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd(g, v(i));
    return g;
}

IntVec primitive_integer(const RatVec& v) {
    Int l(1);
    for (Eigen::Index i = 0; i < v.size(); ++i) l = lcm(l, denominator(v(i)));
    IntVec w(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) w(i) = numerator(v(i)) * (l / denominator(v(i)));
    Int g = gcd_all(w);
    if (g == 0) throw Error("primitive_integer: zero vector");
    for (Eigen::Index i = 0; i < w.size(); ++i) w(i) /= g;
    return w;
}

std::pair<IntMat, Int> clear_denominators(const RatMat& m) {
    Int l(1);
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) l = lcm(l, denominator(m(i, j)));
    IntMat r(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            r(i, j) = numerator(m(i, j)) * (l / denominator(m(i, j)));
    return {r, l};
}

bool lex_less(const RatVec& a, const RatVec& b) {
    for (Eigen::Index i = 0; i < a.size() && i < b.size(); ++i) {
        if (a(i) != b(i)) return a(i) < b(i);
    }
    return a.size() < b.size();
}

void hermite_normal_form(const IntMat& M, IntMat& H, IntMat& U) {
    const Eigen::Index rows = M.rows(), cols = M.cols();
    H = M;
    U = IntMat::Zero(rows, rows);
    for (Eigen::Index i = 0; i < rows; ++i) U(i, i) = 1;

    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        // Euclidean elimination in column c over rows >= r.
        while (true) {
            Eigen::Index piv = -1;
            for (Eigen::Index i = r; i < rows; ++i) {
                if (H(i, c) == 0) continue;
                if (piv < 0 || abs(H(i, c)) < abs(H(piv, c))) piv = i;
            }
            if (piv < 0) break;
            if (piv != r) {
                H.row(piv).swap(H.row(r));
                U.row(piv).swap(U.row(r));
            }
            if (H(r, c) < 0) {
                H.row(r) = -H.row(r);
                U.row(r) = -U.row(r);
            }
            bool cleared = true;
            for (Eigen::Index i = r + 1; i < rows; ++i) {
                if (H(i, c) == 0) continue;
                Int q = H(i, c) / H(r, c);  // truncated; loop handles remainders
                if (q != 0) {
                    H.row(i) -= H.row(r) * q;
                    U.row(i) -= U.row(r) * q;
                }
                if (H(i, c) != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (H(r, c) == 0) continue;
        // Reduce entries above the pivot into [0, pivot).
        for (Eigen::Index i = 0; i < r; ++i) {
            Int q = H(i, c) / H(r, c);
            if (H(i, c) % H(r, c) < 0) q -= 1;
            if (q != 0) {
                H.row(i) -= H.row(r) * q;
                U.row(i) -= U.row(r) * q;
            }
        }
        ++r;
    }
}

IntMat integer_kernel(const IntMat& M) {
    // Rows u of U with u * M = 0 form a saturated basis of the kernel lattice.
    IntMat H, U;
    hermite_normal_form(M, H, U);
    std::vector<Eigen::Index> zero_rows;
    for (Eigen::Index i = 0; i < H.rows(); ++i) {
        bool zero = true;
        for (Eigen::Index j = 0; j < H.cols(); ++j)
            if (H(i, j) != 0) { zero = false; break; }
        if (zero) zero_rows.push_back(i);
    }
    IntMat K(static_cast<Eigen::Index>(zero_rows.size()), M.rows());
    for (size_t t = 0; t < zero_rows.size(); ++t) K.row(static_cast<Eigen::Index>(t)) = U.row(zero_rows[t]);
    return K;
}

RatMat lattice_basis_from_generators(const RatMat& G) {
    auto [gi, scale] = clear_denominators(G);
    IntMat H, U;
    hermite_normal_form(gi, H, U);
    Eigen::Index nz = 0;
    for (Eigen::Index i = 0; i < H.rows(); ++i) {
        bool zero = true;
        for (Eigen::Index j = 0; j < H.cols(); ++j)
            if (H(i, j) != 0) { zero = false; break; }
        if (!zero) ++nz;
    }
    RatMat B(nz, G.cols());
    Eigen::Index r = 0;
    for (Eigen::Index i = 0; i < H.rows(); ++i) {
        bool zero = true;
        for (Eigen::Index j = 0; j < H.cols(); ++j)
            if (H(i, j) != 0) { zero = false; break; }
        if (zero) continue;
        for (Eigen::Index j = 0; j < G.cols(); ++j) B(r, j) = Rat(H(i, j), scale);
        ++r;
    }
    return B;
}

RatMat size_reduce_rows(RatMat b) {
    const Eigen::Index d = b.rows();
    if (d <= 1) return b;
    // Exact Gram-Schmidt of the prefix rows; the GS vectors of rows < i do
    // not move when row i is reduced against them.
    RatMat gs = b;
    std::vector<Rat> norms(static_cast<size_t>(d));
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index l = 0; l < i; ++l) {
            if (norms[static_cast<size_t>(l)] == 0) continue;
            Rat mu = gs.row(i).dot(gs.row(l)) / norms[static_cast<size_t>(l)];
            gs.row(i) -= gs.row(l) * mu;
        }
        norms[static_cast<size_t>(i)] = gs.row(i).dot(gs.row(i));
    }
    for (Eigen::Index i = 1; i < d; ++i) {
        for (Eigen::Index j = i - 1; j >= 0; --j) {
            if (norms[static_cast<size_t>(j)] == 0) continue;
            Rat mu = b.row(i).dot(gs.row(j)) / norms[static_cast<size_t>(j)];
            Int q = floor_rat(mu + Rat(1, 2));
            if (q != 0) b.row(i) -= b.row(j) * Rat(q);
        }
    }
    return b;
}

}  // namespace latslice
