#include "latslice/lattice.hpp"

namespace latslice {

namespace {

// g = gcd(a, b) together with s, t such that s*a + t*b = g.
void ext_gcd(const Int& a, const Int& b, Int& g, Int& s, Int& t) {
    Int old_r = a, r = b;
    Int old_s(1), s_cur(0);
    Int old_t(0), t_cur(1);
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s_cur;
        old_s = s_cur;
        s_cur = tmp;
        tmp = old_t - q * t_cur;
        old_t = t_cur;
        t_cur = tmp;
    }
    g = old_r;
    s = old_s;
    t = old_t;
    if (g < 0) {
        g = -g;
        s = -s;
        t = -t;
    }
}

LatticeDescription finish_lattice(int ambient, RatMat rows) {
    LatticeDescription out;
    out.ambient = ambient;
    if (rows.rows() > 0) rows = size_reduce_rows(std::move(rows));
    out.basis = std::move(rows);
    out.gram_determinant = gram_det_rows(out.basis);
    return out;
}

}  // namespace

LatticeDescription LatticeDescription::integer_lattice(int n) {
    LatticeDescription l;
    l.ambient = n;
    l.basis = RatMat::Zero(n, n);
    for (int i = 0; i < n; ++i) l.basis(i, i) = 1;
    l.gram_determinant = 1;
    return l;
}

LatticeDescription LatticeDescription::from_basis_rows(int ambient, const RatMat& rows) {
    if (static_cast<int>(rows.cols()) != ambient) throw Error("lattice basis: dimension mismatch");
    if (rank_of(rows) != static_cast<int>(rows.rows())) throw Error("lattice basis: dependent rows");
    LatticeDescription l;
    l.ambient = ambient;
    l.basis = rows;
    l.gram_determinant = gram_det_rows(rows);
    return l;
}

RatVec LatticeDescription::coords_of(const RatVec& x) const {
    auto sol = solve_linear(basis.transpose(), x);
    if (!sol) throw Error("coords_of: point outside the lattice span");
    return *sol;
}

RatVec LatticeDescription::from_coords(const RatVec& lambda) const {
    return basis.transpose() * lambda;
}

bool LatticeDescription::spans(const RatVec& x) const {
    return solve_linear(basis.transpose(), x).has_value();
}

bool LatticeDescription::contains(const RatVec& x) const {
    auto sol = solve_linear(basis.transpose(), x);
    if (!sol) return false;
    for (Eigen::Index i = 0; i < sol->size(); ++i)
        if (denominator((*sol)(i)) != 1) return false;
    return true;
}

LatticeDescription dual_lattice(const LatticeDescription& L) {
    if (L.is_trivial()) return L;
    RatMat gram = L.basis * L.basis.transpose();
    RatMat dual = gram.inverse() * L.basis;
    LatticeDescription out = finish_lattice(L.ambient, dual);
    return out;
}

LatticeDescription intersection_lattice(const LatticeDescription& L, const FlatDescription& F) {
    if (F.kind != FlatKind::central) throw Error("intersection_lattice: flat must be central");
    const int d = L.dim();
    if (d == 0 || F.dim() == 0) return finish_lattice(L.ambient, RatMat(0, L.ambient));
    // x = lambda^T B lies in span(F) iff N x = 0 for N spanning span(F)^perp.
    RatMat Nt = kernel_of(F.directions.transpose());  // columns span the complement
    if (Nt.cols() == 0) return L;                     // flat spans everything
    RatMat M = Nt.transpose() * L.basis.transpose();  // (r x d), M lambda = 0
    auto [Mi, scale] = clear_denominators(M);
    (void)scale;
    IntMat ker = integer_kernel(Mi);  // rows in Z^d
    if (ker.rows() == 0) return finish_lattice(L.ambient, RatMat(0, L.ambient));
    RatMat rows = to_rat_mat(ker) * L.basis;
    return finish_lattice(L.ambient, rows);
}

LatticeDescription projection_lattice(const LatticeDescription& L, const FlatDescription& F) {
    if (F.kind != FlatKind::central) throw Error("projection_lattice: flat must be central");
    if (F.dim() == 0 || L.dim() == 0) return finish_lattice(L.ambient, RatMat(0, L.ambient));
    const RatMat& D = F.directions;
    RatMat proj = D * (D.transpose() * D).inverse() * D.transpose();
    RatMat gens = L.basis * proj;  // rows project to span(F)
    RatMat rows = lattice_basis_from_generators(gens);
    return finish_lattice(L.ambient, rows);
}

PrimitiveDirection primitive_along(const RatVec& v, const LatticeDescription& L) {
    if (v == RatVec::Zero(v.size())) throw Error("primitive_along: zero vector");
    RatVec c;
    try {
        c = L.coords_of(v);
    } catch (const Error&) {
        throw Error("primitive_along: direction not in the lattice span");
    }
    Int l(1);
    for (Eigen::Index i = 0; i < c.size(); ++i) l = lcm(l, denominator(c(i)));
    IntVec z(c.size());
    for (Eigen::Index i = 0; i < c.size(); ++i) z(i) = numerator(c(i)) * (l / denominator(c(i)));
    Int g = gcd_all(z);
    if (g == 0) throw Error("primitive_along: zero vector");
    PrimitiveDirection out;
    out.coords = IntVec(z.size());
    for (Eigen::Index i = 0; i < z.size(); ++i) out.coords(i) = z(i) / g;
    out.vector = L.from_coords(to_rat_vec(out.coords));
    return out;
}

LatticeDescription lattice_in_hyperplane(const LatticeDescription& L, const RatVec& y) {
    RatMat M = (L.basis * y).transpose();  // 1 x d
    auto [Mi, scale] = clear_denominators(M);
    (void)scale;
    IntMat ker = integer_kernel(Mi);
    if (ker.rows() == 0) return LatticeDescription{L.ambient, RatMat(0, L.ambient), Rat(1)};
    RatMat rows = to_rat_mat(ker) * L.basis;
    return finish_lattice(L.ambient, rows);
}

RatVec lattice_point_on_hyperplane(const LatticeDescription& L, const PrimitiveDirection& dual_dir,
                                   const Int& beta) {
    // w = B y is integral with gcd 1 for primitive dual y; solve lambda.w = beta.
    RatVec w_rat = L.basis * dual_dir.vector;
    IntVec w(w_rat.size());
    for (Eigen::Index i = 0; i < w_rat.size(); ++i) {
        if (denominator(w_rat(i)) != 1)
            throw Error("lattice_point_on_hyperplane: direction is not in the dual lattice");
        w(i) = numerator(w_rat(i));
    }
    Int g(0);
    IntVec lam = IntVec::Zero(w.size());
    for (Eigen::Index i = 0; i < w.size(); ++i) {
        if (w(i) == 0) continue;
        if (g == 0) {
            g = abs(w(i));
            lam.setZero();
            lam(i) = w(i) > 0 ? 1 : -1;
            continue;
        }
        Int gg, s, t;
        ext_gcd(g, w(i), gg, s, t);
        for (Eigen::Index j = 0; j < lam.size(); ++j) lam(j) *= s;
        lam(i) += t;
        g = gg;
    }
    if (g == 0 || beta % g != 0)
        throw Error("lattice_point_on_hyperplane: no lattice point at this level");
    Int f = beta / g;
    RatVec lam_r(lam.size());
    for (Eigen::Index i = 0; i < lam.size(); ++i) lam_r(i) = Rat(lam(i) * f);
    return L.from_coords(lam_r);
}

}  // namespace latslice
