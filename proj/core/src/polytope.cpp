#include "latslice/polytope.hpp"

#include "latslice/lp.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace latslice {

namespace {

std::string point_key(const RatVec& v) {
    std::ostringstream os;
    for (Eigen::Index i = 0; i < v.size(); ++i) os << v(i) << ";";
    return os.str();
}

std::string facet_key(const Facet& f) {
    std::ostringstream os;
    for (Eigen::Index i = 0; i < f.normal.size(); ++i) os << f.normal(i) << ";";
    os << "|" << f.offset;
    return os.str();
}

bool facet_less(const Facet& a, const Facet& b) {
    for (Eigen::Index i = 0; i < a.normal.size(); ++i) {
        if (a.normal(i) != b.normal(i)) return a.normal(i) < b.normal(i);
    }
    return a.offset < b.offset;
}

// All size-k index subsets of [0, n), visited in lexicographic order.
template <typename F>
void for_each_subset(int n, int k, F&& fn) {
    if (k < 0 || k > n) return;
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
}

// Facets of a full-dimensional point configuration in R^d whose points are
// all vertices.  Brute force over d-subsets; fine inside the design envelope
// (d <= 6, small vertex counts).
std::vector<Facet> facets_of_full_dim(int d, const std::vector<RatVec>& verts) {
    std::vector<Facet> out;
    if (d == 0) return out;
    const int nv = static_cast<int>(verts.size());
    std::set<std::string> seen;
    if (d == 1) {
        // Interval: two facets from min and max.
        Rat lo = verts.front()(0), hi = verts.front()(0);
        for (const auto& v : verts) {
            lo = std::min(lo, v(0));
            hi = std::max(hi, v(0));
        }
        Facet f1, f2;
        f1.normal = IntVec::Constant(1, Int(1));
        f1.offset = hi;
        f2.normal = IntVec::Constant(1, Int(-1));
        f2.offset = -lo;
        out = {f1, f2};
        std::sort(out.begin(), out.end(), facet_less);
        return out;
    }
    for_each_subset(nv, d, [&](const std::vector<int>& idx) {
        RatMat M(d - 1, d);
        for (int i = 1; i < d; ++i)
            M.row(i - 1) = (verts[static_cast<size_t>(idx[static_cast<size_t>(i)])] -
                            verts[static_cast<size_t>(idx[0])])
                               .transpose();
        RatMat ker = kernel_of(M);
        if (ker.cols() != 1) return;  // affinely dependent subset
        RatVec nrm = ker.col(0);
        IntVec a = primitive_integer(nrm);
        RatVec ar = to_rat_vec(a);
        Rat c = ar.dot(verts[static_cast<size_t>(idx[0])]);
        bool above = false, below = false;
        for (const auto& v : verts) {
            Rat s = ar.dot(v);
            if (s > c) above = true;
            if (s < c) below = true;
            if (above && below) return;
        }
        Facet f;
        if (!above) {
            f.normal = a;
            f.offset = c;
        } else {
            f.normal = -a;
            f.offset = -c;
        }
        if (seen.insert(facet_key(f)).second) out.push_back(f);
    });
    std::sort(out.begin(), out.end(), facet_less);
    return out;
}

// Vertices of {x in R^d : normals x <= offsets}; assumes boundedness.
std::vector<RatVec> vertices_of_hrep(const RatMat& normals, const RatVec& offsets) {
    const int d = static_cast<int>(normals.cols());
    const int m = static_cast<int>(normals.rows());
    std::vector<RatVec> out;
    std::set<std::string> seen;
    if (d == 0) {
        out.emplace_back(RatVec(0));
        return out;
    }
    for_each_subset(m, d, [&](const std::vector<int>& idx) {
        RatMat M(d, d);
        RatVec c(d);
        for (int i = 0; i < d; ++i) {
            M.row(i) = normals.row(idx[static_cast<size_t>(i)]);
            c(i) = offsets(idx[static_cast<size_t>(i)]);
        }
        Eigen::FullPivLU<RatMat> lu(M);
        if (lu.rank() < d) return;
        RatVec x = lu.solve(c);
        RatVec residual = normals * x - offsets;
        for (int i = 0; i < m; ++i)
            if (residual(i) > 0) return;
        if (seen.insert(point_key(x)).second) out.push_back(x);
    });
    return out;
}

// Recursive triangulation of a full-dimensional polytope in R^d given its
// vertices and facets; returns simplices as index lists into verts.
void triangulate_rec(int d, const std::vector<RatVec>& verts, const std::vector<Facet>& facets,
                     const std::vector<int>& global_index, std::vector<std::vector<int>>& out) {
    const int nv = static_cast<int>(verts.size());
    if (nv == d + 1) {
        out.push_back(global_index);
        return;
    }
    // Cone from vertex 0 over every facet that misses it.
    const RatVec& apex = verts[0];
    for (const auto& f : facets) {
        RatVec a = to_rat_vec(f.normal);
        if (a.dot(apex) == f.offset) continue;
        std::vector<int> local;
        for (int i = 0; i < nv; ++i)
            if (a.dot(verts[static_cast<size_t>(i)]) == f.offset) local.push_back(i);
        if (static_cast<int>(local.size()) < d) continue;  // not a proper facet
        if (static_cast<int>(local.size()) == d) {
            std::vector<int> simplex{global_index[0]};
            for (int i : local) simplex.push_back(global_index[static_cast<size_t>(i)]);
            out.push_back(simplex);
            continue;
        }
        // Map the facet into its own (d-1)-chart and recurse.
        std::vector<RatVec> fverts;
        fverts.reserve(local.size());
        for (int i : local) fverts.push_back(verts[static_cast<size_t>(i)]);
        RatMat C(d, d - 1);
        {
            int r = 0;
            RatMat acc(d, d - 1);
            for (size_t i = 1; i < fverts.size() && r < d - 1; ++i) {
                RatVec diff = fverts[i] - fverts[0];
                acc.col(r) = diff;
                if (rank_of(acc.leftCols(r + 1)) == r + 1) ++r;
            }
            C = acc;
        }
        RatMat pinv = (C.transpose() * C).inverse() * C.transpose();
        std::vector<RatVec> uverts;
        uverts.reserve(fverts.size());
        for (const auto& v : fverts) uverts.push_back(pinv * (v - fverts[0]));
        auto ffacets = facets_of_full_dim(d - 1, uverts);
        std::vector<int> fglobal;
        for (int i : local) fglobal.push_back(global_index[static_cast<size_t>(i)]);
        std::vector<std::vector<int>> sub;
        triangulate_rec(d - 1, uverts, ffacets, fglobal, sub);
        for (auto& s : sub) {
            s.insert(s.begin(), global_index[0]);
            out.push_back(s);
        }
    }
}

}  // namespace

bool FlatDescription::contains(const RatVec& x) const {
    RatVec rel = x - base_point;
    if (directions.cols() == 0) return rel == RatVec::Zero(rel.size());
    auto sol = solve_linear(directions, rel);
    return sol.has_value();
}

FlatDescription central_flat(const RatMat& directions) {
    FlatDescription f;
    f.base_point = RatVec::Zero(directions.rows());
    f.directions = directions;
    f.kind = FlatKind::central;
    return f;
}

FlatDescription affine_flat(const RatVec& base, const RatMat& directions) {
    FlatDescription f;
    f.base_point = base;
    f.directions = directions;
    f.kind = FlatKind::affine;
    return f;
}

FlatDescription hyperplane_flat(const RatVec& y, const Rat& beta) {
    const Eigen::Index n = y.size();
    Rat yy = y.dot(y);
    if (yy == 0) throw Error("hyperplane_flat: zero normal");
    RatVec base = y * (beta / yy);
    RatMat yt = y.transpose();
    RatMat dirs = kernel_of(yt);
    FlatDescription f;
    f.base_point = base;
    f.directions = dirs;
    f.kind = (beta == 0) ? FlatKind::central : FlatKind::affine;
    if (f.kind == FlatKind::central) f.base_point = RatVec::Zero(n);
    return f;
}

FlatDescription parallel_central_flat(const FlatDescription& A) {
    return central_flat(A.directions);
}

RationalPolytope RationalPolytope::empty_body(int ambient) {
    RationalPolytope p;
    p.ambient_dim_ = ambient;
    p.affine_dim_ = -1;
    return p;
}

RationalPolytope RationalPolytope::from_vertices(int ambient, std::vector<RatVec> points) {
    RationalPolytope p;
    p.ambient_dim_ = ambient;
    if (points.empty()) return empty_body(ambient);
    for (const auto& v : points)
        if (static_cast<int>(v.size()) != ambient) throw Error("from_vertices: dimension mismatch");

    // Dedupe, then drop points inside the hull of the others.
    std::map<std::string, RatVec> uniq;
    for (auto& v : points) uniq.emplace(point_key(v), v);
    std::vector<RatVec> pts;
    pts.reserve(uniq.size());
    for (auto& [k, v] : uniq) pts.push_back(v);
    if (pts.size() > 1) {
        std::vector<RatVec> kept;
        for (size_t i = 0; i < pts.size(); ++i) {
            std::vector<RatVec> others;
            others.reserve(pts.size() - 1);
            for (size_t j = 0; j < pts.size(); ++j)
                if (j != i) others.push_back(pts[j]);
            if (!in_convex_hull(pts[i], others)) kept.push_back(pts[i]);
        }
        pts = std::move(kept);
    }
    std::sort(pts.begin(), pts.end(), lex_less);

    // Affine dimension and chart.
    RatVec base = pts.front();
    RatMat C(ambient, 0);
    for (size_t i = 1; i < pts.size(); ++i) {
        RatMat trial(ambient, C.cols() + 1);
        trial.leftCols(C.cols()) = C;
        trial.col(C.cols()) = pts[i] - base;
        if (rank_of(trial) == static_cast<int>(trial.cols())) C = trial;
    }
    const int d = static_cast<int>(C.cols());
    p.affine_dim_ = d;
    p.vertices_ = pts;

    if (d == ambient) {
        p.chart_.base = RatVec::Zero(ambient);
        p.chart_.basis = RatMat::Zero(ambient, ambient);
        for (int i = 0; i < ambient; ++i) p.chart_.basis(i, i) = 1;
        p.chart_gram_det_ = 1;
        p.chart_vertices_ = pts;
    } else {
        p.chart_.base = base;
        p.chart_.basis = C;
        p.chart_gram_det_ = det_of(C.transpose() * C);
        RatMat pinv = (C.transpose() * C).inverse() * C.transpose();
        p.chart_vertices_.reserve(pts.size());
        for (const auto& v : pts) p.chart_vertices_.push_back(pinv * (v - base));
    }
    p.facets_ = facets_of_full_dim(d, p.chart_vertices_);
    return p;
}

RationalPolytope RationalPolytope::from_halfspaces(int ambient, const RatMat& normals,
                                                   const RatVec& offsets) {
    if (normals.rows() != offsets.size()) throw Error("from_halfspaces: shape mismatch");
    if (static_cast<int>(normals.cols()) != ambient) throw Error("from_halfspaces: dimension mismatch");
    if (!lp_feasible(normals, offsets)) throw Error("from_halfspaces: empty body");
    for (int i = 0; i < ambient; ++i) {
        RatVec c = RatVec::Zero(ambient);
        c(i) = 1;
        if (lp_maximize(normals, offsets, c).status != LpStatus::optimal ||
            lp_maximize(normals, offsets, -c).status != LpStatus::optimal)
            throw Error("from_halfspaces: unbounded H-representation");
    }
    std::vector<RatVec> verts = vertices_of_hrep(normals, offsets);
    return from_vertices(ambient, std::move(verts));
}

bool RationalPolytope::contains(const RatVec& x) const {
    if (is_empty()) return false;
    if (static_cast<int>(x.size()) != ambient_dim_) throw Error("contains: dimension mismatch");
    RatVec u;
    if (full_dimensional()) {
        u = x;
    } else {
        auto sol = solve_linear(chart_.basis, x - chart_.base);
        if (!sol) return false;
        u = *sol;
    }
    for (const auto& f : facets_) {
        if (to_rat_vec(f.normal).dot(u) > f.offset) return false;
    }
    if (affine_dim_ == 0) return u.size() == 0 || chart_vertices_.empty() || x == vertices_.front();
    return true;
}

Rat RationalPolytope::chart_volume() const {
    if (is_empty()) return Rat(0);
    const int d = affine_dim_;
    if (d == 0) return Rat(1);
    std::vector<int> idx(chart_vertices_.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::vector<std::vector<int>> simplices;
    triangulate_rec(d, chart_vertices_, facets_, idx, simplices);
    Rat total(0);
    Int dfact = factorial(static_cast<unsigned>(d));
    for (const auto& s : simplices) {
        RatMat M(d, d);
        for (int i = 0; i < d; ++i)
            M.col(i) = chart_vertices_[static_cast<size_t>(s[static_cast<size_t>(i + 1)])] -
                       chart_vertices_[static_cast<size_t>(s[0])];
        Rat dv = det_of(M);
        total += abs(dv);
    }
    return total / Rat(dfact);
}

Rat RationalPolytope::volume() const {
    if (is_empty() || affine_dim_ < ambient_dim_) return Rat(0);
    return chart_volume();
}

RatVec RationalPolytope::centroid() const {
    if (is_empty()) throw Error("centroid: empty body");
    const int d = affine_dim_;
    if (d == 0) return vertices_.front();
    std::vector<int> idx(chart_vertices_.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::vector<std::vector<int>> simplices;
    triangulate_rec(d, chart_vertices_, facets_, idx, simplices);
    Rat total(0);
    RatVec weighted = RatVec::Zero(d);
    for (const auto& s : simplices) {
        RatMat M(d, d);
        RatVec csum = RatVec::Zero(d);
        for (int i = 0; i < d; ++i)
            M.col(i) = chart_vertices_[static_cast<size_t>(s[static_cast<size_t>(i + 1)])] -
                       chart_vertices_[static_cast<size_t>(s[0])];
        for (int i = 0; i <= d; ++i) csum += chart_vertices_[static_cast<size_t>(s[static_cast<size_t>(i)])];
        Rat vol = abs(det_of(M));
        if (vol == 0) continue;
        total += vol;
        weighted += csum * (vol / Rat(d + 1));
    }
    if (total == 0) throw Error("centroid: degenerate triangulation");
    RatVec u = weighted / total;
    return chart_.to_ambient(u);
}

bool RationalPolytope::origin_symmetric() const {
    if (is_empty()) return false;
    std::set<std::string> keys;
    for (const auto& v : vertices_) keys.insert(point_key(v));
    for (const auto& v : vertices_) {
        RatVec neg = -v;
        if (!keys.count(point_key(neg))) return false;
    }
    return true;
}

bool RationalPolytope::origin_interior() const {
    if (is_empty()) return false;
    RatVec zero = RatVec::Zero(ambient_dim_);
    RatVec u;
    if (full_dimensional()) {
        u = zero;
    } else {
        auto sol = solve_linear(chart_.basis, zero - chart_.base);
        if (!sol) return false;
        u = *sol;
    }
    for (const auto& f : facets_)
        if (to_rat_vec(f.normal).dot(u) >= f.offset) return false;
    return affine_dim_ > 0 || contains(zero);
}

RatVec RationalPolytope::support_point(const RatVec& direction) const {
    if (is_empty()) throw Error("support_point: empty body");
    size_t best = 0;
    Rat bv = direction.dot(vertices_[0]);
    for (size_t i = 1; i < vertices_.size(); ++i) {
        Rat s = direction.dot(vertices_[i]);
        if (s > bv) {
            bv = s;
            best = i;
        }
    }
    return vertices_[best];
}

Rat RationalPolytope::support_value(const RatVec& direction) const {
    return direction.dot(support_point(direction));
}

EmbeddedBody section_with_flat(const RationalPolytope& K, const FlatDescription& F) {
    const int n = K.ambient_dim();
    const int k = F.dim();
    if (F.ambient_dim() != n) throw Error("section_with_flat: dimension mismatch");
    EmbeddedBody out;
    out.embedding.base = F.base_point;
    out.embedding.basis = F.directions;
    if (K.is_empty()) {
        out.body = RationalPolytope::empty_body(k);
        return out;
    }

    // Constraints on u with x = F.base + F.dirs u required to lie in K.
    std::vector<RatVec> rows;
    std::vector<Rat> rhs;
    const AffineChart& ch = K.chart();
    RatMat pinv;
    if (K.full_dimensional()) {
        pinv = RatMat::Zero(n, n);
        for (int i = 0; i < n; ++i) pinv(i, i) = 1;
    } else {
        pinv = (ch.basis.transpose() * ch.basis).inverse() * ch.basis.transpose();
        RatMat N = kernel_of(ch.basis.transpose());  // columns z with z^T C = 0
        for (Eigen::Index j = 0; j < N.cols(); ++j) {
            RatVec z = N.col(j);
            RatVec coef = F.directions.transpose() * z;
            Rat c0 = z.dot(F.base_point - ch.base);
            rows.push_back(coef);
            rhs.push_back(-c0);
            rows.push_back(-coef);
            rhs.push_back(c0);
        }
    }
    RatMat W = pinv * F.directions;                  // u -> chart coords, linear part
    RatVec w0 = pinv * (F.base_point - ch.base);      // constant part
    for (const auto& f : K.facets()) {
        RatVec a = to_rat_vec(f.normal);
        rows.push_back(W.transpose() * a);
        rhs.push_back(f.offset - a.dot(w0));
    }

    RatMat A(static_cast<Eigen::Index>(rows.size()), k);
    RatVec b(static_cast<Eigen::Index>(rows.size()));
    for (size_t i = 0; i < rows.size(); ++i) {
        A.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
        b(static_cast<Eigen::Index>(i)) = rhs[i];
    }
    if (!lp_feasible(A, b)) {
        out.body = RationalPolytope::empty_body(k);
        return out;
    }
    std::vector<RatVec> verts = vertices_of_hrep(A, b);
    out.body = RationalPolytope::from_vertices(k, std::move(verts));
    return out;
}

RationalPolytope difference_body(const RationalPolytope& K) {
    if (K.is_empty()) throw Error("difference_body: empty body");
    if (K.origin_symmetric()) return scale_body(K, Rat(2));
    const auto& vs = K.vertices();
    std::vector<RatVec> diffs;
    diffs.reserve(vs.size() * vs.size());
    for (const auto& a : vs)
        for (const auto& b : vs) diffs.push_back(a - b);
    return RationalPolytope::from_vertices(K.ambient_dim(), std::move(diffs));
}

RationalPolytope polar_body(const RationalPolytope& K) {
    if (!K.full_dimensional() || !K.origin_interior())
        throw Error("polar_body: origin must be interior (polar would be unbounded)");
    const int n = K.ambient_dim();
    const auto& vs = K.vertices();
    RatMat A(static_cast<Eigen::Index>(vs.size()), n);
    RatVec b = RatVec::Constant(static_cast<Eigen::Index>(vs.size()), Rat(1));
    for (size_t i = 0; i < vs.size(); ++i) A.row(static_cast<Eigen::Index>(i)) = vs[i].transpose();
    return RationalPolytope::from_halfspaces(n, A, b);
}

RationalPolytope scale_body(const RationalPolytope& K, const Rat& factor) {
    if (K.is_empty()) return K;
    if (factor == 0) throw Error("scale_body: zero factor");
    std::vector<RatVec> verts;
    verts.reserve(K.vertices().size());
    for (const auto& v : K.vertices()) verts.push_back(v * factor);
    return RationalPolytope::from_vertices(K.ambient_dim(), std::move(verts));
}

RationalPolytope translate_body(const RationalPolytope& K, const RatVec& t) {
    if (K.is_empty()) return K;
    std::vector<RatVec> verts;
    verts.reserve(K.vertices().size());
    for (const auto& v : K.vertices()) verts.push_back(v + t);
    return RationalPolytope::from_vertices(K.ambient_dim(), std::move(verts));
}

RationalPolytope transform_body(const RationalPolytope& K, const RatMat& T) {
    if (K.is_empty()) return K;
    if (det_of(T) == 0) throw Error("transform_body: singular transform");
    std::vector<RatVec> verts;
    verts.reserve(K.vertices().size());
    for (const auto& v : K.vertices()) verts.push_back(T * v);
    return RationalPolytope::from_vertices(static_cast<int>(T.rows()), std::move(verts));
}

}  // namespace latslice
