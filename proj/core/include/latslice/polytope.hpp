#pragma once

#include "latslice/linalg.hpp"

#include <string>
#include <vector>

namespace latslice {

// One inequality normal.x <= offset with integer primitive normal.
struct Facet {
    IntVec normal;
    Rat offset;
};

// x = base + basis * u; columns of basis are independent directions.
struct AffineChart {
    RatVec base;
    RatMat basis;

    RatVec to_ambient(const RatVec& u) const { return base + basis * u; }
    int ambient_dim() const { return static_cast<int>(base.size()); }
    int dim() const { return static_cast<int>(basis.cols()); }
};

enum class FlatKind { affine, central };

// A k-dimensional rational flat.  Central flats contain the origin and are
// stored with base_point = 0.
struct FlatDescription {
    RatVec base_point;
    RatMat directions;  // n x k, columns independent
    FlatKind kind = FlatKind::affine;

    int ambient_dim() const { return static_cast<int>(base_point.size()); }
    int dim() const { return static_cast<int>(directions.cols()); }
    bool contains(const RatVec& x) const;
};

FlatDescription central_flat(const RatMat& directions);
FlatDescription affine_flat(const RatVec& base, const RatMat& directions);
// {x : y.x = beta} as a flat (base point solved rationally).
FlatDescription hyperplane_flat(const RatVec& y, const Rat& beta);
// The parallel flat through the origin (A - A).
FlatDescription parallel_central_flat(const FlatDescription& A);

// Exact convex polytope with consistent V- and H-representations.  Bodies of
// affine dimension d < ambient carry a chart onto R^d; the H-representation
// and the triangulation-based measures live in chart coordinates.  The empty
// set is a first-class value (affine_dim = -1).
class RationalPolytope {
  public:
    RationalPolytope() = default;

    static RationalPolytope from_vertices(int ambient, std::vector<RatVec> points);
    static RationalPolytope from_halfspaces(int ambient, const RatMat& normals, const RatVec& offsets);
    static RationalPolytope empty_body(int ambient);

    bool is_empty() const { return affine_dim_ < 0; }
    int ambient_dim() const { return ambient_dim_; }
    int affine_dim() const { return affine_dim_; }
    bool full_dimensional() const { return affine_dim_ == ambient_dim_; }

    // Ambient vertices, lexicographically sorted.
    const std::vector<RatVec>& vertices() const { return vertices_; }
    // H-representation in chart coordinates (ambient coordinates iff
    // full-dimensional).
    const std::vector<Facet>& facets() const { return facets_; }
    const std::vector<RatVec>& chart_vertices() const { return chart_vertices_; }
    const AffineChart& chart() const { return chart_; }
    // det(C^T C) for the chart directions; 1 when full-dimensional.
    const Rat& chart_gram_det() const { return chart_gram_det_; }

    bool contains(const RatVec& ambient_point) const;

    // Ambient Lebesgue measure; 0 when affine_dim < ambient_dim.
    Rat volume() const;
    // d-dimensional measure in chart coordinates (1 for a point).
    Rat chart_volume() const;
    RatVec centroid() const;

    bool origin_symmetric() const;
    bool origin_interior() const;

    RatVec support_point(const RatVec& direction) const;  // argmax direction.x over vertices
    Rat support_value(const RatVec& direction) const;

  private:
    int ambient_dim_ = 0;
    int affine_dim_ = -1;
    std::vector<RatVec> vertices_;
    std::vector<Facet> facets_;
    std::vector<RatVec> chart_vertices_;
    AffineChart chart_;
    Rat chart_gram_det_ = 1;

    friend RationalPolytope make_polytope_from_vertex_hull(int, std::vector<RatVec>);
};

// K expressed in a flat's coordinates together with the map back to the
// original ambient space.
struct EmbeddedBody {
    RationalPolytope body;  // lives in R^k (the flat's coordinates)
    AffineChart embedding;  // k -> original ambient

    RatVec to_ambient(const RatVec& u) const { return embedding.to_ambient(u); }
};

// K ∩ F in F's coordinates; empty body marker when the intersection is empty.
EmbeddedBody section_with_flat(const RationalPolytope& K, const FlatDescription& F);

// K - K = hull{v_i - v_j}; origin-symmetric.
RationalPolytope difference_body(const RationalPolytope& K);

// {y : x.y <= 1 for all x in K}; requires the origin in the interior.
RationalPolytope polar_body(const RationalPolytope& K);

RationalPolytope scale_body(const RationalPolytope& K, const Rat& factor);
RationalPolytope translate_body(const RationalPolytope& K, const RatVec& t);
// x -> T x with invertible rational T.
RationalPolytope transform_body(const RationalPolytope& K, const RatMat& T);

}  // namespace latslice
