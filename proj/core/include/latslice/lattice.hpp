#pragma once

#include "latslice/polytope.hpp"

namespace latslice {

// A (possibly lower-dimensional) rational lattice; basis vectors are the
// rows of `basis`.  gram_determinant = det(B B^T) is the squared covolume,
// kept exact so no square root ever appears in an identity.
struct LatticeDescription {
    int ambient = 0;
    RatMat basis;  // d x n rows
    Rat gram_determinant = 1;

    static LatticeDescription integer_lattice(int n);
    static LatticeDescription from_basis_rows(int ambient, const RatMat& rows);

    int dim() const { return static_cast<int>(basis.rows()); }
    bool is_trivial() const { return basis.rows() == 0; }

    // x = coords^T * basis; throws when x is outside the span.
    RatVec coords_of(const RatVec& x) const;
    RatVec from_coords(const RatVec& lambda) const;
    bool spans(const RatVec& x) const;
    bool contains(const RatVec& x) const;  // member of the lattice
};

// A lattice vector generating span{vector} ∩ Λ.  coords are its (integer,
// gcd 1) coordinates in the lattice basis.
struct PrimitiveDirection {
    RatVec vector;  // ambient
    IntVec coords;  // in the lattice basis
};

// Basis of {y in span Λ : x.y in Z for all x in Λ}; squared covolumes
// multiply to 1.
LatticeDescription dual_lattice(const LatticeDescription& L);

// Λ ∩ span(F) for a central flat F; the trivial lattice when only 0.
LatticeDescription intersection_lattice(const LatticeDescription& L, const FlatDescription& F);

// Orthogonal projection Λ|span(F) for a central flat F.
LatticeDescription projection_lattice(const LatticeDescription& L, const FlatDescription& F);

// Generator of span{v} ∩ Λ (choosing the orientation of v).
PrimitiveDirection primitive_along(const RatVec& v, const LatticeDescription& L);

// The sublattice {x in Λ : y.x = 0} of Λ for rational y.
LatticeDescription lattice_in_hyperplane(const LatticeDescription& L, const RatVec& y);

// Some lattice point x with y.x = beta, for primitive y in the dual of Λ.
RatVec lattice_point_on_hyperplane(const LatticeDescription& L, const PrimitiveDirection& dual_dir,
                                   const Int& beta);

}  // namespace latslice
