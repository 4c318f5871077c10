#pragma once

#include "latslice/lattice.hpp"

#include <map>

namespace latslice {

struct MinimaProfile {
    std::vector<Rat> values;      // ascending
    std::vector<RatVec> witnesses;  // independent lattice vectors, witness_i in values_i * K
};

struct WidthResult {
    Rat width;
    PrimitiveDirection direction;  // primitive in the dual lattice
};

struct LayerDecomposition {
    PrimitiveDirection direction;  // primitive in the dual lattice
    Int beta_min, beta_max;
    std::vector<std::pair<Int, long>> counts;  // per level, beta ascending
    Int best_beta;
    long best_count = 0;
    Rat width_along;  // spread of K along the direction
};

// Exact |K ∩ Λ|.  Internally maps Λ to Z^d by basis change and runs a
// recursive coordinate-interval enumeration with exact rational bounds.
long count_lattice_points(const RationalPolytope& K, const LatticeDescription& L);

// The listing variant; ambient points, deterministic (lexicographic in
// lattice coordinates).
std::vector<RatVec> list_lattice_points(const RationalPolytope& K, const LatticeDescription& L);

// Minkowski gauge ||x||_K = max over facets of (normal.x)/offset, for
// full-dimensional K with the origin interior.
Rat gauge_norm(const RationalPolytope& K, const RatVec& x);

// Successive minima with witness vectors; K origin-symmetric, full
// dimensional inside span Λ.  Enumerates K-gauge balls up to the certified
// bound max_i ||b_i||_K over the (size-reduced) basis, which contains
// witnesses of every minimum.
MinimaProfile successive_minima(const RationalPolytope& K, const LatticeDescription& L);

// Exact lattice width and a minimizing primitive dual direction; the
// candidate region is truncated by the best coordinate width, then the
// winning spread is cross-checked against the dual gauge route.
WidthResult lattice_width(const RationalPolytope& K, const LatticeDescription& L);

// Per-level counts of K ∩ Λ along a primitive dual direction.  Ties for the
// fullest layer break toward small |beta|, then small beta.
LayerDecomposition layer_decomposition(const RationalPolytope& K, const LatticeDescription& L,
                                       const PrimitiveDirection& dual_dir);

// dim(span of K ∩ Λ differences): -1 when empty, else affine dimension.
int lattice_point_dim(const RationalPolytope& K, const LatticeDescription& L);

}  // namespace latslice
