#pragma once

#include "latslice/linalg.hpp"

namespace latslice {

enum class LpStatus { optimal, unbounded, infeasible };

struct LpResult {
    LpStatus status = LpStatus::infeasible;
    Rat value;
    RatVec x;
};

// maximize c.x subject to A x <= b, x free.  Exact rational simplex
// (Bland's rule, guaranteed termination).
LpResult lp_maximize(const RatMat& A, const RatVec& b, const RatVec& c);

// maximize c.x subject to A x <= b, x >= 0.
LpResult lp_maximize_nonneg(const RatMat& A, const RatVec& b, const RatVec& c);

// Does {x free : A x <= b} contain a point?
bool lp_feasible(const RatMat& A, const RatVec& b);

// Is p a convex combination of the given points?  Exact.
bool in_convex_hull(const RatVec& p, const std::vector<RatVec>& points);

}  // namespace latslice
