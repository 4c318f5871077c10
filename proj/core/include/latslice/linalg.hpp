#pragma once

#include "latslice/rational.hpp"

#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Dense>

#include <optional>
#include <vector>

namespace latslice {

using RatVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

RatVec to_rat_vec(const IntVec& v);
RatMat to_rat_mat(const IntMat& m);

int rank_of(const RatMat& m);
Rat det_of(const RatMat& m);

// Columns form a basis of ker(m); empty matrix (cols = 0) for full column rank.
RatMat kernel_of(const RatMat& m);

// Exact solve of A x = b. Returns nullopt when inconsistent; any solution
// when underdetermined.
std::optional<RatVec> solve_linear(const RatMat& A, const RatVec& b);

// det(B B^T) for a basis given as rows of B (the squared covolume).
Rat gram_det_rows(const RatMat& basis_rows);

Int gcd_all(const IntVec& v);

// Scales a nonzero rational vector to the primitive integer vector on the
// same ray (gcd of entries 1, direction preserved).
IntVec primitive_integer(const RatVec& v);

// Multiplies by the lcm of denominators; returns the integer matrix and the
// scale s such that result = s * m.
std::pair<IntMat, Int> clear_denominators(const RatMat& m);

bool lex_less(const RatVec& a, const RatVec& b);

// Row-style Hermite normal form: H = U * M with U unimodular, H in row
// echelon form with positive pivots and entries above each pivot reduced to
// [0, pivot).  Zero rows of H sink to the bottom.
void hermite_normal_form(const IntMat& M, IntMat& H, IntMat& U);

// Basis (as rows) of {x in Z^d : M x = 0} for integer M with d columns.
// The result is saturated: it spans ker(M) ∩ Z^d as a direct summand.
IntMat integer_kernel(const IntMat& M);

// Lattice basis (as rows) of the lattice generated by the rows of G
// (rational generators, possibly dependent).
RatMat lattice_basis_from_generators(const RatMat& G);

// One pass of exact size reduction on a lattice basis given as rows; keeps
// the lattice, shrinks enumeration boxes.
RatMat size_reduce_rows(RatMat basis_rows);

}  // namespace latslice
