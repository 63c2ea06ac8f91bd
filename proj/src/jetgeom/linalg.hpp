#pragma once

#include <optional>
#include <vector>

#include "rational.hpp"

namespace jetgeom {

// Exact dense linear algebra over the rationals. Elimination pivots are
// deterministic: columns are scanned left to right and the first row with a
// nonzero entry is used, so every reduced form is reproducible bit for bit.

RatMat mat_zero(int rows, int cols);
RatMat mat_identity(int n);
RatMat mat_transpose(const RatMat& m);
RatMat mat_mul(const RatMat& a, const RatMat& b);
RatVec mat_vec(const RatMat& a, const RatVec& v);
bool mat_is_symmetric(const RatMat& m);

/// In-place reduced row echelon form; returns the pivot columns.
std::vector<int> rref(RatMat& m);

int rank(RatMat m);

Rat det(RatMat m);

std::optional<RatMat> inverse(const RatMat& m);

/// Solve A x = b. Returns the solution with all free variables set to zero
/// (minimal support under the deterministic pivoting), or nullopt if
/// inconsistent.
std::optional<RatVec> solve(const RatMat& a, const RatVec& b);

/// Basis of the null space of A, one vector per free column, in column order.
std::vector<RatVec> nullspace(const RatMat& a);

}  // namespace jetgeom
