#pragma once

#include <string>
#include <vector>

#include "jets.hpp"
#include "unipoly.hpp"

namespace jetgeom {

// The span of the second fundamental form as a space of quadrics, carried by
// at most two symmetric n x n matrices.
struct QuadricPencil {
  int n = 0;
  RatMat A, B;
  int span_dim = 0;
};

/// Pencil from symmetric matrices (validates symmetry, computes the span).
QuadricPencil make_pencil(const RatMat& a, const RatMat& b);

QuadricPencil pencil_extract(const FundForms& ff);

// Exact simultaneous diagonalization of the pair. transform P satisfies
//   P^T M P = diag(gram),   P^T N P = diag(gram * lambda)
// where (M, N) = (A, B) when A is invertible, else the first invertible
// member and its canonical complement. Over the rationals the Gram entries
// cannot in general be scaled to 1 (that needs square roots), so the diagonal
// scales are reported instead of being normalized away.
struct PencilNormalization {
  std::vector<Rat> lambda;  // ascending
  RatMat transform;         // columns are the basis vectors
  RatVec gram;
};

PencilNormalization pencil_normalize(const QuadricPencil& p);

enum class PencilTag {
  FourDistinct,
  TwoDouble,
  DoublePlusTwo,
  Quadruple,
  TriplePlusOne,
  DegenerateSeg,
  DegenerateSquares,
  SingleRankGe2,
  SingleRank1,
  Zero,
  Unrecognized,
};

const char* pencil_tag_name(PencilTag tag);

struct PencilClass {
  PencilTag tag = PencilTag::Unrecognized;
  std::vector<int> partition;  // multiplicity partition of 4, descending; n = 3 pencils only
  bool degenerate_dual = false;
};

/// Intersection multiplicities of the two conics of a pencil in three
/// variables with finite base locus: a deterministic shear, elimination by
/// resultant, and square-free decomposition of the resulting binary quartic.
/// Cluster multiplicities are returned descending and always sum to 4.
std::vector<int> base_locus_multiplicities(const QuadricPencil& p);

PencilClass pencil_classify(const QuadricPencil& p);

/// Coefficients c_0..c_n of det(sA + tB) = sum c_i s^(n-i) t^i.
std::vector<Rat> pencil_det_form(const QuadricPencil& p);

}  // namespace jetgeom
