#pragma once

#include <optional>
#include <vector>

#include "formspace.hpp"
#include "jets.hpp"
#include "unipoly.hpp"

namespace jetgeom {

// A projective line spanned by a base point and a second, independent
// direction vector.
struct LineSpec {
  RatVec base;
  RatVec dir;

  LineSpec(RatVec base_point, RatVec direction);
};

struct ContactResult {
  bool contained = false;
  int order = 0;  // meaningful when !contained
};

/// Largest k <= max_k such that every generator restricted to the line
/// base + t*dir vanishes to order >= k+1 in t; CONTAINED when all
/// restrictions vanish identically.
ContactResult contact_order(const VarietySpec& spec, const LineSpec& line, int max_k = 6);

// Generators of the contact ideal at level k: the nonzero forms of
// |F_2|, ..., |F_k| in the chart variables.
struct ContactIdeal {
  int k = 0;
  int nvars = 0;
  std::vector<Poly> gens;

  FormSpace graded_piece(int d) const { return ideal_degree_piece(gens, d, nvars); }
};

ContactIdeal contact_ideal(const FundForms& ff, int k);

/// True iff every generator vanishes at the direction v (v != 0).
bool direction_membership(const ContactIdeal& ci, const RatVec& v);

// Outcome of the test |F_3| subset (|F_2|) in degree 3, together with the
// witness rho solving the equivalent coefficient system
//   f^u_3 = sum_v L^u_v f^v_2,   L^u_v = sum_a rho[u][a][v] w_a.
// Written in raw partial-derivative tensors this is the cyclic-sum identity
// r^u_{abc} = S_{abc} rho^u_{av} q^v_{bc}. Both formulations are computed and
// cross-checked; the ideal formulation is authoritative.
struct FubiniReport {
  bool holds = false;
  int residual_dimension = 0;
  std::vector<RatMat> rho;  // rho[u] is n x c; meaningful when holds
};

FubiniReport fubini_test(const FundForms& ff);

// Witness for the degree-4/5 complete-intersection criterion: symmetric
// sigma[u] (c x c) solving, with rho fixed from the Fubini report,
//   f^u_4 = sum_v L^u_v f^v_3 + sum_{v,w} sigma^u_{vw} f^v_2 f^w_2
//   f^u_5 = sum_v L^u_v f^v_4 + 2 sum_{v,w} sigma^u_{vw} f^v_2 f^w_3
// (ordered sums). The normalization is fixed so that for the two-quadric
// family x0 x4 = sum x_a^2 - R x5^2, ... the solved sigma^4_{55} equals -R.
struct CIWitness {
  bool passes = false;
  std::vector<RatMat> sigma;  // sigma[u] is c x c, symmetric
};

CIWitness ci_test_F4F5(const FundForms& ff, const FubiniReport& report);

/// Re-substitutes the witnesses into the defining identities, independently of
/// the solver path.
bool verify_witnesses(const FundForms& ff, const FubiniReport& report, const CIWitness& ci);

/// Restriction of a homogeneous polynomial to a parametrized line, as a
/// univariate polynomial in t.
UniPoly restrict_to_line(const Poly& g, const RatVec& base, const RatVec& dir);

}  // namespace jetgeom
