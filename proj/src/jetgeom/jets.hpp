#pragma once

#include <optional>
#include <string>
#include <vector>

#include "formspace.hpp"
#include "poly.hpp"

namespace jetgeom {

// A projective variety given by homogeneous generators in N+1 variables.
struct VarietySpec {
  int ambient_dim = 0;  // N, the dimension of the ambient projective space
  std::vector<Poly> gens;
  std::string label;

  VarietySpec() = default;
  VarietySpec(int ambient, std::vector<Poly> generators, std::string lbl = "");
  int nvars() const { return ambient_dim + 1; }
};

// Affine frame attached to a chart: the base point together with ambient
// vectors spanning the affine tangent space and a normal complement. All
// vectors have N+1 entries.
struct Frame {
  int patch = 0;  // dehomogenization index
  RatVec base;
  std::vector<RatVec> tangent;  // n vectors
  std::vector<RatVec> normal;   // c vectors
};

// Adapted local chart z^u = f^u(w): each jet has terms of degree 2..order
// only, in the n tangent variables w.
struct Chart {
  int n = 0;
  int c = 0;
  int order = 0;
  std::vector<Poly> jets;
  Frame frame;

  int ambient_dim() const { return static_cast<int>(frame.base.size()) - 1; }
  /// Lift of a chart tangent direction to an ambient vector.
  RatVec direction_to_ambient(const RatVec& v) const;
};

/// Chart from explicit graph data with the identity frame. Jets with
/// constant or linear terms are rejected.
Chart chart_from_graph(const std::vector<Poly>& jets, int order);

/// Chart at a smooth point of an implicitly given variety, by degree-by-degree
/// solution of the dehomogenized equations. The computed jets are verified by
/// back substitution: every generator must vanish to order > `order`, else the
/// point is reported singular.
Chart chart_from_implicit(const VarietySpec& spec, const RatVec& point, int order);

/// Chart at the image of the parameter origin for a polynomial projective
/// parametrization psi : A^n -> P^N (given as N+1 polynomials in n
/// parameters). Requires an immersion at the origin.
Chart chart_from_parametrization(const std::vector<Poly>& psi, int order);

// Coefficient tensors of the fundamental forms, kept as the homogeneous jet
// components f^u_k for k = 2..K. The stored partial-derivative tensor entry
// for a multi-index beta is coeff(f^u_k, beta) * beta!, and the degree-k form
// attached to u (sum of tensor entries times w_{i_1}...w_{i_k} over ordered
// tuples) equals k! * f^u_k. Form *spaces* are spanned the same way by either
// scaling.
struct FundForms {
  int n = 0;
  int c = 0;
  int K = 0;
  std::vector<std::vector<Poly>> parts;  // parts[k-2][u] = f^u_k

  const Poly& jet_part(int k, int u) const;
  /// The degree-k polynomial of raw partial-derivative tensors, k! * f^u_k.
  Poly form(int k, int u) const;
  /// Hessian of jet u at 0 (so the graph z = w1^2 + ... gives 2 * Id).
  RatMat q_matrix(int u) const;
  /// |F_k| as a subspace of the degree-k forms.
  FormSpace form_space(int k) const;
};

FundForms fundamental_forms(const Chart& chart, int K);

/// Samples a few deterministic nearby chart points and reports a warning when
/// dim |F_2| or dim |F_3| differs there, suggesting the base point is special.
/// Heuristic by nature: recentering a truncated jet only approximates the
/// chart of the variety at the sampled point.
std::optional<std::string> generality_warning(const Chart& chart);

}  // namespace jetgeom
