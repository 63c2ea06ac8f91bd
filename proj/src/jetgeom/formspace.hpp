#pragma once

#include <vector>

#include "poly.hpp"

namespace jetgeom {

// A linear subspace of the homogeneous forms of one degree, kept as a
// canonical (reduced row echelon) basis over the grevlex-descending monomial
// coordinates. Two FormSpaces span the same subspace iff their bases are
// structurally equal.
class FormSpace {
 public:
  FormSpace(int nvars, int degree) : nvars_(nvars), degree_(degree) {}

  /// Builds the span of the given forms. Zero polynomials are dropped; a
  /// nonzero form of the wrong degree or variable count is an input error.
  FormSpace(int nvars, int degree, const std::vector<Poly>& forms);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Poly>& basis() const { return basis_; }

  bool contains(const Poly& form) const;
  bool contains(const FormSpace& inner) const;
  FormSpace join(const FormSpace& other) const;

  bool operator==(const FormSpace& o) const {
    return nvars_ == o.nvars_ && degree_ == o.degree_ && basis_ == o.basis_;
  }

 private:
  int nvars_;
  int degree_;
  std::vector<Poly> basis_;
};

/// Degree-d graded piece of the ideal generated by homogeneous forms:
/// every generator of degree e <= d is multiplied by all monomials of degree
/// d - e and the products are row reduced. Generators of degree > d
/// contribute nothing.
FormSpace ideal_degree_piece(const std::vector<Poly>& generators, int d, int nvars);

/// True iff span(inner) is a subspace of span(outer).
bool subspace_contains(const FormSpace& outer, const FormSpace& inner);

}  // namespace jetgeom
