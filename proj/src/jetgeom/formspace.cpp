#include "formspace.hpp"

#include "errors.hpp"
#include "linalg.hpp"

namespace jetgeom {

namespace {

RatVec form_coords(const Poly& p, const std::vector<Exp>& monomials) {
  RatVec v;
  v.reserve(monomials.size());
  for (const Exp& e : monomials) v.push_back(p.coeff(e));
  return v;
}

Poly from_coords(const RatVec& v, const std::vector<Exp>& monomials, int nvars) {
  Poly p(nvars);
  for (size_t i = 0; i < monomials.size(); ++i) p.add_term(monomials[i], v[i]);
  return p;
}

}  // namespace

FormSpace::FormSpace(int nvars, int degree, const std::vector<Poly>& forms)
    : nvars_(nvars), degree_(degree) {
  auto monomials = monomials_of_degree(nvars, degree);
  RatMat rows;
  for (const Poly& f : forms) {
    if (f.is_zero()) continue;
    if (f.nvars() != nvars) fail(Errc::DimensionMismatch, "form space: variable count mismatch");
    if (!f.is_homogeneous() || f.degree() != degree)
      fail(Errc::BadInput, "form space: non-homogeneous form or wrong degree");
    rows.push_back(form_coords(f, monomials));
  }
  size_t r = rref(rows).size();
  for (size_t i = 0; i < r; ++i) basis_.push_back(from_coords(rows[i], monomials, nvars));
}

bool FormSpace::contains(const Poly& form) const {
  if (form.is_zero()) return true;
  std::vector<Poly> all = basis_;
  all.push_back(form);
  return FormSpace(nvars_, degree_, all).dim() == dim();
}

bool FormSpace::contains(const FormSpace& inner) const {
  if (inner.nvars_ != nvars_ || inner.degree_ != degree_)
    fail(Errc::DimensionMismatch, "form space comparison: degree or variable mismatch");
  std::vector<Poly> all = basis_;
  all.insert(all.end(), inner.basis_.begin(), inner.basis_.end());
  return FormSpace(nvars_, degree_, all).dim() == dim();
}

FormSpace FormSpace::join(const FormSpace& other) const {
  if (other.nvars_ != nvars_ || other.degree_ != degree_)
    fail(Errc::DimensionMismatch, "form space join: degree or variable mismatch");
  std::vector<Poly> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return FormSpace(nvars_, degree_, all);
}

FormSpace ideal_degree_piece(const std::vector<Poly>& generators, int d, int nvars) {
  std::vector<Poly> products;
  for (const Poly& g : generators) {
    if (g.is_zero()) continue;
    if (g.nvars() != nvars) fail(Errc::DimensionMismatch, "ideal piece: variable count mismatch");
    if (!g.is_homogeneous()) fail(Errc::BadInput, "ideal piece: non-homogeneous generator");
    int e = g.degree();
    if (e > d) continue;
    for (const Exp& m : monomials_of_degree(nvars, d - e))
      products.push_back(g * Poly::monomial(nvars, m, 1));
  }
  return FormSpace(nvars, d, products);
}

bool subspace_contains(const FormSpace& outer, const FormSpace& inner) {
  return outer.contains(inner);
}

}  // namespace jetgeom
