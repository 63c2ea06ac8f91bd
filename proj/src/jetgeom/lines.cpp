#include "lines.hpp"

#include <algorithm>

#include "errors.hpp"
#include "linalg.hpp"
#include "unipoly.hpp"

namespace jetgeom {

BinaryForm::BinaryForm(int d, RatVec c) : degree(d), coeff(std::move(c)) {
  if (static_cast<int>(coeff.size()) != d + 1)
    fail(Errc::DimensionMismatch, "binary form needs degree+1 coefficients");
}

bool BinaryForm::is_zero() const {
  for (const Rat& q : coeff)
    if (q != 0) return false;
  return true;
}

BinaryForm restrict_binary(const Poly& f, const LineSpec& line) {
  if (!f.is_homogeneous()) fail(Errc::BadInput, "line restriction needs a homogeneous polynomial");
  if (f.nvars() != static_cast<int>(line.base.size()))
    fail(Errc::DimensionMismatch, "line does not live in the ambient space of the hypersurface");
  int d = std::max(f.degree(), 0);
  UniPoly acc = restrict_to_line(f, line.base, line.dir);
  RatVec coeffs(d + 1, Rat(0));
  for (int i = 0; i <= acc.degree(); ++i) coeffs[i] = acc.coeff(i);
  return BinaryForm(d, coeffs);
}

bool line_in_hypersurface(const Poly& f, const LineSpec& line) {
  return restrict_binary(f, line).is_zero();
}

int SplittingType::sum() const {
  int s = 0;
  for (int a : degrees) s += a;
  return s;
}

namespace {

// Exact dimension of { (u_i) of degree m+1 : sum u_i g_i = 0 } for a row of
// binary forms of degree d-1, via the null space of the multiplication matrix.
int syzygy_dim(const std::vector<UniPoly>& row, int d, int m) {
  int ucount = static_cast<int>(row.size());
  int udeg = m + 1;
  if (udeg < 0) return 0;
  int cols = ucount * (udeg + 1);
  int rows = d + m + 1;
  RatMat mat = mat_zero(rows, cols);
  for (int i = 0; i < ucount; ++i)
    for (int j = 0; j <= udeg; ++j)
      for (int k = 0; k <= row[i].degree(); ++k) mat[k + j][i * (udeg + 1) + j] = row[i].coeff(k);
  return cols - rank(mat);
}

}  // namespace

SplittingType splitting_type(const Poly& f, const LineSpec& line) {
  if (!f.is_homogeneous() || f.is_zero()) fail(Errc::BadInput, "hypersurface must be a nonzero homogeneous form");
  int nv = f.nvars();
  int n = nv - 2;  // dimension of the hypersurface
  int d = f.degree();
  if (n < 2) fail(Errc::BadInput, "splitting types need an ambient P^3 or larger");
  if (!line_in_hypersurface(f, line)) fail(Errc::LineNotContained, "line is not contained in the hypersurface");

  // Move the line to {x2 = ... = 0}: basis (p, q, completion by unit vectors).
  RatMat span = {line.base, line.dir};
  RatMat red = span;
  auto pivots = rref(red);
  std::vector<bool> used(nv, false);
  for (int p : pivots) used[p] = true;
  RatMat m = mat_zero(nv, nv);
  for (int i = 0; i < nv; ++i) {
    m[i][0] = line.base[i];
    m[i][1] = line.dir[i];
  }
  int col = 2;
  for (int j = 0; j < nv; ++j) {
    if (used[j]) continue;
    m[j][col] = 1;
    ++col;
  }
  Poly fn = f.linear_change(m);

  // Restricted partials along the normal directions, as binary forms in the
  // line parameters (y0, y1).
  std::vector<UniPoly> row;
  bool all_zero = true;
  for (int i = 2; i < nv; ++i) {
    Poly gi = fn.partial(i);
    UniPoly r;
    for (const auto& [e, coeff] : gi.terms()) {
      bool on_line = true;
      for (int j = 2; j < nv; ++j) on_line = on_line && e[j] == 0;
      if (!on_line) continue;
      while (static_cast<int>(r.c.size()) <= e[1]) r.c.push_back(Rat(0));
      r.c[e[1]] += coeff;
    }
    r.normalize();
    if (!r.is_zero()) all_zero = false;
    row.push_back(r);
  }
  if (all_zero) fail(Errc::DegenerateLine, "all restricted partials vanish: the hypersurface is singular along the line");

  int lo = -d - 2, hi = d + 1;
  std::vector<int> h;  // h[m - lo]
  for (int tw = lo; tw <= hi; ++tw) h.push_back(syzygy_dim(row, d, tw));

  // h(m) = sum max(0, a_i + m + 1) determines the multiset: the increments
  // delta(m) count the a_i >= -m.
  std::vector<int> degrees;
  for (int v = 1; v >= -d - 1; --v) {
    int delta_here = h[-v - lo] - h[-v - 1 - lo];
    int delta_prev = (-v - 1 >= lo) ? h[-v - 1 - lo] - h[-v - 2 - lo] : 0;
    for (int k = 0; k < delta_here - delta_prev; ++k) degrees.push_back(v);
  }
  std::sort(degrees.begin(), degrees.end());
  SplittingType split{degrees};

  bool consistent = static_cast<int>(degrees.size()) == n - 1;
  for (int tw = lo; tw <= hi && consistent; ++tw) {
    int expect = 0;
    for (int a : degrees) expect += std::max(0, a + tw + 1);
    consistent = expect == h[tw - lo];
  }
  if (!consistent)
    fail(Errc::DegenerateLine,
         "syzygy dimensions are not those of a rank n-1 bundle: the contact scheme along the line is degenerate");
  return split;
}

CoskunCheck coskun_check(const Poly& f, const LineSpec& line) {
  CoskunCheck out;
  out.split = splitting_type(f, line);
  int n = f.nvars() - 2;
  int d = f.degree();
  out.sum_ok = out.split.sum() == n - d;
  out.a1_negative = !out.split.degrees.empty() && out.split.degrees.front() < 0;
  out.covers_impossible = d >= n + 1;
  if (out.covers_impossible && !out.a1_negative)
    fail(Errc::Contract, "internal: degree >= n+1 must force a negative twist");
  return out;
}

}  // namespace jetgeom
