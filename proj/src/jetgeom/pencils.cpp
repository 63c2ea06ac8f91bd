#include "pencils.hpp"

#include <algorithm>

#include "errors.hpp"
#include "linalg.hpp"

namespace jetgeom {

namespace {

RatVec flatten_sym(const RatMat& m) {
  RatVec v;
  int n = static_cast<int>(m.size());
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) v.push_back(m[i][j]);
  return v;
}

bool mat_is_zero(const RatMat& m) {
  for (const auto& row : m)
    for (const Rat& x : row)
      if (x != 0) return false;
  return true;
}

RatMat member(const QuadricPencil& p, const Rat& s, const Rat& t) {
  RatMat m = mat_zero(p.n, p.n);
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j) m[i][j] = s * p.A[i][j] + t * p.B[i][j];
  return m;
}

Poly quadric_form(const RatMat& m, int nvars) {
  Poly q(nvars);
  int n = static_cast<int>(m.size());
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Exp e(nvars, 0);
      e[i] += 1;
      e[j] += 1;
      q.add_term(e, i == j ? m[i][j] : m[i][j] * 2);
    }
  return q;
}

Rat bil(const RatMat& m, const RatVec& x, const RatVec& y) {
  Rat acc = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (size_t j = 0; j < y.size(); ++j) acc += x[i] * m[i][j] * y[j];
  }
  return acc;
}

// Multiplicity clusters of a nonzero binary form of formal degree d given by
// coefficients of s^(d-i) t^i: pairs (multiplicity, number of points).
std::vector<std::pair<int, int>> binary_clusters(const std::vector<Rat>& coeffs, int d) {
  UniPoly f;
  f.c.assign(coeffs.begin(), coeffs.end());
  f.normalize();
  if (f.is_zero()) fail(Errc::BadInput, "binary form is identically zero");
  std::vector<std::pair<int, int>> out;
  int at_infinity = d - f.degree();
  if (at_infinity > 0) out.emplace_back(at_infinity, 1);
  for (const auto& [factor, e] : squarefree_decomposition(f)) out.emplace_back(e, factor.degree());
  return out;
}

// Exact division test in the polynomial ring: quotient if divisor | p.
std::optional<Poly> divide_exact(const Poly& p, const Poly& divisor) {
  if (divisor.is_zero()) fail(Errc::BadInput, "division by zero polynomial");
  Poly rem = p, quot(p.nvars());
  const auto& lead = *divisor.terms().rbegin();
  while (!rem.is_zero()) {
    const auto& lt = *rem.terms().rbegin();
    Exp q(lt.first.size());
    bool divisible = true;
    for (size_t i = 0; i < q.size(); ++i) {
      q[i] = lt.first[i] - lead.first[i];
      if (q[i] < 0) divisible = false;
    }
    if (!divisible) return std::nullopt;
    Rat coeff = lt.second / lead.second;
    quot.add_term(q, coeff);
    rem = rem - divisor * Poly::monomial(p.nvars(), q, coeff);
  }
  return quot;
}

// Linear form from a coefficient vector.
Poly linear_form(const RatVec& v) {
  Poly l(static_cast<int>(v.size()));
  for (size_t i = 0; i < v.size(); ++i) {
    Exp e(v.size(), 0);
    e[i] = 1;
    l.add_term(e, v[i]);
  }
  return l;
}

}  // namespace

QuadricPencil make_pencil(const RatMat& a, const RatMat& b) {
  if (a.size() != b.size() || a.empty()) fail(Errc::DimensionMismatch, "pencil matrices of unequal size");
  if (!mat_is_symmetric(a) || !mat_is_symmetric(b)) fail(Errc::BadInput, "pencil matrices must be symmetric");
  QuadricPencil p;
  p.n = static_cast<int>(a.size());
  p.A = a;
  p.B = b;
  RatMat rows = {flatten_sym(a), flatten_sym(b)};
  p.span_dim = rank(rows);
  if (p.span_dim == 1 && mat_is_zero(a)) std::swap(p.A, p.B);
  return p;
}

QuadricPencil pencil_extract(const FundForms& ff) {
  RatMat zero = mat_zero(ff.n, ff.n);
  RatMat a = ff.c >= 1 ? ff.q_matrix(0) : zero;
  RatMat b = ff.c >= 2 ? ff.q_matrix(1) : zero;
  if (ff.c > 2) {
    RatMat rows;
    for (int u = 0; u < ff.c; ++u) rows.push_back(flatten_sym(ff.q_matrix(u)));
    if (rank(rows) > 2) fail(Errc::CodimensionTooLarge, "second fundamental form spans more than a pencil");
  }
  return make_pencil(a, b);
}

std::vector<Rat> pencil_det_form(const QuadricPencil& p) {
  std::vector<std::pair<Rat, Rat>> samples;
  for (int k = 0; k <= p.n; ++k) samples.emplace_back(Rat(k), det(member(p, 1, Rat(k))));
  UniPoly q = interpolate(samples);
  std::vector<Rat> coeffs(p.n + 1, Rat(0));
  for (int i = 0; i <= p.n; ++i) coeffs[i] = q.coeff(i);
  return coeffs;
}

PencilNormalization pencil_normalize(const QuadricPencil& p) {
  if (p.span_dim != 2) fail(Errc::Contract, "normalization requires a genuine pencil (span 2)");
  static const std::pair<int, int> kCandidates[] = {{1, 0}, {0, 1}, {1, 1},  {1, -1}, {1, 2},
                                                    {1, -2}, {2, 1}, {1, 3},  {3, 1},  {1, -3},
                                                    {1, 4},  {4, 1}, {1, -4}, {2, 3},  {3, 2}};
  RatMat M, N;
  bool found = false;
  for (const auto& [s, t] : kCandidates) {
    RatMat cand = member(p, Rat(s), Rat(t));
    if (det(cand) != 0) {
      M = cand;
      N = (s == 1 && t == 0) ? p.B : p.A;
      found = true;
      break;
    }
  }
  if (!found) fail(Errc::NoInvertibleMember, "every member of the pencil is singular");

  // Characteristic polynomial det(N - lambda M) by interpolation.
  std::vector<std::pair<Rat, Rat>> samples;
  for (int k = 0; k <= p.n; ++k) {
    RatMat d = N;
    for (int i = 0; i < p.n; ++i)
      for (int j = 0; j < p.n; ++j) d[i][j] -= Rat(k) * M[i][j];
    samples.emplace_back(Rat(k), det(d));
  }
  UniPoly chi = interpolate(samples);
  RationalRoots roots = rational_roots(chi);
  int total = 0;
  for (const auto& [r, m] : roots.roots) total += m;
  if (total < p.n) {
    std::string diag = "characteristic polynomial:";
    for (int i = 0; i <= chi.degree(); ++i) diag += " " + rat_str(chi.coeff(i)) + "*l^" + std::to_string(i);
    fail(Errc::IrrationalEigenvalues, "generalized eigenvalues are not all rational; " + diag);
  }

  PencilNormalization out;
  std::vector<RatVec> columns;
  for (const auto& [lambda, mult] : roots.roots) {
    RatMat d = N;
    for (int i = 0; i < p.n; ++i)
      for (int j = 0; j < p.n; ++j) d[i][j] -= lambda * M[i][j];
    std::vector<RatVec> eig = nullspace(d);
    if (static_cast<int>(eig.size()) != mult)
      fail(Errc::NotDiagonalizable, "eigenvalue multiplicity exceeds its eigenspace dimension");
    // Congruence-diagonalize the restriction of M to the eigenspace.
    for (size_t i = 0; i < eig.size(); ++i) {
      if (bil(M, eig[i], eig[i]) == 0) {
        bool fixed = false;
        for (size_t j = i + 1; j < eig.size() && !fixed; ++j) {
          if (bil(M, eig[j], eig[j]) != 0) {
            std::swap(eig[i], eig[j]);
            fixed = true;
          }
        }
        for (size_t j = i + 1; j < eig.size() && !fixed; ++j) {
          if (bil(M, eig[i], eig[j]) != 0) {
            for (size_t k = 0; k < eig[i].size(); ++k) eig[i][k] += eig[j][k];
            fixed = true;
          }
        }
        if (!fixed) fail(Errc::Contract, "internal: eigenspace degenerate for an invertible member");
      }
      Rat dii = bil(M, eig[i], eig[i]);
      for (size_t j = i + 1; j < eig.size(); ++j) {
        Rat f = bil(M, eig[i], eig[j]) / dii;
        if (f == 0) continue;
        for (size_t k = 0; k < eig[j].size(); ++k) eig[j][k] -= f * eig[i][k];
      }
    }
    for (auto& v : eig) {
      out.lambda.push_back(lambda);
      columns.push_back(v);
    }
  }
  out.transform = mat_zero(p.n, p.n);
  for (int j = 0; j < p.n; ++j)
    for (int i = 0; i < p.n; ++i) out.transform[i][j] = columns[j][i];
  for (int j = 0; j < p.n; ++j) out.gram.push_back(bil(M, columns[j], columns[j]));
  // Exactness check of both congruences.
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j) {
      Rat mij = bil(M, columns[i], columns[j]);
      Rat nij = bil(N, columns[i], columns[j]);
      if (i != j && (mij != 0 || nij != 0)) fail(Errc::Contract, "internal: congruence not diagonal");
      if (i == j && nij != out.gram[i] * out.lambda[i]) fail(Errc::Contract, "internal: eigenvalue mismatch");
    }
  return out;
}

std::vector<int> base_locus_multiplicities(const QuadricPencil& p) {
  if (p.n != 3) fail(Errc::BadInput, "base locus multiplicities are computed for pencils in three variables");
  if (p.span_dim != 2) fail(Errc::DegeneratePencil, "base locus needs a genuine pencil (span 2)");
  // Shears x -> S x moving the projection center S*(0,0,1) around.
  static const long kCenters[][2] = {{0, 0}, {1, 1}, {-2, 3}, {5, -7}, {11, 13}};
  std::vector<int> best;
  for (const auto& center : kCenters) {
    RatMat s = mat_identity(3);
    s[0][2] = Rat(center[0]);
    s[1][2] = Rat(center[1]);
    RatMat st = mat_transpose(s);
    RatMat a2 = mat_mul(st, mat_mul(p.A, s));
    RatMat b2 = mat_mul(st, mat_mul(p.B, s));
    if (a2[2][2] == 0 || b2[2][2] == 0) continue;  // center lies on a conic
    // Resultant in z of the sheared conics, a binary quartic in (x, y).
    Poly qa = quadric_form(a2, 3), qb = quadric_form(b2, 3);
    std::vector<Poly> za(3, Poly::zero(2)), zb(3, Poly::zero(2));
    for (const auto* src : {&qa, &qb}) {
      auto& dst = src == &qa ? za : zb;
      for (const auto& [e, coeff] : src->terms()) {
        Exp xy = {e[0], e[1]};
        dst[e[2]].add_term(xy, coeff);
      }
    }
    RatMat unused;
    std::vector<std::vector<Poly>> syl(4, std::vector<Poly>(4, Poly::zero(2)));
    for (int r = 0; r < 2; ++r)
      for (int k = 0; k <= 2; ++k) {
        syl[r][r + k] = za[2 - k];
        syl[2 + r][r + k] = zb[2 - k];
      }
    // 4x4 determinant by cofactor expansion.
    std::vector<int> rows = {0, 1, 2, 3};
    auto detrec = [&](auto&& self, std::vector<int> rr, int col) -> Poly {
      if (rr.size() == 1) return syl[rr[0]][col];
      Poly acc(2);
      for (size_t i = 0; i < rr.size(); ++i) {
        std::vector<int> rest;
        for (size_t j = 0; j < rr.size(); ++j)
          if (j != i) rest.push_back(rr[j]);
        Poly minor = self(self, rest, col + 1) * syl[rr[i]][col];
        acc = (i % 2 == 0) ? acc + minor : acc - minor;
      }
      return acc;
    };
    Poly res = detrec(detrec, rows, 0);
    if (res.is_zero()) fail(Errc::PositiveDimensionalBase, "the two conics share a component");
    std::vector<Rat> coeffs(5, Rat(0));
    for (const auto& [e, coeff] : res.terms()) coeffs[e[1]] = coeff;  // x^(4-i) y^i
    std::vector<int> partition;
    for (const auto& [mult, count] : binary_clusters(coeffs, 4))
      for (int i = 0; i < count; ++i) partition.push_back(mult);
    std::sort(partition.rbegin(), partition.rend());
    int sum = 0;
    for (int m : partition) sum += m;
    if (sum != 4) fail(Errc::Contract, "internal: base locus multiplicities do not sum to 4");
    // Projection can only merge clusters, so the finest partition wins.
    if (partition.size() > best.size()) best = partition;
  }
  if (best.empty()) fail(Errc::DegeneratePencil, "no valid projection center found");
  return best;
}

namespace {

// Number of distinct rank-one members of a ranked-degenerate pencil, counted
// over the algebraic closure as distinct roots of the gcd of the 2x2 minors
// of sA + tB (a binary form; the root at infinity is the member B).
int rank_one_member_count(const QuadricPencil& p) {
  UniPoly g;  // gcd of dehomogenized minors
  int min_codeg = 2;
  bool any = false;
  for (int i1 = 0; i1 < p.n; ++i1)
    for (int i2 = i1 + 1; i2 < p.n; ++i2)
      for (int j1 = 0; j1 < p.n; ++j1)
        for (int j2 = j1 + 1; j2 < p.n; ++j2) {
          // minor rows (i1,i2), cols (j1,j2) of A + tB
          UniPoly e11, e12, e21, e22;
          e11.c = {p.A[i1][j1], p.B[i1][j1]};
          e12.c = {p.A[i1][j2], p.B[i1][j2]};
          e21.c = {p.A[i2][j1], p.B[i2][j1]};
          e22.c = {p.A[i2][j2], p.B[i2][j2]};
          e11.normalize();
          e12.normalize();
          e21.normalize();
          e22.normalize();
          UniPoly minor = e11 * e22 - e12 * e21;
          if (minor.is_zero()) continue;
          any = true;
          min_codeg = std::min(min_codeg, 2 - minor.degree());
          g = g.is_zero() ? minor.monic() : gcd(g, minor);
        }
  if (!any) return -1;  // all members of rank <= 1: outside the taxonomy
  int distinct = 0;
  if (min_codeg > 0) distinct += 1;  // common root at infinity: B has rank <= 1
  if (!g.is_zero() && g.degree() > 0) {
    for (const auto& [factor, e] : squarefree_decomposition(g)) distinct += factor.degree();
  }
  return distinct;
}

// Detects the common-linear-factor normal form {l*a, l*b} with l, a, b
// independent. The common factor of a span-2 pencil is rational whenever it
// exists, and lies in the intersection of the row spaces.
bool is_seg_normal_form(const QuadricPencil& p) {
  RatMat ra = p.A, rb = p.B;
  auto pa = rref(ra), pb = rref(rb);
  RatMat stacked;
  for (size_t i = 0; i < pa.size(); ++i) stacked.push_back(ra[i]);
  for (size_t i = 0; i < pb.size(); ++i) stacked.push_back(rb[i]);
  int inter_dim = static_cast<int>(pa.size() + pb.size()) - rank(stacked);
  if (inter_dim != 1) return false;
  // One vector in rowspace(A) that also lies in rowspace(B): solve for the
  // combination via the nullspace of [rowsA^T | -rowsB^T].
  RatMat sys = mat_zero(p.n, static_cast<int>(pa.size() + pb.size()));
  for (int r = 0; r < p.n; ++r) {
    for (size_t j = 0; j < pa.size(); ++j) sys[r][j] = ra[j][r];
    for (size_t j = 0; j < pb.size(); ++j) sys[r][pa.size() + j] = -rb[j][r];
  }
  auto null = nullspace(sys);
  if (null.empty()) return false;
  RatVec ell(p.n, Rat(0));
  for (size_t j = 0; j < pa.size(); ++j)
    for (int r = 0; r < p.n; ++r) ell[r] += null[0][j] * ra[j][r];
  if (is_zero_vec(ell)) return false;
  Poly l = linear_form(ell);
  auto qa = divide_exact(quadric_form(p.A, p.n), l);
  auto qb = divide_exact(quadric_form(p.B, p.n), l);
  if (!qa || !qb) return false;
  // l, a, b must be independent linear forms.
  RatMat triple;
  triple.push_back(ell);
  for (const Poly* q : {&*qa, &*qb}) {
    RatVec row(p.n, Rat(0));
    for (const auto& [e, coeff] : q->terms())
      for (int i = 0; i < p.n; ++i)
        if (e[i] == 1) row[i] = coeff;
    triple.push_back(row);
  }
  return rank(triple) == 3;
}

}  // namespace

const char* pencil_tag_name(PencilTag tag) {
  switch (tag) {
    case PencilTag::FourDistinct: return "FOUR_DISTINCT";
    case PencilTag::TwoDouble: return "TWO_DOUBLE";
    case PencilTag::DoublePlusTwo: return "DOUBLE_PLUS_TWO";
    case PencilTag::Quadruple: return "QUADRUPLE";
    case PencilTag::TriplePlusOne: return "TRIPLE_PLUS_ONE";
    case PencilTag::DegenerateSeg: return "DEGENERATE_SEG";
    case PencilTag::DegenerateSquares: return "DEGENERATE_SQUARES";
    case PencilTag::SingleRankGe2: return "SINGLE_RANK_GE2";
    case PencilTag::SingleRank1: return "SINGLE_RANK1";
    case PencilTag::Zero: return "ZERO";
    case PencilTag::Unrecognized: return "UNRECOGNIZED";
  }
  return "UNRECOGNIZED";
}

PencilClass pencil_classify(const QuadricPencil& p) {
  PencilClass out;
  if (p.span_dim == 0) {
    out.tag = PencilTag::Zero;
    out.degenerate_dual = true;
    return out;
  }
  if (p.span_dim == 1) {
    int r = rank(p.A);
    out.tag = r == 1 ? PencilTag::SingleRank1 : PencilTag::SingleRankGe2;
    out.degenerate_dual = r < p.n;
    return out;
  }

  std::vector<Rat> detform = pencil_det_form(p);
  bool det_vanishes = true;
  for (const Rat& c : detform)
    if (c != 0) det_vanishes = false;

  if (!det_vanishes) {
    // The pencil contains a smooth quadric.
    out.degenerate_dual = false;
    if (p.n == 3) {
      out.partition = base_locus_multiplicities(p);
      if (out.partition == std::vector<int>{1, 1, 1, 1}) out.tag = PencilTag::FourDistinct;
      else if (out.partition == std::vector<int>{2, 2}) out.tag = PencilTag::TwoDouble;
      else if (out.partition == std::vector<int>{2, 1, 1}) out.tag = PencilTag::DoublePlusTwo;
      else if (out.partition == std::vector<int>{4}) out.tag = PencilTag::Quadruple;
      else if (out.partition == std::vector<int>{3, 1}) out.tag = PencilTag::TriplePlusOne;
      return out;
    }
    if (p.n < 3) {
      out.tag = PencilTag::Unrecognized;
      return out;
    }
    // n > 3: only the all-distinct and 1,(n-1) eigenvalue patterns are in the
    // implemented taxonomy; anything between is reported, never guessed.
    try {
      PencilNormalization norm = pencil_normalize(p);
      std::vector<Rat> distinct;
      std::vector<int> mult;
      for (const Rat& l : norm.lambda) {
        if (distinct.empty() || distinct.back() != l) {
          distinct.push_back(l);
          mult.push_back(1);
        } else {
          ++mult.back();
        }
      }
      if (static_cast<int>(distinct.size()) == p.n) out.tag = PencilTag::FourDistinct;
      else if (distinct.size() == 2 && (mult[0] == 1 || mult[1] == 1)) out.tag = PencilTag::TwoDouble;
      else out.tag = PencilTag::Unrecognized;
    } catch (const Error&) {
      out.tag = PencilTag::Unrecognized;
    }
    return out;
  }

  // Degenerate pencil: no smooth member, degenerate dual variety.
  out.degenerate_dual = true;
  int generic_rank = 0;
  for (int k = 0; k <= p.n; ++k) generic_rank = std::max(generic_rank, rank(member(p, 1, Rat(k))));
  generic_rank = std::max(generic_rank, rank(p.B));
  if (generic_rank != 2) {
    out.tag = PencilTag::Unrecognized;
    return out;
  }
  int rank_ones = rank_one_member_count(p);
  if (rank_ones == 2) {
    out.tag = PencilTag::DegenerateSquares;
  } else if (rank_ones == 0 && is_seg_normal_form(p)) {
    out.tag = PencilTag::DegenerateSeg;
  } else {
    out.tag = PencilTag::Unrecognized;
  }
  return out;
}

}  // namespace jetgeom
