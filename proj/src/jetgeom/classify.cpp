#include "classify.hpp"

#include <algorithm>

#include "errors.hpp"
#include "linalg.hpp"

namespace jetgeom {

const char* theorem_tag_name(TheoremTag tag) {
  switch (tag) {
    case TheoremTag::CiTwoQuadrics: return "CI_TWO_QUADRICS";
    case TheoremTag::CurveTimesQuadric: return "CURVE_TIMES_QUADRIC";
    case TheoremTag::ConeSegP1xP2: return "CONE_SEG_P1xP2";
    case TheoremTag::CurveTimesDegenerateGauss: return "CURVE_TIMES_DEGENERATE_GAUSS";
    case TheoremTag::ScrollPn1: return "SCROLL_PN1";
    case TheoremTag::QuadricHypersurface: return "QUADRIC_HYPERSURFACE";
    case TheoremTag::Linear: return "LINEAR";
    case TheoremTag::Indeterminate: return "INDETERMINATE";
  }
  return "INDETERMINATE";
}

ClassifyResult theorem_classify_chart(const Chart& chart, bool check_general) {
  if (chart.c > 2)
    fail(Errc::CodimensionTooLarge, "classification covers codimension at most two");
  if (chart.order < 3) fail(Errc::BadInput, "classification needs jets to order >= 3");

  ClassifyResult res;
  Evidence& ev = res.evidence;
  ev.chart = chart;
  int K = std::min(chart.order, 5);
  ev.forms = fundamental_forms(chart, K);
  ev.fubini = fubini_test(ev.forms);
  ev.pencil = pencil_extract(ev.forms);
  ev.pclass = pencil_classify(ev.pencil);
  if (check_general) {
    if (auto w = generality_warning(chart)) ev.warnings.push_back(*w);
  }

  if (!ev.fubini.holds) {
    res.tag = TheoremTag::Indeterminate;
    ev.diagnostics.push_back("Fubini hypothesis fails: dim |F3| modulo (|F2|)_3 = " +
                             std::to_string(ev.fubini.residual_dimension));
    return res;
  }

  switch (ev.pclass.tag) {
    case PencilTag::Zero:
      res.tag = TheoremTag::Linear;
      return res;
    case PencilTag::SingleRank1:
      res.tag = TheoremTag::ScrollPn1;
      return res;
    case PencilTag::SingleRankGe2:
      res.tag = TheoremTag::QuadricHypersurface;
      return res;
    case PencilTag::FourDistinct: {
      if (K < 5) {
        res.tag = TheoremTag::Indeterminate;
        ev.diagnostics.push_back("complete-intersection test needs jets to order 5");
        return res;
      }
      ev.ci = ci_test_F4F5(ev.forms, ev.fubini);
      if (ev.ci->passes) {
        res.tag = TheoremTag::CiTwoQuadrics;
      } else {
        res.tag = TheoremTag::Indeterminate;
        ev.diagnostics.push_back("degree-4/5 complete-intersection conditions fail");
      }
      return res;
    }
    case PencilTag::TwoDouble:
      res.tag = TheoremTag::CurveTimesQuadric;
      return res;
    case PencilTag::DoublePlusTwo:
    case PencilTag::Quadruple:
    case PencilTag::TriplePlusOne:
    case PencilTag::DegenerateSquares:
      res.tag = TheoremTag::CurveTimesDegenerateGauss;
      return res;
    case PencilTag::DegenerateSeg:
      res.tag = TheoremTag::ConeSegP1xP2;
      return res;
    case PencilTag::Unrecognized:
      res.tag = TheoremTag::Indeterminate;
      ev.diagnostics.push_back("pencil of quadrics falls outside the implemented taxonomy");
      return res;
  }
  return res;
}

ClassifyResult theorem_classify(const VarietySpec& spec, const RatVec& point, int order,
                                bool check_general) {
  Chart chart = chart_from_implicit(spec, point, order);
  return theorem_classify_chart(chart, check_general);
}

RatVec ExampleParams::lambda_or_default() const {
  if (!lambda.empty()) return lambda;
  RatVec out;
  for (int a = 1; a <= n; ++a) out.emplace_back(a);
  return out;
}

RatVec ExampleParams::rho_or_default() const {
  if (!rho.empty()) return rho;
  return RatVec(n, Rat(0));
}

namespace {

Poly mono2(int nvars, int i, int j, const Rat& coeff) {
  Exp e(nvars, 0);
  e[i] += 1;
  e[j] += 1;
  return Poly::monomial(nvars, e, coeff);
}

RatVec unit_point(int nvars, int idx = 0) {
  RatVec p(nvars, Rat(0));
  p[idx] = 1;
  return p;
}

}  // namespace

GeneratedExample example_generate(int class_tag, const ExampleParams& params) {
  GeneratedExample out;
  int n = params.n;
  if (n < 2) fail(Errc::BadInput, "example families need dimension >= 2");
  int nv = n + 3;  // homogeneous coordinates of P^(n+2)

  switch (class_tag) {
    case 1: {
      RatVec lambda = params.lambda_or_default();
      RatVec rho = params.rho_or_default();
      if (static_cast<int>(lambda.size()) != n || static_cast<int>(rho.size()) != n)
        fail(Errc::BadInput, "lambda and rho must have n entries");
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          if (lambda[a] == lambda[b]) fail(Errc::BadInput, "class 1 needs pairwise distinct lambda");
      Poly g1 = mono2(nv, 0, n + 1, 1);
      for (int a = 1; a <= n; ++a) g1 = g1 + mono2(nv, a, a, -1);
      g1 = g1 + mono2(nv, n + 2, n + 2, params.R);
      Poly g2 = mono2(nv, 0, n + 2, 1);
      for (int a = 1; a <= n; ++a) g2 = g2 + mono2(nv, a, a, -lambda[a - 1]);
      for (int a = 1; a <= n; ++a) g2 = g2 + mono2(nv, a, n + 1, -rho[a - 1]);
      g2 = g2 + mono2(nv, n + 1, n + 1, params.W) + mono2(nv, n + 1, n + 2, -params.V) +
           mono2(nv, n + 2, n + 2, -params.U);
      out.spec = VarietySpec(n + 2, {g1, g2}, "two-quadric complete intersection");
      out.suggested_point = unit_point(nv);
      return out;
    }
    case 2: {
      // Local product of a curve direction with a quadric hypersurface:
      // one quadric in w_1..w_(n-1), one cubically perturbed square in w_n.
      RatVec lambda = params.lambda_or_default();
      if (static_cast<int>(lambda.size()) < n - 1) fail(Errc::BadInput, "lambda must have n-1 entries");
      Poly f1(n), f2(n);
      for (int a = 0; a < n - 1; ++a) {
        if (lambda[a] == 0) fail(Errc::BadInput, "class 2 needs a nondegenerate quadric factor");
        f1 = f1 + mono2(n, a, a, lambda[a]);
      }
      Exp sq(n, 0), cb(n, 0);
      sq[n - 1] = 2;
      cb[n - 1] = 3;
      f2.add_term(sq, 1);
      f2.add_term(cb, 1);
      out.chart = chart_from_graph({f1, f2}, 5);
      return out;
    }
    case 3: {
      // 2x2 minors of [[x0,x1,x2],[x3,x4,x5]]; unused variables make cones.
      int extra = n - 3;
      if (extra < 0) fail(Errc::BadInput, "class 3 needs n >= 3");
      int vars = 6 + extra;
      Poly m1 = mono2(vars, 0, 4, 1) + mono2(vars, 1, 3, -1);
      Poly m2 = mono2(vars, 0, 5, 1) + mono2(vars, 2, 3, -1);
      Poly m3 = mono2(vars, 1, 5, 1) + mono2(vars, 2, 4, -1);
      out.spec = VarietySpec(vars - 1, {m1, m2, m3}, "Segre P1xP2 minors");
      out.suggested_point = unit_point(vars);
      return out;
    }
    case 4: {
      // Pencil normal form q4 = diag(0,1,lambda), q5 = [[0,1,0],[1,0,0],[0,0,1]]
      // with an optional cubic drawn from the ideal of |F2| so the Fubini
      // witness is exercised. lambda = 0 gives the four-fold base point.
      if (n != 3) fail(Errc::BadInput, "class 4 charts are generated for n = 3");
      Rat lam = params.lambda.empty() ? Rat(1) : params.lambda[0];
      Poly f1 = mono2(3, 1, 1, Rat(1, 2)) + mono2(3, 2, 2, lam / 2);
      Poly f2 = mono2(3, 0, 1, 1) + mono2(3, 2, 2, Rat(1, 2));
      RatVec rho = params.rho_or_default();
      Poly l(3);
      for (int a = 0; a < 3; ++a) {
        Exp e(3, 0);
        e[a] = 1;
        l.add_term(e, rho[a]);
      }
      f2 = f2 + l * f1;
      out.chart = chart_from_graph({f1, f2}, 5);
      return out;
    }
    case 5: {
      // Cone over a twisted cubic with an (n-2)-plane vertex.
      Poly g1 = mono2(nv, 0, 2, 1) + mono2(nv, 1, 1, -1);
      Poly g2 = mono2(nv, 0, 3, 1) + mono2(nv, 1, 2, -1);
      Poly g3 = mono2(nv, 1, 3, 1) + mono2(nv, 2, 2, -1);
      out.spec = VarietySpec(n + 2, {g1, g2, g3}, "cone over a twisted cubic");
      RatVec p(nv, Rat(0));
      p[0] = p[1] = p[2] = p[3] = 1;
      out.suggested_point = p;
      return out;
    }
    case 6: {
      RatVec lambda = params.lambda_or_default();
      if (static_cast<int>(lambda.size()) != n) fail(Errc::BadInput, "lambda must have n entries");
      int nonzero = 0;
      for (const Rat& l : lambda) nonzero += l != 0;
      if (nonzero < 2) fail(Errc::BadInput, "class 6 needs a quadric of rank >= 2");
      Poly g1 = mono2(nv, 0, n + 1, 1);
      for (int a = 1; a <= n; ++a) g1 = g1 + mono2(nv, a, a, -lambda[a - 1]);
      Poly g2 = Poly::variable(nv, n + 2);
      out.spec = VarietySpec(n + 2, {g1, g2}, "quadric hypersurface in a hyperplane");
      out.suggested_point = unit_point(nv);
      return out;
    }
    case 7: {
      out.spec = VarietySpec(n + 2, {Poly::variable(nv, n + 1), Poly::variable(nv, n + 2)},
                             "linear subspace");
      out.suggested_point = unit_point(nv);
      return out;
    }
    default:
      fail(Errc::BadInput, "example classes are 1..7");
  }
}

Chart seg_projection_example(int order) {
  // Affine cell of G(2,5): row span of [[1,0,w1,w2,w3],[0,1,w4,w5,w6]].
  // Plucker coordinates ordered (p12, p13, p14, p15, p23, p24, p25, p34, p35, p45).
  const int n = 6;
  auto var = [&](int a) { return Poly::variable(n, a); };
  std::vector<Poly> pl;
  pl.push_back(Poly::constant(n, 1));       // p12
  pl.push_back(var(3));                     // p13
  pl.push_back(var(4));                     // p14
  pl.push_back(var(5));                     // p15
  pl.push_back(var(0) * Rat(-1));           // p23
  pl.push_back(var(1) * Rat(-1));           // p24
  pl.push_back(var(2) * Rat(-1));           // p25
  pl.push_back(var(0) * var(4) - var(1) * var(3));  // p34
  pl.push_back(var(0) * var(5) - var(2) * var(3));  // p35
  pl.push_back(var(1) * var(5) - var(2) * var(4));  // p45

  // Projection center, fixed once: not a decomposable bivector (the Pfaffian
  // p23 p45 - p24 p35 + p25 p34 evaluates to 21) and not in the embedded
  // tangent space at the cell origin (its (p34,p35,p45) part is nonzero).
  const long center[10] = {0, 1, 2, 3, 4, 5, 6, 3, 5, 7};
  std::vector<Poly> projected;
  for (int i = 0; i < 9; ++i)
    projected.push_back(pl[i] - pl[9] * Rat(center[i], center[9]));
  return chart_from_parametrization(projected, order);
}

VarietySpec hyperplane_slice(const VarietySpec& spec, int drop_var, const RatVec& coeffs) {
  int nv = spec.nvars();
  if (drop_var < 0 || drop_var >= nv) fail(Errc::BadInput, "slice variable out of range");
  if (static_cast<int>(coeffs.size()) != nv - 1)
    fail(Errc::DimensionMismatch, "slice coefficients must cover the remaining variables");
  std::vector<Poly> images;
  int k = 0;
  Poly h(nv - 1);
  for (int i = 0; i < nv - 1; ++i) {
    Exp e(nv - 1, 0);
    e[i] = 1;
    h.add_term(e, coeffs[i]);
  }
  for (int j = 0; j < nv; ++j) {
    if (j == drop_var) {
      images.push_back(h);
    } else {
      images.push_back(Poly::variable(nv - 1, k));
      ++k;
    }
  }
  std::vector<Poly> gens;
  for (const Poly& g : spec.gens) gens.push_back(g.substitute(images));
  return VarietySpec(spec.ambient_dim - 1, gens, spec.label.empty() ? "" : spec.label + " slice");
}

}  // namespace jetgeom
