#include "jets.hpp"

#include <algorithm>

#include "errors.hpp"
#include "linalg.hpp"

namespace jetgeom {

VarietySpec::VarietySpec(int ambient, std::vector<Poly> generators, std::string lbl)
    : ambient_dim(ambient), gens(std::move(generators)), label(std::move(lbl)) {
  if (ambient_dim < 1) fail(Errc::BadInput, "ambient projective dimension must be >= 1");
  for (const Poly& g : gens) {
    if (g.nvars() != ambient_dim + 1)
      fail(Errc::DimensionMismatch, "generator variable count != ambient dimension + 1");
    if (!g.is_homogeneous()) fail(Errc::BadInput, "non-homogeneous generator");
  }
}

RatVec Chart::direction_to_ambient(const RatVec& v) const {
  if (static_cast<int>(v.size()) != n) fail(Errc::DimensionMismatch, "direction length != chart dimension");
  RatVec out(frame.base.size(), Rat(0));
  for (int a = 0; a < n; ++a)
    for (size_t i = 0; i < out.size(); ++i) out[i] += v[a] * frame.tangent[a][i];
  return out;
}

namespace {

Frame identity_frame(int n, int c) {
  int N = n + c;
  Frame fr;
  fr.patch = 0;
  fr.base = RatVec(N + 1, Rat(0));
  fr.base[0] = 1;
  for (int a = 1; a <= n; ++a) {
    RatVec t(N + 1, Rat(0));
    t[a] = 1;
    fr.tangent.push_back(t);
  }
  for (int u = 0; u < c; ++u) {
    RatVec m(N + 1, Rat(0));
    m[n + 1 + u] = 1;
    fr.normal.push_back(m);
  }
  return fr;
}

int pick_patch(const std::vector<Int>& rep) {
  int best = -1;
  Int best_abs = 0;
  for (size_t i = 0; i < rep.size(); ++i) {
    Int a = abs(rep[i]);
    if (a > best_abs) {
      best_abs = a;
      best = static_cast<int>(i);
    }
  }
  return best;
}

RatVec lift_affine(const RatVec& v, int patch) {
  RatVec out;
  out.reserve(v.size() + 1);
  for (size_t i = 0; i <= v.size(); ++i) {
    if (static_cast<int>(i) == patch)
      out.push_back(Rat(0));
    else
      out.push_back(v[i < static_cast<size_t>(patch) ? i : i - 1]);
  }
  return out;
}

}  // namespace

Chart chart_from_graph(const std::vector<Poly>& jets, int order) {
  if (jets.empty()) fail(Errc::BadInput, "chart needs at least one jet");
  if (order < 2) fail(Errc::BadInput, "chart order must be >= 2");
  int n = jets[0].nvars();
  for (const Poly& f : jets) {
    if (f.nvars() != n) fail(Errc::DimensionMismatch, "jets with inconsistent variable counts");
    if (!f.homogeneous_part(0).is_zero() || !f.homogeneous_part(1).is_zero())
      fail(Errc::Adaptedness, "jet has constant or linear terms");
  }
  Chart ch;
  ch.n = n;
  ch.c = static_cast<int>(jets.size());
  ch.order = order;
  for (const Poly& f : jets) ch.jets.push_back(f.truncated(order));
  ch.frame = identity_frame(ch.n, ch.c);
  return ch;
}

Chart chart_from_implicit(const VarietySpec& spec, const RatVec& point, int order) {
  int N = spec.ambient_dim;
  if (order < 2) fail(Errc::BadInput, "chart order must be >= 2");
  if (static_cast<int>(point.size()) != N + 1)
    fail(Errc::DimensionMismatch, "point length != ambient dimension + 1");
  if (is_zero_vec(point)) fail(Errc::BadInput, "zero vector is not a projective point");
  for (const Poly& g : spec.gens)
    if (g.eval(point) != 0) fail(Errc::NotOnVariety, "point does not lie on the variety");

  auto rep = primitive_rep(point);
  int patch = pick_patch(rep);
  RatVec base;
  for (const Int& x : rep) base.emplace_back(x);

  // Dehomogenize and translate the base point to the origin:
  // x_patch -> 1, x_j -> p_j + y_j.
  std::vector<Poly> images;
  int ai = 0;
  for (int j = 0; j <= N; ++j) {
    if (j == patch) {
      images.push_back(Poly::constant(N, 1));
    } else {
      Rat pj = base[j] / base[patch];
      images.push_back(Poly::variable(N, ai) + Poly::constant(N, pj));
      ++ai;
    }
  }
  std::vector<Poly> affine_gens;
  for (const Poly& g : spec.gens) affine_gens.push_back(g.substitute(images));

  int m = static_cast<int>(affine_gens.size());
  RatMat jac = mat_zero(m, N);
  for (int k = 0; k < m; ++k) {
    Poly lin = affine_gens[k].homogeneous_part(1);
    for (const auto& [e, coeff] : lin.terms())
      for (int j = 0; j < N; ++j)
        if (e[j] == 1) jac[k][j] = coeff;
  }

  RatMat red = jac;
  std::vector<int> pivots = rref(red);
  int c = static_cast<int>(pivots.size());
  int n = N - c;
  if (c == 0 && !spec.gens.empty()) {
    bool all_zero = true;
    for (const Poly& g : spec.gens) all_zero = all_zero && g.is_zero();
    if (!all_zero) fail(Errc::SingularPoint, "vanishing differential: singular point");
  }
  std::vector<bool> is_pivot(N, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<int> free_cols;
  for (int j = 0; j < N; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);

  // Tangent directions from the Jacobian kernel; normals at pivot columns.
  std::vector<RatVec> tangent_aff;
  for (int a = 0; a < n; ++a) {
    RatVec v(N, Rat(0));
    v[free_cols[a]] = 1;
    for (int i = 0; i < c; ++i) v[pivots[i]] = -red[i][free_cols[a]];
    tangent_aff.push_back(v);
  }

  // Substitution y = sum_a w_a v_a + sum_mu z_mu e_{pivot mu}; variables are
  // ordered (w_1 .. w_n, z_1 .. z_c).
  std::vector<Poly> mix;
  for (int j = 0; j < N; ++j) {
    Poly yj(N);
    for (int a = 0; a < n; ++a)
      if (tangent_aff[a][j] != 0) yj = yj + Poly::variable(N, a) * tangent_aff[a][j];
    for (int i = 0; i < c; ++i)
      if (pivots[i] == j) yj = yj + Poly::variable(N, n + i);
    mix.push_back(yj);
  }
  std::vector<Poly> h;
  for (const Poly& g : affine_gens) h.push_back(g.substitute(mix));

  // Row combinations with unit z-linear part: R * (dgens/dz)(0) = I_c.
  RatMat aug = mat_zero(m, c + m);
  for (int k = 0; k < m; ++k) {
    for (int i = 0; i < c; ++i) aug[k][i] = jac[k][pivots[i]];
    aug[k][c + k] = 1;
  }
  rref(aug);
  std::vector<Poly> hhat;
  for (int i = 0; i < c; ++i) {
    Poly combo(N);
    for (int k = 0; k < m; ++k)
      if (aug[i][c + k] != 0) combo = combo + h[k] * aug[i][c + k];
    hhat.push_back(combo);
  }

  // Degree-by-degree solution of hhat(w, f(w)) = 0.
  std::vector<Poly> f(c, Poly::zero(n));
  auto substitute_jets = [&](const Poly& p, int trunc) {
    std::vector<Poly> im;
    for (int a = 0; a < n; ++a) im.push_back(Poly::variable(n, a));
    for (int i = 0; i < c; ++i) im.push_back(f[i]);
    return p.substitute(im, trunc);
  };
  for (int d = 2; d <= order; ++d) {
    for (int i = 0; i < c; ++i) {
      Poly residual = substitute_jets(hhat[i], d).homogeneous_part(d);
      f[i] = f[i] - residual;
    }
  }
  for (const Poly& gk : h) {
    if (!substitute_jets(gk, order).is_zero())
      fail(Errc::SingularPoint, "back substitution residual: point is singular or not smooth of the computed codimension");
  }

  Chart ch;
  ch.n = n;
  ch.c = c;
  ch.order = order;
  ch.jets = f;
  ch.frame.patch = patch;
  ch.frame.base = base;
  for (const RatVec& t : tangent_aff) ch.frame.tangent.push_back(lift_affine(t, patch));
  for (int i = 0; i < c; ++i) {
    RatVec u(N, Rat(0));
    u[pivots[i]] = 1;
    ch.frame.normal.push_back(lift_affine(u, patch));
  }
  return ch;
}

Chart chart_from_parametrization(const std::vector<Poly>& psi, int order) {
  if (psi.size() < 2) fail(Errc::BadInput, "parametrization needs >= 2 coordinates");
  if (order < 2) fail(Errc::BadInput, "chart order must be >= 2");
  int nparams = psi[0].nvars();
  int N = static_cast<int>(psi.size()) - 1;
  RatVec p0;
  for (const Poly& coord : psi) {
    if (coord.nvars() != nparams) fail(Errc::DimensionMismatch, "parametrization variable mismatch");
    p0.push_back(coord.constant_term());
  }
  if (is_zero_vec(p0)) fail(Errc::BadInput, "parametrization origin maps to the zero vector");
  auto rep = primitive_rep(p0);
  int patch = pick_patch(rep);
  RatVec base;
  for (const Int& x : rep) base.emplace_back(x);

  // Power-series inverse of the patch coordinate.
  Rat d0 = p0[patch];
  Poly u = psi[patch] * (Rat(1) / d0) - Poly::constant(nparams, 1);
  Poly inv = Poly::constant(nparams, 1);
  Poly upow = Poly::constant(nparams, 1);
  for (int k = 1; k <= order; ++k) {
    upow = (upow * u).truncated(order);
    inv = inv + upow * Rat((k % 2) ? -1 : 1);
  }
  inv = inv * (Rat(1) / d0);

  std::vector<Poly> phi;  // N affine coordinates, constant part removed
  for (int j = 0; j <= N; ++j) {
    if (j == patch) continue;
    Poly aj = (psi[j] * inv).truncated(order);
    phi.push_back(aj - Poly::constant(nparams, aj.constant_term()));
  }

  RatMat jt = mat_zero(nparams, N);  // transpose of the affine Jacobian
  for (int r = 0; r < N; ++r) {
    Poly lin = phi[r].homogeneous_part(1);
    for (const auto& [e, coeff] : lin.terms())
      for (int a = 0; a < nparams; ++a)
        if (e[a] == 1) jt[a][r] = coeff;
  }
  RatMat jtr = jt;
  std::vector<int> prow = rref(jtr);  // pivot rows of the Jacobian
  if (static_cast<int>(prow.size()) != nparams)
    fail(Errc::BadInput, "parametrization is not an immersion at the origin");
  int n = nparams;
  int c = N - n;
  std::vector<bool> is_pivot(N, false);
  for (int p : prow) is_pivot[p] = true;

  // Invert the n pivot coordinates as series in new variables xi.
  RatMat lin(n, RatVec(n, Rat(0)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) lin[a][b] = jt[b][prow[a]];
  auto linv = inverse(lin);
  if (!linv) fail(Errc::BadInput, "parametrization inversion failed");
  std::vector<Poly> w;  // w(xi)
  for (int b = 0; b < n; ++b) {
    Poly wb(n);
    for (int a = 0; a < n; ++a) {
      Exp e(n, 0);
      e[a] = 1;
      wb.add_term(e, (*linv)[b][a]);
    }
    w.push_back(wb);
  }
  for (int d = 2; d <= order; ++d) {
    std::vector<Poly> residual;
    for (int a = 0; a < n; ++a) {
      Poly r = phi[prow[a]].substitute(w, d) - Poly::variable(n, a);
      residual.push_back(r.homogeneous_part(d));
    }
    for (int b = 0; b < n; ++b) {
      Poly corr(n);
      for (int a = 0; a < n; ++a)
        if ((*linv)[b][a] != 0) corr = corr + residual[a] * (*linv)[b][a];
      w[b] = w[b] - corr;
    }
  }

  Chart ch;
  ch.n = n;
  ch.c = c;
  ch.order = order;
  ch.frame.patch = patch;
  ch.frame.base = base;
  RatMat eta_lin(c, RatVec(n, Rat(0)));
  int mu = 0;
  for (int r = 0; r < N; ++r) {
    if (is_pivot[r]) continue;
    Poly e = phi[r].substitute(w, order);
    Poly l = e.homogeneous_part(1);
    for (const auto& [ex, coeff] : l.terms())
      for (int a = 0; a < n; ++a)
        if (ex[a] == 1) eta_lin[mu][a] = coeff;
    ch.jets.push_back(e - l - e.homogeneous_part(0));
    ++mu;
  }
  for (int a = 0; a < n; ++a) {
    RatVec t(N, Rat(0));
    t[prow[a]] = 1;
    int m2 = 0;
    for (int r = 0; r < N; ++r) {
      if (is_pivot[r]) continue;
      t[r] = eta_lin[m2][a];
      ++m2;
    }
    ch.frame.tangent.push_back(lift_affine(t, patch));
  }
  mu = 0;
  for (int r = 0; r < N; ++r) {
    if (is_pivot[r]) continue;
    RatVec nvec(N, Rat(0));
    nvec[r] = 1;
    ch.frame.normal.push_back(lift_affine(nvec, patch));
    ++mu;
  }
  return ch;
}

const Poly& FundForms::jet_part(int k, int u) const {
  if (k < 2 || k > K) fail(Errc::BadInput, "form degree out of range");
  if (u < 0 || u >= c) fail(Errc::BadInput, "normal index out of range");
  return parts[k - 2][u];
}

Poly FundForms::form(int k, int u) const {
  Rat factorial = 1;
  for (int i = 2; i <= k; ++i) factorial *= i;
  return jet_part(k, u) * factorial;
}

RatMat FundForms::q_matrix(int u) const {
  const Poly& f2 = jet_part(2, u);
  RatMat q = mat_zero(n, n);
  for (const auto& [e, coeff] : f2.terms()) {
    int a = -1, b = -1;
    for (int i = 0; i < n; ++i) {
      if (e[i] == 2) a = b = i;
      if (e[i] == 1) (a < 0 ? a : b) = i;
    }
    if (a == b) {
      q[a][a] = coeff * 2;
    } else {
      q[a][b] = coeff;
      q[b][a] = coeff;
    }
  }
  return q;
}

FormSpace FundForms::form_space(int k) const {
  if (k < 2 || k > K) fail(Errc::BadInput, "form degree out of range");
  return FormSpace(n, k, parts[k - 2]);
}

FundForms fundamental_forms(const Chart& chart, int K) {
  if (K < 2 || K > 5) fail(Errc::BadInput, "fundamental forms are computed for orders 2..5");
  if (chart.order < K) fail(Errc::BadInput, "chart order too small for requested forms");
  FundForms ff;
  ff.n = chart.n;
  ff.c = chart.c;
  ff.K = K;
  for (int k = 2; k <= K; ++k) {
    std::vector<Poly> level;
    for (int u = 0; u < chart.c; ++u) level.push_back(chart.jets[u].homogeneous_part(k));
    ff.parts.push_back(level);
  }
  return ff;
}

std::optional<std::string> generality_warning(const Chart& chart) {
  FundForms here = fundamental_forms(chart, std::min(chart.order, 3));
  int dim2 = here.form_space(2).dim();
  int dim3 = here.K >= 3 ? here.form_space(3).dim() : 0;

  // Deterministic pseudo-random offsets of height <= 10.
  unsigned long long state = 0x9e3779b97f4a7c15ull;
  auto next = [&state]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  for (int sample = 0; sample < 5; ++sample) {
    RatVec w0;
    for (int a = 0; a < chart.n; ++a) {
      long num = static_cast<long>(next() % 5) - 2;  // -2..2
      long den = 7 + static_cast<long>(next() % 4);  // 7..10
      w0.emplace_back(num, den);
      w0.back().canonicalize();
    }
    if (is_zero_vec(w0)) w0[0] = Rat(1, 9);
    // Recenter the truncated jets at w0 and strip the linear part.
    std::vector<Poly> shifted;
    for (const Poly& f : chart.jets) {
      std::vector<Poly> im;
      for (int a = 0; a < chart.n; ++a)
        im.push_back(Poly::variable(chart.n, a) + Poly::constant(chart.n, w0[a]));
      Poly g = f.substitute(im);
      shifted.push_back(g - g.homogeneous_part(1) - g.homogeneous_part(0));
    }
    Chart nearby = chart_from_graph(shifted, chart.order);
    FundForms there = fundamental_forms(nearby, std::min(chart.order, 3));
    int d2 = there.form_space(2).dim();
    int d3 = there.K >= 3 ? there.form_space(3).dim() : 0;
    if (d2 != dim2 || d3 != dim3) {
      return "base point may be special: dim|F2|,dim|F3| = (" + std::to_string(dim2) + "," +
             std::to_string(dim3) + ") here vs (" + std::to_string(d2) + "," + std::to_string(d3) +
             ") at a sampled nearby point";
    }
  }
  return std::nullopt;
}

}  // namespace jetgeom
