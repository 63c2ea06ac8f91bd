#include "contact.hpp"

#include "errors.hpp"
#include "linalg.hpp"

namespace jetgeom {

LineSpec::LineSpec(RatVec base_point, RatVec direction)
    : base(std::move(base_point)), dir(std::move(direction)) {
  if (base.size() != dir.size()) fail(Errc::DimensionMismatch, "line: base and direction lengths differ");
  if (is_zero_vec(base)) fail(Errc::BadInput, "line: zero base point");
  RatMat m = {base, dir};
  if (rank(m) != 2) fail(Errc::BadInput, "line: direction is proportional to the base point");
}

UniPoly restrict_to_line(const Poly& g, const RatVec& base, const RatVec& dir) {
  if (g.nvars() != static_cast<int>(base.size()) || base.size() != dir.size())
    fail(Errc::DimensionMismatch, "line restriction: variable count mismatch");
  // Cache (base_i + t dir_i)^k as needed.
  std::vector<std::vector<UniPoly>> pows(g.nvars());
  auto power = [&](int i, int k) -> const UniPoly& {
    auto& cache = pows[i];
    if (cache.empty()) cache.push_back(UniPoly::constant(1));
    while (static_cast<int>(cache.size()) <= k) {
      UniPoly lin;
      lin.c = {base[i], dir[i]};
      lin.normalize();
      cache.push_back(cache.back() * lin);
    }
    return cache[k];
  };
  UniPoly acc;
  for (const auto& [e, coeff] : g.terms()) {
    UniPoly term = UniPoly::constant(coeff);
    for (int i = 0; i < g.nvars(); ++i)
      if (e[i] > 0) term = term * power(i, e[i]);
    acc = acc + term;
  }
  return acc;
}

ContactResult contact_order(const VarietySpec& spec, const LineSpec& line, int max_k) {
  if (static_cast<int>(line.base.size()) != spec.nvars())
    fail(Errc::DimensionMismatch, "line does not live in the ambient space of the variety");
  for (const Poly& g : spec.gens)
    if (g.eval(line.base) != 0) fail(Errc::NotOnVariety, "line base point is not on the variety");
  bool all_zero = true;
  int min_ord = max_k + 2;
  for (const Poly& g : spec.gens) {
    UniPoly r = restrict_to_line(g, line.base, line.dir);
    if (r.is_zero()) continue;
    all_zero = false;
    min_ord = std::min(min_ord, r.order());
  }
  ContactResult out;
  if (all_zero) {
    out.contained = true;
    return out;
  }
  out.order = std::min(min_ord - 1, max_k);
  return out;
}

ContactIdeal contact_ideal(const FundForms& ff, int k) {
  if (k < 2 || k > ff.K) fail(Errc::BadInput, "contact level out of range");
  ContactIdeal ci;
  ci.k = k;
  ci.nvars = ff.n;
  for (int j = 2; j <= k; ++j)
    for (int u = 0; u < ff.c; ++u)
      if (!ff.jet_part(j, u).is_zero()) ci.gens.push_back(ff.jet_part(j, u));
  return ci;
}

bool direction_membership(const ContactIdeal& ci, const RatVec& v) {
  if (static_cast<int>(v.size()) != ci.nvars)
    fail(Errc::DimensionMismatch, "direction length != chart dimension");
  if (is_zero_vec(v)) fail(Errc::ZeroVector, "zero vector is not a direction");
  for (const Poly& g : ci.gens)
    if (g.eval(v) != 0) return false;
  return true;
}

namespace {

RatVec coords_of(const Poly& p, const std::vector<Exp>& monomials) {
  RatVec v;
  v.reserve(monomials.size());
  for (const Exp& e : monomials) v.push_back(p.coeff(e));
  return v;
}

// Solve sum_j x_j * cols[j] = target in the space of forms of one degree.
std::optional<RatVec> solve_form_system(const std::vector<Poly>& cols, const Poly& target, int nvars,
                                        int degree) {
  auto monomials = monomials_of_degree(nvars, degree);
  RatMat m = mat_zero(static_cast<int>(monomials.size()), static_cast<int>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) {
    RatVec col = coords_of(cols[j], monomials);
    for (size_t i = 0; i < monomials.size(); ++i) m[i][j] = col[i];
  }
  return solve(m, coords_of(target, monomials));
}

}  // namespace

FubiniReport fubini_test(const FundForms& ff) {
  if (ff.K < 3) fail(Errc::BadInput, "Fubini test needs forms to order 3");
  FubiniReport rep;
  if (ff.c == 0) {
    rep.holds = true;
    return rep;
  }

  // Ideal formulation (authoritative).
  FormSpace ideal3 = ideal_degree_piece(ff.parts[0], 3, ff.n);
  FormSpace f3 = ff.form_space(3);
  rep.residual_dimension = ideal3.join(f3).dim() - ideal3.dim();
  rep.holds = rep.residual_dimension == 0;

  // Coefficient formulation: f^u_3 = sum_{a,v} rho[u][a][v] * w_a f^v_2.
  std::vector<Poly> cols;
  for (int a = 0; a < ff.n; ++a)
    for (int v = 0; v < ff.c; ++v) cols.push_back(Poly::variable(ff.n, a) * ff.jet_part(2, v));
  bool coeff_holds = true;
  for (int u = 0; u < ff.c; ++u) {
    auto sol = solve_form_system(cols, ff.jet_part(3, u), ff.n, 3);
    if (!sol) {
      coeff_holds = false;
      rep.rho.clear();
      break;
    }
    RatMat r = mat_zero(ff.n, ff.c);
    for (int a = 0; a < ff.n; ++a)
      for (int v = 0; v < ff.c; ++v) r[a][v] = (*sol)[a * ff.c + v];
    rep.rho.push_back(std::move(r));
  }
  if (coeff_holds != rep.holds)
    fail(Errc::Contract, "internal: cyclic-sum and ideal formulations of the Fubini test disagree");
  if (!rep.holds) rep.rho.clear();
  return rep;
}

namespace {

std::vector<Poly> rho_linear_forms(const FundForms& ff, const RatMat& rho_u) {
  std::vector<Poly> ls;
  for (int v = 0; v < ff.c; ++v) {
    Poly l(ff.n);
    for (int a = 0; a < ff.n; ++a) {
      Exp e(ff.n, 0);
      e[a] = 1;
      l.add_term(e, rho_u[a][v]);
    }
    ls.push_back(l);
  }
  return ls;
}

}  // namespace

CIWitness ci_test_F4F5(const FundForms& ff, const FubiniReport& report) {
  if (ff.K < 5) fail(Errc::BadInput, "complete-intersection test needs forms to order 5");
  if (!report.holds)
    fail(Errc::Contract, "complete-intersection test requires the Fubini hypothesis to hold");
  CIWitness out;
  if (ff.c == 0) {
    out.passes = true;
    return out;
  }

  // Column polynomials for the symmetric unknowns sigma_{vw}, v <= w.
  std::vector<std::pair<int, int>> idx;
  std::vector<Poly> col4, col5;
  for (int v = 0; v < ff.c; ++v)
    for (int w = v; w < ff.c; ++w) {
      idx.emplace_back(v, w);
      const Poly &f2v = ff.jet_part(2, v), &f2w = ff.jet_part(2, w);
      const Poly &f3v = ff.jet_part(3, v), &f3w = ff.jet_part(3, w);
      col4.push_back(v == w ? f2v * f2w : (f2v * f2w) * Rat(2));
      col5.push_back(v == w ? (f2v * f3v) * Rat(2) : (f2v * f3w + f2w * f3v) * Rat(2));
    }

  auto mon4 = monomials_of_degree(ff.n, 4);
  auto mon5 = monomials_of_degree(ff.n, 5);
  out.passes = true;
  for (int u = 0; u < ff.c; ++u) {
    auto lforms = rho_linear_forms(ff, report.rho[u]);
    Poly rhs4 = ff.jet_part(4, u);
    Poly rhs5 = ff.jet_part(5, u);
    for (int v = 0; v < ff.c; ++v) {
      rhs4 = rhs4 - lforms[v] * ff.jet_part(3, v);
      rhs5 = rhs5 - lforms[v] * ff.jet_part(4, v);
    }
    RatMat m = mat_zero(static_cast<int>(mon4.size() + mon5.size()), static_cast<int>(idx.size()));
    RatVec b;
    for (size_t i = 0; i < mon4.size(); ++i) {
      for (size_t j = 0; j < idx.size(); ++j) m[i][j] = col4[j].coeff(mon4[i]);
      b.push_back(rhs4.coeff(mon4[i]));
    }
    for (size_t i = 0; i < mon5.size(); ++i) {
      for (size_t j = 0; j < idx.size(); ++j) m[mon4.size() + i][j] = col5[j].coeff(mon5[i]);
      b.push_back(rhs5.coeff(mon5[i]));
    }
    auto sol = solve(m, b);
    if (!sol) {
      out.passes = false;
      out.sigma.clear();
      return out;
    }
    RatMat s = mat_zero(ff.c, ff.c);
    for (size_t j = 0; j < idx.size(); ++j) {
      s[idx[j].first][idx[j].second] = (*sol)[j];
      s[idx[j].second][idx[j].first] = (*sol)[j];
    }
    out.sigma.push_back(std::move(s));
  }
  return out;
}

bool verify_witnesses(const FundForms& ff, const FubiniReport& report, const CIWitness& ci) {
  if (!report.holds || !ci.passes) return false;
  for (int u = 0; u < ff.c; ++u) {
    auto lforms = rho_linear_forms(ff, report.rho[u]);
    Poly e3 = ff.jet_part(3, u);
    Poly e4 = ff.jet_part(4, u);
    Poly e5 = ff.jet_part(5, u);
    for (int v = 0; v < ff.c; ++v) {
      e3 = e3 - lforms[v] * ff.jet_part(2, v);
      e4 = e4 - lforms[v] * ff.jet_part(3, v);
      e5 = e5 - lforms[v] * ff.jet_part(4, v);
      for (int w = 0; w < ff.c; ++w) {
        e4 = e4 - ci.sigma[u][v][w] * ff.jet_part(2, v) * ff.jet_part(2, w);
        e5 = e5 - Rat(2) * ci.sigma[u][v][w] * ff.jet_part(2, v) * ff.jet_part(3, w);
      }
    }
    if (!e3.is_zero() || !e4.is_zero() || !e5.is_zero()) return false;
  }
  return true;
}

}  // namespace jetgeom
