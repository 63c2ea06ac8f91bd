#include <doctest.h>

#include "jetgeom/classify.hpp"
#include "jetgeom/contact.hpp"
#include "jetgeom/errors.hpp"
#include "jetgeom/linalg.hpp"

using namespace jetgeom;

namespace {

Poly var(int nv, int i) { return Poly::variable(nv, i); }

Poly mono(int nv, std::initializer_list<int> exps, long num, long den = 1) {
  Exp e(exps);
  Rat c(num, den);
  c.canonicalize();
  return Poly::monomial(nv, e, c);
}

RatVec pt(std::initializer_list<long> xs) {
  RatVec p;
  for (long x : xs) p.emplace_back(x);
  return p;
}

Chart quadric_pair_chart(std::initializer_list<long> lambdas) {
  int n = static_cast<int>(lambdas.size());
  Poly f4(n), f5(n);
  int a = 0;
  for (long l : lambdas) {
    f4 = f4 + var(n, a) * var(n, a);
    f5 = f5 + var(n, a) * var(n, a) * Rat(l);
    ++a;
  }
  return chart_from_graph({f4, f5}, 5);
}

}  // namespace

TEST_CASE("contact order basics") {
  // smooth quadric containing the line x2 = x3 = 0
  VarietySpec ruled(3, {mono(4, {1, 0, 0, 1}, 1) + mono(4, {0, 1, 1, 0}, -1)});
  LineSpec line(pt({1, 0, 0, 0}), pt({0, 1, 0, 0}));
  ContactResult res = contact_order(ruled, line, 6);
  CHECK(res.contained);

  // graph closure of z = w1^2 + w2^2: tangent lines see order 1
  VarietySpec graph(3, {mono(4, {1, 0, 0, 1}, 1) + mono(4, {0, 2, 0, 0}, -1) + mono(4, {0, 0, 2, 0}, -1)});
  ContactResult tangent = contact_order(graph, LineSpec(pt({1, 0, 0, 0}), pt({0, 1, 0, 0})), 6);
  CHECK_FALSE(tangent.contained);
  CHECK(tangent.order == 1);

  // graph of z = w1^2 w2, direction (1,1,0): restriction is -t^3
  VarietySpec cubic(3, {mono(4, {2, 0, 0, 1}, 1) + mono(4, {0, 2, 1, 0}, -1)});
  ContactResult c2 = contact_order(cubic, LineSpec(pt({1, 0, 0, 0}), pt({0, 1, 1, 0})), 6);
  CHECK_FALSE(c2.contained);
  CHECK(c2.order == 2);

  CHECK_THROWS_AS(contact_order(graph, LineSpec(pt({1, 1, 0, 0}), pt({0, 1, 0, 0})), 6), Error);
}

TEST_CASE("contact order ignores scaling of the line data") {
  VarietySpec graph(3, {mono(4, {1, 0, 0, 1}, 1) + mono(4, {0, 2, 0, 0}, -1) + mono(4, {0, 0, 2, 0}, -1)});
  RatVec base = pt({1, 0, 0, 0}), dir = pt({0, 1, 2, 0});
  ContactResult a = contact_order(graph, LineSpec(base, dir), 6);
  RatVec base2 = base, dir2 = dir;
  for (Rat& x : base2) x *= Rat(3, 7);
  for (Rat& x : dir2) x *= Rat(-5, 2);
  ContactResult b = contact_order(graph, LineSpec(base2, dir2), 6);
  CHECK(a.contained == b.contained);
  CHECK(a.order == b.order);
}

TEST_CASE("contact ideals") {
  FundForms pair = fundamental_forms(quadric_pair_chart({1, 2, 3}), 5);
  ContactIdeal ci2 = contact_ideal(pair, 2);
  CHECK(ci2.gens.size() == 2);

  Chart lin = chart_from_graph({Poly::zero(2), Poly::zero(2)}, 3);
  ContactIdeal empty = contact_ideal(fundamental_forms(lin, 3), 3);
  CHECK(empty.gens.empty());

  Chart cubic = chart_from_graph({mono(2, {2, 1}, 1)}, 3);
  ContactIdeal ci3 = contact_ideal(fundamental_forms(cubic, 3), 3);
  REQUIRE(ci3.gens.size() == 1);
  CHECK(ci3.gens[0] == mono(2, {2, 1}, 1));

  CHECK_THROWS_AS(contact_ideal(pair, 6), Error);
}

TEST_CASE("direction membership") {
  // pencil {w1^2 - w3^2, w2^2 - w3^2}: (1,1,1) is a base point
  Chart ch = chart_from_graph({mono(3, {2, 0, 0}, 1) + mono(3, {0, 0, 2}, -1),
                               mono(3, {0, 2, 0}, 1) + mono(3, {0, 0, 2}, -1)},
                              3);
  ContactIdeal ci = contact_ideal(fundamental_forms(ch, 3), 2);
  CHECK(direction_membership(ci, pt({1, 1, 1})));
  CHECK(direction_membership(ci, pt({1, -1, 1})));
  CHECK_FALSE(direction_membership(ci, pt({1, 0, 0})));

  Chart lin = chart_from_graph({Poly::zero(3)}, 3);
  ContactIdeal zero_ideal = contact_ideal(fundamental_forms(lin, 3), 3);
  CHECK(direction_membership(zero_ideal, pt({5, -2, 1})));

  FundForms pair = fundamental_forms(quadric_pair_chart({1, 2, 3}), 5);
  CHECK_FALSE(direction_membership(contact_ideal(pair, 2), pt({1, 0, 0})));
  CHECK_THROWS_AS(direction_membership(ci, pt({0, 0, 0})), Error);
}

TEST_CASE("Fubini test on diagonal quadric pairs") {
  FundForms pair = fundamental_forms(quadric_pair_chart({1, 2, 3}), 5);
  FubiniReport rep = fubini_test(pair);
  CHECK(rep.holds);
  CHECK(rep.residual_dimension == 0);
  for (const RatMat& r : rep.rho)
    for (const RatVec& row : r)
      for (const Rat& x : row) CHECK(x == 0);
}

TEST_CASE("Fubini failure: a cubic outside the ideal") {
  Poly f4 = var(3, 0) * var(3, 0) + var(3, 1) * var(3, 1) + var(3, 2) * var(3, 2);
  Poly f5 = mono(3, {3, 0, 0}, 1);
  Chart ch = chart_from_graph({f4, f5}, 5);
  FubiniReport rep = fubini_test(fundamental_forms(ch, 5));
  CHECK_FALSE(rep.holds);
  CHECK(rep.residual_dimension == 1);

  // independent oracle: rank of {w_b * (sum w^2)} against w1^3
  auto mons = monomials_of_degree(3, 3);
  RatMat m = mat_zero(4, static_cast<int>(mons.size()));
  for (int b = 0; b < 3; ++b) {
    Poly col = var(3, b) * f4;
    for (size_t j = 0; j < mons.size(); ++j) m[b][j] = col.coeff(mons[j]);
  }
  for (size_t j = 0; j < mons.size(); ++j) m[3][j] = f5.coeff(mons[j]);
  CHECK(rank(m) == 4);  // f5 is independent of the ideal piece
}

TEST_CASE("Fubini ideal formulation agrees with the witness formulation") {
  std::vector<Chart> cases;
  cases.push_back(quadric_pair_chart({1, 2, 3}));
  cases.push_back(chart_from_graph({mono(3, {2, 0, 0}, 1), mono(3, {0, 1, 1}, 1)}, 5));
  cases.push_back(chart_from_graph(
      {var(3, 0) * var(3, 0) + var(3, 1) * var(3, 1) + var(3, 2) * var(3, 2), mono(3, {3, 0, 0}, 1)}, 5));
  Poly f1 = mono(3, {0, 2, 0}, 1, 2) + mono(3, {0, 0, 2}, 1, 2);
  Poly f2 = mono(3, {1, 1, 0}, 1) + mono(3, {0, 0, 2}, 1, 2);
  cases.push_back(chart_from_graph({f1, f2 + (var(3, 0) + var(3, 2) * Rat(2)) * f1}, 5));
  for (const Chart& ch : cases) {
    FundForms ff = fundamental_forms(ch, std::min(ch.order, 5));
    FubiniReport rep = fubini_test(ff);  // internal cross-assert would throw on mismatch
    FormSpace piece = ideal_degree_piece(ff.parts[0], 3, ff.n);
    CHECK(rep.holds == subspace_contains(piece, ff.form_space(3)));
  }
}

TEST_CASE("complete-intersection witness on the two-quadric family") {
  // All r vanish: passes with zero witnesses.
  FundForms pair = fundamental_forms(quadric_pair_chart({1, 2, 3}), 5);
  FubiniReport rep = fubini_test(pair);
  CIWitness ci = ci_test_F4F5(pair, rep);
  CHECK(ci.passes);
  for (const RatMat& s : ci.sigma)
    for (const RatVec& row : s)
      for (const Rat& x : row) CHECK(x == 0);
  CHECK(verify_witnesses(pair, rep, ci));

  // R = 1 member of the family: sigma^4_{55} = -R.
  ExampleParams params;
  params.R = 1;
  params.lambda = {Rat(1), Rat(2), Rat(3)};
  GeneratedExample ex = example_generate(1, params);
  REQUIRE(ex.spec);
  Chart chart = chart_from_implicit(*ex.spec, ex.suggested_point, 5);
  FundForms ff = fundamental_forms(chart, 5);
  FubiniReport frep = fubini_test(ff);
  REQUIRE(frep.holds);
  CIWitness witness = ci_test_F4F5(ff, frep);
  REQUIRE(witness.passes);
  CHECK(witness.sigma[0][1][1] == -1);
  CHECK(witness.sigma[0][0][0] == 0);
  CHECK(witness.sigma[0][0][1] == 0);
  CHECK(verify_witnesses(ff, frep, witness));
}

TEST_CASE("complete-intersection witness with every parameter active") {
  ExampleParams params;
  params.R = 2;
  params.U = 1;
  params.V = Rat(-1);
  params.W = 3;
  params.lambda = {Rat(1), Rat(2), Rat(3)};
  params.rho = {Rat(1), Rat(0), Rat(2)};
  GeneratedExample ex = example_generate(1, params);
  Chart chart = chart_from_implicit(*ex.spec, ex.suggested_point, 5);
  FundForms ff = fundamental_forms(chart, 5);
  FubiniReport rep = fubini_test(ff);
  REQUIRE(rep.holds);
  // the normalized witness: rho^5_{a4} = rho_a, all other entries zero
  for (int a = 0; a < 3; ++a) {
    CHECK(rep.rho[0][a][0] == 0);
    CHECK(rep.rho[0][a][1] == 0);
    CHECK(rep.rho[1][a][0] == params.rho[a]);
    CHECK(rep.rho[1][a][1] == 0);
  }
  CIWitness ci = ci_test_F4F5(ff, rep);
  REQUIRE(ci.passes);
  CHECK(ci.sigma[0][1][1] == -params.R);
  CHECK(ci.sigma[1][0][0] == -params.W);
  CHECK(ci.sigma[1][1][1] == params.U);
  CHECK(ci.sigma[1][0][1] == params.V / 2);
  CHECK(verify_witnesses(ff, rep, ci));
}

TEST_CASE("complete-intersection test failure and contract") {
  Poly f4(3), f5(3);
  for (int a = 0; a < 3; ++a) {
    f4 = f4 + var(3, a) * var(3, a);
    f5 = f5 + var(3, a) * var(3, a) * Rat(a + 1);
  }
  Chart bad = chart_from_graph({f4, f5 + mono(3, {4, 0, 0}, 1)}, 5);
  FundForms ff = fundamental_forms(bad, 5);
  FubiniReport rep = fubini_test(ff);
  REQUIRE(rep.holds);  // the quartic does not disturb degree 3
  CIWitness ci = ci_test_F4F5(ff, rep);
  CHECK_FALSE(ci.passes);

  Chart fail_chart = chart_from_graph({f4, mono(3, {3, 0, 0}, 1)}, 5);
  FundForms ff2 = fundamental_forms(fail_chart, 5);
  FubiniReport rep2 = fubini_test(ff2);
  REQUIRE_FALSE(rep2.holds);
  CHECK_THROWS_AS(ci_test_F4F5(ff2, rep2), Error);
}

TEST_CASE("oracle equivalence: line contact vs form-ideal membership") {
  // Deterministic suite over several varieties, rational points, and
  // directions: substitution contact order against membership in the contact
  // ideals of the chart, for k = 2..5.
  struct Item {
    VarietySpec spec;
    std::vector<RatVec> points;
  };
  std::vector<Item> pool;

  {  // smooth quadric surface x0 x3 = x1 x2
    VarietySpec s(3, {mono(4, {1, 0, 0, 1}, 1) + mono(4, {0, 1, 1, 0}, -1)});
    pool.push_back({s, {pt({1, 1, 1, 1}), pt({1, 2, 3, 6}), pt({1, -1, 2, -2})}});
  }
  {  // quadric x0 x3 = x1^2 + x2^2
    VarietySpec s(3, {mono(4, {1, 0, 0, 1}, 1) + mono(4, {0, 2, 0, 0}, -1) + mono(4, {0, 0, 2, 0}, -1)});
    pool.push_back({s, {pt({1, 0, 0, 0}), pt({1, 1, 2, 5}), pt({1, 3, 1, 10})}});
  }
  {  // twisted cubic
    VarietySpec s(3, {mono(4, {1, 0, 1, 0}, 1) + mono(4, {0, 2, 0, 0}, -1),
                      mono(4, {1, 0, 0, 1}, 1) + mono(4, {0, 1, 1, 0}, -1),
                      mono(4, {0, 1, 0, 1}, 1) + mono(4, {0, 0, 2, 0}, -1)});
    pool.push_back({s, {pt({1, 0, 0, 0}), pt({1, 1, 1, 1}), pt({1, 2, 4, 8})}});
  }
  {  // Fermat cubic surface
    Poly f(4);
    for (int i = 0; i < 4; ++i) {
      Exp e(4, 0);
      e[i] = 3;
      f.add_term(e, 1);
    }
    pool.push_back({VarietySpec(3, {f}), {pt({1, -1, 0, 0}), pt({1, -1, 2, -2}), pt({2, -2, 1, -1})}});
  }
  {  // Segre P1 x P2
    Poly m1 = mono(6, {1, 0, 0, 0, 1, 0}, 1) + mono(6, {0, 1, 0, 1, 0, 0}, -1);
    Poly m2 = mono(6, {1, 0, 0, 0, 0, 1}, 1) + mono(6, {0, 0, 1, 1, 0, 0}, -1);
    Poly m3 = mono(6, {0, 1, 0, 0, 0, 1}, 1) + mono(6, {0, 0, 1, 0, 1, 0}, -1);
    VarietySpec s(5, {m1, m2, m3});
    pool.push_back({s, {pt({1, 0, 0, 0, 0, 0}), pt({1, 1, 2, 3, 3, 6}), pt({1, -1, 1, 2, -2, 2})}});
  }
  {  // complete intersection of two quadrics (lambda = 1,2,3)
    int nv = 6;
    Poly g1 = mono(nv, {1, 0, 0, 0, 1, 0}, 1);
    Poly g2 = mono(nv, {1, 0, 0, 0, 0, 1}, 1);
    for (int a = 1; a <= 3; ++a) {
      Exp e(nv, 0);
      e[a] = 2;
      g1 = g1 + Poly::monomial(nv, e, -1);
      g2 = g2 + Poly::monomial(nv, e, Rat(-a));
    }
    VarietySpec s(5, {g1, g2});
    pool.push_back({s, {pt({1, 0, 0, 0, 0, 0}), pt({1, 1, 1, 1, 3, 6}), pt({1, 2, 0, 1, 5, 7})}});
  }
  {  // plane conic, a curve case
    VarietySpec s(2, {mono(3, {1, 0, 1}, 1) + mono(3, {0, 2, 0}, -1)});
    pool.push_back({s, {pt({1, 0, 0}), pt({1, 2, 4}), pt({1, -3, 9})}});
  }

  unsigned long long seed = 0xfeedbeefull;
  auto next = [&seed]() {
    seed ^= seed << 13;
    seed ^= seed >> 7;
    seed ^= seed << 17;
    return seed;
  };

  int triples = 0;
  for (const Item& item : pool) {
    for (const RatVec& point : item.points) {
      Chart chart = chart_from_implicit(item.spec, point, 5);
      FundForms ff = fundamental_forms(chart, 5);
      std::vector<ContactIdeal> ideals;
      for (int k = 2; k <= 5; ++k) ideals.push_back(contact_ideal(ff, k));
      for (int trial = 0; trial < 3; ++trial) {
        RatVec v(chart.n, Rat(0));
        bool nonzero = false;
        for (int a = 0; a < chart.n; ++a) {
          long x = static_cast<long>(next() % 5) - 2;
          v[a] = x;
          nonzero = nonzero || x != 0;
        }
        if (!nonzero) v[0] = 1;
        RatVec ambient = chart.direction_to_ambient(v);
        ContactResult co = contact_order(item.spec, LineSpec(point, ambient), 5);
        ++triples;
        for (int k = 2; k <= 5; ++k) {
          bool contact_ge_k = co.contained || co.order >= k;
          bool member = direction_membership(ideals[k - 2], v);
          CHECK(contact_ge_k == member);
        }
      }
    }
  }
  CHECK(triples >= 50);
}
