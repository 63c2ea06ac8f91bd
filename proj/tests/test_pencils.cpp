#include <doctest.h>

#include "jetgeom/errors.hpp"
#include "jetgeom/jets.hpp"
#include "jetgeom/linalg.hpp"
#include "jetgeom/pencils.hpp"

using namespace jetgeom;

namespace {

RatMat m3(std::initializer_list<std::initializer_list<long>> rows) {
  RatMat m;
  for (const auto& r : rows) {
    RatVec row;
    for (long x : r) row.emplace_back(x);
    m.push_back(row);
  }
  return m;
}

Poly var(int nv, int i) { return Poly::variable(nv, i); }

QuadricPencil pencil(std::initializer_list<std::initializer_list<long>> a,
                     std::initializer_list<std::initializer_list<long>> b) {
  return make_pencil(m3(a), m3(b));
}

// Shared taxonomy representatives (n = 3).
QuadricPencil rep_four_distinct() { return pencil({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {{1, 0, 0}, {0, 2, 0}, {0, 0, 3}}); }
QuadricPencil rep_two_double() { return pencil({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {{0, 0, 0}, {0, 1, 0}, {0, 0, 1}}); }
QuadricPencil rep_double_plus_two() { return pencil({{0, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}); }
QuadricPencil rep_quadruple() { return pencil({{0, 0, 0}, {0, 1, 0}, {0, 0, 0}}, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}); }
QuadricPencil rep_triple_plus_one() { return pencil({{0, 0, -1}, {0, 2, 0}, {-1, 0, 0}}, {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}}); }
QuadricPencil rep_seg() { return pencil({{0, 0, 1}, {0, 0, 0}, {1, 0, 0}}, {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}}); }
QuadricPencil rep_squares() { return pencil({{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}, {{0, 0, 0}, {0, 1, 0}, {0, 0, 0}}); }
QuadricPencil rep_single_smooth() { return pencil({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}); }
QuadricPencil rep_single_singular() { return pencil({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}, {{2, 0, 0}, {0, 2, 0}, {0, 0, 0}}); }
QuadricPencil rep_single_rank1() { return pencil({{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}, {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}); }
QuadricPencil rep_zero() { return pencil({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}, {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}); }

}  // namespace

TEST_CASE("pencil extraction from fundamental forms") {
  Poly f4(3), f5(3);
  for (int a = 0; a < 3; ++a) {
    f4 = f4 + var(3, a) * var(3, a);
    f5 = f5 + var(3, a) * var(3, a) * Rat(a + 1);
  }
  QuadricPencil p = pencil_extract(fundamental_forms(chart_from_graph({f4, f5}, 5), 5));
  CHECK(p.span_dim == 2);
  for (int a = 0; a < 3; ++a) {
    CHECK(p.A[a][a] == 2);
    CHECK(p.B[a][a] == Rat(2 * (a + 1)));
  }

  QuadricPencil dep = pencil_extract(fundamental_forms(chart_from_graph({f4, f4 * Rat(2)}, 5), 5));
  CHECK(dep.span_dim == 1);

  QuadricPencil zero = pencil_extract(fundamental_forms(chart_from_graph({Poly::zero(3), Poly::zero(3)}, 5), 5));
  CHECK(zero.span_dim == 0);
}

TEST_CASE("pencil normalization") {
  PencilNormalization n1 = pencil_normalize(rep_four_distinct());
  CHECK(n1.lambda == std::vector<Rat>{Rat(1), Rat(2), Rat(3)});
  CHECK(n1.transform == mat_identity(3));
  CHECK(n1.gram == RatVec{Rat(1), Rat(1), Rat(1)});

  QuadricPencil p2 = pencil({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
  PencilNormalization n2 = pencil_normalize(p2);
  CHECK(n2.lambda == std::vector<Rat>{Rat(-1), Rat(1), Rat(1)});
  // exact congruence: P^T A P and P^T B P diagonal with ratio lambda
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Rat aij = 0, bij = 0;
      for (int r = 0; r < 3; ++r)
        for (int s = 0; s < 3; ++s) {
          aij += n2.transform[r][i] * p2.A[r][s] * n2.transform[s][j];
          bij += n2.transform[r][i] * p2.B[r][s] * n2.transform[s][j];
        }
      if (i != j) {
        CHECK(aij == 0);
        CHECK(bij == 0);
      } else {
        CHECK(aij == n2.gram[i]);
        CHECK(bij == n2.gram[i] * n2.lambda[i]);
      }
    }

  // non-diagonalizable pair: double root with a one-dimensional eigenspace
  QuadricPencil jordan = pencil({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}, {{1, 0, 0}, {0, 0, 0}, {0, 0, 1}});
  CHECK_THROWS_WITH_AS(pencil_normalize(jordan), doctest::Contains("eigenspace"), Error);

  // irrational eigenvalues, with the characteristic polynomial in the message
  QuadricPencil irr = pencil({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {{1, 1, 0}, {1, -1, 0}, {0, 0, 5}});
  CHECK_THROWS_WITH_AS(pencil_normalize(irr), doctest::Contains("characteristic polynomial"), Error);

  // every member singular
  QuadricPencil deg = rep_squares();
  CHECK_THROWS_AS(pencil_normalize(deg), Error);
}

TEST_CASE("base locus multiplicities") {
  // {x^2 - z^2, y^2 - z^2}: four rational points
  QuadricPencil p1 = pencil({{1, 0, 0}, {0, 0, 0}, {0, 0, -1}}, {{0, 0, 0}, {0, 1, 0}, {0, 0, -1}});
  CHECK(base_locus_multiplicities(p1) == std::vector<int>{1, 1, 1, 1});

  // {xy, z^2}: two double points
  QuadricPencil p2 = pencil({{0, 1, 0}, {1, 0, 0}, {0, 0, 0}}, {{0, 0, 0}, {0, 0, 0}, {0, 0, 1}});
  CHECK(base_locus_multiplicities(p2) == std::vector<int>{2, 2});

  // {xy, x^2 - y^2}: a single fourfold point, all members singular
  QuadricPencil p3 = pencil({{0, 1, 0}, {1, 0, 0}, {0, 0, 0}}, {{1, 0, 0}, {0, -1, 0}, {0, 0, 0}});
  CHECK(base_locus_multiplicities(p3) == std::vector<int>{4});

  // common component
  QuadricPencil shared = pencil({{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}, {{0, 1, 0}, {1, 0, 0}, {0, 0, 0}});
  CHECK_THROWS_AS(base_locus_multiplicities(shared), Error);
}

TEST_CASE("pencil classification on the taxonomy representatives") {
  CHECK(pencil_classify(rep_four_distinct()).tag == PencilTag::FourDistinct);
  CHECK(pencil_classify(rep_two_double()).tag == PencilTag::TwoDouble);
  CHECK(pencil_classify(rep_double_plus_two()).tag == PencilTag::DoublePlusTwo);
  CHECK(pencil_classify(rep_quadruple()).tag == PencilTag::Quadruple);
  CHECK(pencil_classify(rep_triple_plus_one()).tag == PencilTag::TriplePlusOne);
  CHECK(pencil_classify(rep_seg()).tag == PencilTag::DegenerateSeg);
  CHECK(pencil_classify(rep_squares()).tag == PencilTag::DegenerateSquares);
  CHECK(pencil_classify(rep_single_smooth()).tag == PencilTag::SingleRankGe2);
  CHECK(pencil_classify(rep_single_singular()).tag == PencilTag::SingleRankGe2);
  CHECK(pencil_classify(rep_single_rank1()).tag == PencilTag::SingleRank1);
  CHECK(pencil_classify(rep_zero()).tag == PencilTag::Zero);

  CHECK(pencil_classify(rep_four_distinct()).partition == std::vector<int>{1, 1, 1, 1});
  CHECK(pencil_classify(rep_double_plus_two()).partition == std::vector<int>{2, 1, 1});
  CHECK(pencil_classify(rep_quadruple()).partition == std::vector<int>{4});
  CHECK(pencil_classify(rep_triple_plus_one()).partition == std::vector<int>{3, 1});

  // {l^2, l m}: a degenerate pencil outside the two normal-form families
  QuadricPencil gamma = pencil({{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}, {{0, 1, 0}, {1, 0, 0}, {0, 0, 0}});
  CHECK(pencil_classify(gamma).tag == PencilTag::Unrecognized);
}

TEST_CASE("degenerate dual flag") {
  CHECK_FALSE(pencil_classify(rep_four_distinct()).degenerate_dual);
  CHECK_FALSE(pencil_classify(rep_two_double()).degenerate_dual);
  CHECK_FALSE(pencil_classify(rep_double_plus_two()).degenerate_dual);
  CHECK_FALSE(pencil_classify(rep_quadruple()).degenerate_dual);
  CHECK_FALSE(pencil_classify(rep_triple_plus_one()).degenerate_dual);
  CHECK(pencil_classify(rep_seg()).degenerate_dual);
  CHECK(pencil_classify(rep_squares()).degenerate_dual);
  CHECK_FALSE(pencil_classify(rep_single_smooth()).degenerate_dual);
  CHECK(pencil_classify(rep_single_singular()).degenerate_dual);
  CHECK(pencil_classify(rep_single_rank1()).degenerate_dual);
  CHECK(pencil_classify(rep_zero()).degenerate_dual);

  // flag matches det(sA + tB) == 0 or a singular single quadric
  for (const QuadricPencil& p :
       {rep_four_distinct(), rep_seg(), rep_squares(), rep_single_smooth(), rep_single_singular()}) {
    PencilClass pc = pencil_classify(p);
    bool detv = true;
    for (const Rat& coeff : pencil_det_form(p)) detv = detv && coeff == 0;
    bool expected = p.span_dim == 2 ? detv : (p.span_dim == 0 || rank(p.A) < p.n);
    CHECK(pc.degenerate_dual == expected);
  }
}

TEST_CASE("classification is congruence and basis invariant") {
  unsigned long long seed = 0xc0ffee11ull;
  auto next = [&seed]() {
    seed ^= seed << 13;
    seed ^= seed >> 7;
    seed ^= seed << 17;
    return seed;
  };
  std::vector<QuadricPencil> reps = {rep_four_distinct(), rep_two_double(),      rep_double_plus_two(),
                                     rep_quadruple(),     rep_triple_plus_one(), rep_seg(),
                                     rep_squares(),       rep_single_smooth(),   rep_single_singular(),
                                     rep_single_rank1(),  rep_zero()};
  for (const QuadricPencil& p : reps) {
    PencilTag expected = pencil_classify(p).tag;
    for (int trial = 0; trial < 5; ++trial) {
      RatMat l = mat_zero(3, 3);
      do {
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) l[i][j] = Rat(static_cast<long>(next() % 7) - 3);
      } while (det(l) == 0);
      RatMat lt = mat_transpose(l);
      RatMat a2 = mat_mul(lt, mat_mul(p.A, l));
      RatMat b2 = mat_mul(lt, mat_mul(p.B, l));
      // also replace the basis of the span
      long c11 = 1 + static_cast<long>(next() % 3), c12 = static_cast<long>(next() % 3);
      long c21 = static_cast<long>(next() % 3), c22 = 1 + static_cast<long>(next() % 3);
      if (c11 * c22 == c12 * c21) c12 = c11 * c22 + 1;  // keep the change invertible
      RatMat a3 = mat_zero(3, 3), b3 = mat_zero(3, 3);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          a3[i][j] = Rat(c11) * a2[i][j] + Rat(c12) * b2[i][j];
          b3[i][j] = Rat(c21) * a2[i][j] + Rat(c22) * b2[i][j];
        }
      if (p.span_dim == 2)
        CHECK(pencil_classify(make_pencil(a3, b3)).tag == expected);
      else
        CHECK(pencil_classify(make_pencil(a2, b2)).tag == expected);
    }
  }
}

TEST_CASE("Bezout: partitions always sum to four") {
  for (const QuadricPencil& p :
       {rep_four_distinct(), rep_two_double(), rep_double_plus_two(), rep_quadruple(), rep_triple_plus_one()}) {
    auto parts = base_locus_multiplicities(p);
    int sum = 0;
    for (int m : parts) sum += m;
    CHECK(sum == 4);
  }
}

TEST_CASE("eigenvalue structure is consistent with the partition path") {
  // distinct eigenvalues => four distinct base points
  PencilNormalization n = pencil_normalize(rep_four_distinct());
  CHECK(n.lambda[0] != n.lambda[1]);
  CHECK(n.lambda[1] != n.lambda[2]);
  CHECK(pencil_classify(rep_four_distinct()).tag == PencilTag::FourDistinct);
  // 1,(n-1) eigenvalue split with n = 3 => two double points
  PencilNormalization n2 = pencil_normalize(rep_two_double());
  CHECK(((n2.lambda[0] == n2.lambda[1]) != (n2.lambda[1] == n2.lambda[2])));
  CHECK(pencil_classify(rep_two_double()).tag == PencilTag::TwoDouble);
}

TEST_CASE("pencils in more than three variables") {
  RatMat id4 = mat_identity(4);
  RatMat diag4 = mat_zero(4, 4);
  for (int i = 0; i < 4; ++i) diag4[i][i] = Rat(i + 1);
  CHECK(pencil_classify(make_pencil(id4, diag4)).tag == PencilTag::FourDistinct);

  RatMat split = mat_zero(4, 4);
  for (int i = 1; i < 4; ++i) split[i][i] = 1;
  CHECK(pencil_classify(make_pencil(id4, split)).tag == PencilTag::TwoDouble);

  RatMat two_two = mat_zero(4, 4);
  two_two[0][0] = two_two[1][1] = 1;
  CHECK(pencil_classify(make_pencil(id4, two_two)).tag == PencilTag::Unrecognized);

  // Segre normal form padded to four variables (the cone case)
  RatMat sa = mat_zero(4, 4), sb = mat_zero(4, 4);
  sa[0][2] = sa[2][0] = 1;
  sb[1][2] = sb[2][1] = 1;
  CHECK(pencil_classify(make_pencil(sa, sb)).tag == PencilTag::DegenerateSeg);

  RatMat qa = mat_zero(4, 4), qb = mat_zero(4, 4);
  qa[0][0] = 1;
  qb[1][1] = 1;
  CHECK(pencil_classify(make_pencil(qa, qb)).tag == PencilTag::DegenerateSquares);

  // degenerate but of generic rank 3: outside the taxonomy
  RatMat ra = mat_zero(4, 4), rb = mat_zero(4, 4);
  for (int i = 0; i < 3; ++i) {
    ra[i][i] = 1;
    rb[i][i] = Rat(i + 1);
  }
  CHECK(pencil_classify(make_pencil(ra, rb)).tag == PencilTag::Unrecognized);
}

TEST_CASE("irrational eigenvalues still classify through the resultant path") {
  // char poly (l^2 - 3l + 1)(5 - l): two irrational roots
  QuadricPencil p = pencil({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {{1, 1, 0}, {1, 2, 0}, {0, 0, 5}});
  CHECK_THROWS_AS(pencil_normalize(p), Error);
  PencilClass pc = pencil_classify(p);
  CHECK(pc.tag == PencilTag::FourDistinct);
  CHECK(pc.partition == std::vector<int>{1, 1, 1, 1});
}
