#include "unipoly.hpp"

#include <algorithm>

#include "errors.hpp"

namespace jetgeom {

UniPoly UniPoly::constant(const Rat& a) {
  UniPoly p;
  p.c.push_back(a);
  p.normalize();
  return p;
}

UniPoly UniPoly::x() {
  UniPoly p;
  p.c = {Rat(0), Rat(1)};
  return p;
}

void UniPoly::normalize() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  UniPoly out;
  out.c.resize(std::max(c.size(), o.c.size()), Rat(0));
  for (size_t i = 0; i < c.size(); ++i) out.c[i] += c[i];
  for (size_t i = 0; i < o.c.size(); ++i) out.c[i] += o.c[i];
  out.normalize();
  return out;
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  UniPoly out;
  out.c.resize(std::max(c.size(), o.c.size()), Rat(0));
  for (size_t i = 0; i < c.size(); ++i) out.c[i] += c[i];
  for (size_t i = 0; i < o.c.size(); ++i) out.c[i] -= o.c[i];
  out.normalize();
  return out;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  UniPoly out;
  out.c.assign(c.size() + o.c.size() - 1, Rat(0));
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = 0; j < o.c.size(); ++j) out.c[i + j] += c[i] * o.c[j];
  out.normalize();
  return out;
}

UniPoly UniPoly::operator*(const Rat& a) const {
  if (a == 0) return UniPoly();
  UniPoly out = *this;
  for (Rat& q : out.c) q *= a;
  return out;
}

Rat UniPoly::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  UniPoly out;
  for (size_t i = 1; i < c.size(); ++i) out.c.push_back(c[i] * Rat(static_cast<long>(i)));
  out.normalize();
  return out;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return UniPoly();
  return *this * (Rat(1) / lead());
}

int UniPoly::order() const {
  for (size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) return static_cast<int>(i);
  return -1;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) fail(Errc::BadInput, "division by zero polynomial");
  UniPoly rem = a, quot;
  int db = b.degree();
  if (a.degree() >= db) quot.c.assign(a.degree() - db + 1, Rat(0));
  while (!rem.is_zero() && rem.degree() >= db) {
    int k = rem.degree() - db;
    Rat f = rem.lead() / b.lead();
    quot.c[k] = f;
    for (int i = 0; i <= db; ++i) rem.c[k + i] -= f * b.c[i];
    rem.normalize();
  }
  quot.normalize();
  return {quot, rem};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = y;
    y = r;
  }
  return x.monic();
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
  std::vector<std::pair<UniPoly, int>> out;
  if (p.is_zero() || p.degree() == 0) return out;
  UniPoly a = p.monic();
  UniPoly g = gcd(a, a.derivative());
  if (g.degree() == 0) {
    out.emplace_back(a, 1);
    return out;
  }
  UniPoly b = divmod(a, g).first;
  UniPoly c = divmod(a.derivative(), g).first;
  UniPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    UniPoly f = gcd(b, d);
    if (f.degree() > 0) out.emplace_back(f, i);
    b = divmod(b, f).first;
    c = divmod(d, f).first;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

namespace {

std::vector<Int> positive_divisors(Int n) {
  if (n < 0) n = -n;
  std::vector<Int> out, upper;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) upper.push_back(n / d);
    }
  }
  out.insert(out.end(), upper.rbegin(), upper.rend());
  return out;
}

// Rational roots of a square-free polynomial, by the rational root bound on
// the integer-cleared coefficients.
std::vector<Rat> roots_of_squarefree(const UniPoly& f, UniPoly& cofactor) {
  std::vector<Rat> roots;
  UniPoly g = f;
  // factor out x^k
  while (!g.is_zero() && g.c[0] == 0) {
    roots.push_back(Rat(0));
    g.c.erase(g.c.begin());
  }
  if (g.degree() < 1) {
    cofactor = g.monic();
    return roots;
  }
  // clear denominators
  Int lcm = 1;
  for (const Rat& q : g.c) {
    Int den = q.get_den(), gg;
    mpz_gcd(gg.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    lcm = lcm / gg * den;
  }
  std::vector<Int> ic;
  for (const Rat& q : g.c) ic.push_back(q.get_num() * (lcm / q.get_den()));
  std::vector<Int> ps = positive_divisors(ic.front());
  std::vector<Int> qs = positive_divisors(ic.back());
  std::vector<Rat> candidates;
  for (const Int& p : ps)
    for (const Int& q : qs) {
      Rat r(p, q);
      r.canonicalize();
      candidates.push_back(r);
      candidates.push_back(-r);
    }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const Rat& r : candidates) {
    if (g.degree() < 1) break;
    if (g.eval(r) == 0) {
      roots.push_back(r);
      UniPoly lin;  // x - r
      lin.c = {-r, Rat(1)};
      g = divmod(g, lin).first;
      // square-free: each root appears once
    }
  }
  cofactor = g.monic();
  return roots;
}

}  // namespace

RationalRoots rational_roots(const UniPoly& p) {
  RationalRoots out;
  out.cofactor = UniPoly::constant(1);
  if (p.is_zero()) fail(Errc::BadInput, "rational_roots of zero polynomial");
  for (const auto& [f, e] : squarefree_decomposition(p)) {
    UniPoly cof;
    for (const Rat& r : roots_of_squarefree(f, cof)) out.roots.emplace_back(r, e);
    for (int k = 0; k < e; ++k) out.cofactor = out.cofactor * cof;
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

UniPoly interpolate(const std::vector<std::pair<Rat, Rat>>& points) {
  UniPoly acc;
  for (size_t i = 0; i < points.size(); ++i) {
    UniPoly term = UniPoly::constant(points[i].second);
    for (size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      UniPoly lin;
      lin.c = {-points[j].first, Rat(1)};
      term = term * lin * (Rat(1) / (points[i].first - points[j].first));
    }
    acc = acc + term;
  }
  return acc;
}

}  // namespace jetgeom
