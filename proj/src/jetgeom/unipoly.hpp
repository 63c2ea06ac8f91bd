#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace jetgeom {

// Dense univariate polynomial over the rationals. coeff[i] multiplies x^i;
// the representation is normalized (no trailing zeros, empty == zero).
struct UniPoly {
  std::vector<Rat> c;

  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { normalize(); }
  static UniPoly constant(const Rat& a);
  static UniPoly x();

  void normalize();
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  Rat lead() const { return c.empty() ? Rat(0) : c.back(); }
  Rat coeff(int i) const { return i >= 0 && i < static_cast<int>(c.size()) ? c[i] : Rat(0); }

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const Rat& a) const;
  bool operator==(const UniPoly& o) const { return c == o.c; }

  Rat eval(const Rat& x) const;
  UniPoly derivative() const;
  UniPoly monic() const;

  /// Lowest power of x with nonzero coefficient; -1 for zero.
  int order() const;
};

/// Euclidean division, exact over the field of rationals.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Yun's square-free decomposition: p = lead * prod f_i ^ e_i with the f_i
/// monic, square-free, pairwise coprime. Only factors with deg >= 1 are
/// returned, as (factor, exponent) pairs with increasing exponent.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);

/// All rational roots with multiplicities, plus the (monic) root-free
/// cofactor that remains.
struct RationalRoots {
  std::vector<std::pair<Rat, int>> roots;  // sorted ascending
  UniPoly cofactor;                        // no rational roots; constant 1 if fully split
};
RationalRoots rational_roots(const UniPoly& p);

/// Unique interpolating polynomial of degree < points.size().
UniPoly interpolate(const std::vector<std::pair<Rat, Rat>>& points);

}  // namespace jetgeom
