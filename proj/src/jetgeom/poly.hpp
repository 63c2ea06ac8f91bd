#pragma once

#include <map>
#include <string>
#include <vector>

#include "rational.hpp"

namespace jetgeom {

// Exponent vector of a monomial; length = number of variables.
using Exp = std::vector<int>;

int exp_degree(const Exp& e);

// Graded reverse lexicographic order. Total degree first; ties broken at the
// rightmost differing exponent, where the larger entry is the *smaller*
// monomial.
bool grevlex_less(const Exp& a, const Exp& b);

struct GrevlexLess {
  bool operator()(const Exp& a, const Exp& b) const { return grevlex_less(a, b); }
};

using TermMap = std::map<Exp, Rat, GrevlexLess>;

// Sparse multivariate polynomial over the rationals. Stored zero coefficients
// are never kept, so structural equality is semantic equality and iteration
// order (grevlex ascending) is canonical.
class Poly {
 public:
  explicit Poly(int nvars = 0) : nvars_(nvars) {}

  static Poly zero(int nvars) { return Poly(nvars); }
  static Poly constant(int nvars, const Rat& c);
  static Poly variable(int nvars, int i);
  static Poly monomial(int nvars, const Exp& e, const Rat& c);

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  Poly homogeneous_part(int d) const;
  Poly truncated(int maxdeg) const;
  Rat coeff(const Exp& e) const;
  Rat constant_term() const;

  void add_term(const Exp& e, const Rat& c);

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& c) const;
  bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Rat eval(const RatVec& point) const;

  Poly partial(int var) const;

  /// Composition p(images[0], ..., images[nvars-1]). All images must share a
  /// variable count. Intermediate and final results are truncated to degree
  /// `trunc` when trunc >= 0.
  Poly substitute(const std::vector<Poly>& images, int trunc = -1) const;

  /// p(M w): precompose with the linear map w -> M w (M is nvars x nvars_new).
  Poly linear_change(const RatMat& m) const;

  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  int nvars_;
  TermMap terms_;
};

Poly operator*(const Rat& c, const Poly& p);

/// Variable name sets used in reports: x0..xN (ambient), w1..wn (chart).
std::vector<std::string> ambient_names(int count);
std::vector<std::string> chart_names(int count);

/// All exponent vectors of the given total degree, grevlex descending.
std::vector<Exp> monomials_of_degree(int nvars, int d);

long monomial_count(int nvars, int d);

}  // namespace jetgeom
