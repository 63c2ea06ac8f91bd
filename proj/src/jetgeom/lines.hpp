#pragma once

#include <vector>

#include "contact.hpp"
#include "poly.hpp"

namespace jetgeom {

// Homogeneous binary form of a stated degree: coeff[i] multiplies
// s^(degree-i) t^i. The zero form keeps its degree marker.
struct BinaryForm {
  int degree = 0;
  RatVec coeff;

  BinaryForm() = default;
  BinaryForm(int d, RatVec c);
  bool is_zero() const;
};

/// Restriction of a homogeneous F to the line spanned by two points, as a
/// binary form in the spanning parameters (s, t).
BinaryForm restrict_binary(const Poly& f, const LineSpec& line);

bool line_in_hypersurface(const Poly& f, const LineSpec& line);

// Twist degrees a_1 <= ... <= a_(n-1) of the normal bundle of a line inside a
// degree-d hypersurface of P^(n+1): the kernel of the restricted-partials map
// O(1)^n -> O(d).
struct SplittingType {
  std::vector<int> degrees;  // ascending

  int sum() const;
};

/// Computes the splitting type from exact syzygy-space dimensions of the
/// restricted partial derivatives, one twist at a time, then checks that the
/// recovered type reproduces every dimension across the whole twist window.
SplittingType splitting_type(const Poly& f, const LineSpec& line);

struct CoskunCheck {
  SplittingType split;
  bool sum_ok = false;            // sum a_i == n - d
  bool a1_negative = false;       // min a_i < 0
  bool covers_impossible = false; // d >= n+1, which forces a_1 < 0
};

CoskunCheck coskun_check(const Poly& f, const LineSpec& line);

}  // namespace jetgeom
