#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace jetgeom {

// Exact rationals. mpq_class keeps values canonical (lowest terms, positive
// denominator) as long as every construction goes through the helpers below.
using Rat = mpq_class;
using Int = mpz_class;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

/// Parse "p", "-p", or "p/q". Throws Errc::Parse on malformed input or q = 0.
Rat rat_parse(const std::string& s);

/// Canonical text form: "p" or "p/q" with q > 1.
std::string rat_str(const Rat& q);

std::string ratvec_str(const RatVec& v);

/// Scale to a coprime integer vector with the first nonzero entry positive.
std::vector<Int> primitive_rep(const RatVec& v);

bool is_zero_vec(const RatVec& v);

RatVec ratvec_from_ints(const std::vector<long>& v);

}  // namespace jetgeom
