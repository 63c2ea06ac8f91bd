#include "rational.hpp"

#include <sstream>

#include "errors.hpp"

namespace jetgeom {

namespace {

bool valid_int_token(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rat rat_parse(const std::string& s) {
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int_token(num) || !valid_int_token(den))
    fail(Errc::Parse, "malformed rational '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);  // mpz rejects a leading plus
  if (den[0] == '+') den.erase(0, 1);
  Int n(num), d(den);
  if (d == 0) fail(Errc::Parse, "zero denominator in '" + s + "'");
  Rat q(n, d);
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

std::string ratvec_str(const RatVec& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += rat_str(v[i]);
  }
  return out + ")";
}

std::vector<Int> primitive_rep(const RatVec& v) {
  Int lcm = 1;
  for (const Rat& q : v) {
    Int d = q.get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
    lcm = lcm / g * d;
  }
  std::vector<Int> out;
  out.reserve(v.size());
  Int gcd = 0;
  for (const Rat& q : v) {
    Int t = q.get_num() * (lcm / q.get_den());
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), t.get_mpz_t());
    out.push_back(t);
  }
  if (gcd != 0) {
    int sign = 0;
    for (Int& t : out) {
      t /= gcd;
      if (sign == 0 && t != 0) sign = sgn(t);
    }
    if (sign < 0)
      for (Int& t : out) t = -t;
  }
  return out;
}

bool is_zero_vec(const RatVec& v) {
  for (const Rat& q : v)
    if (q != 0) return false;
  return true;
}

RatVec ratvec_from_ints(const std::vector<long>& v) {
  RatVec out;
  out.reserve(v.size());
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace jetgeom
