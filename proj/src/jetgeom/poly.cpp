#include "poly.hpp"

#include <algorithm>
#include <sstream>

#include "errors.hpp"

namespace jetgeom {

int exp_degree(const Exp& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

bool grevlex_less(const Exp& a, const Exp& b) {
  int da = exp_degree(a), db = exp_degree(b);
  if (da != db) return da < db;
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

Poly Poly::constant(int nvars, const Rat& c) {
  Poly p(nvars);
  p.add_term(Exp(nvars, 0), c);
  return p;
}

Poly Poly::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) fail(Errc::BadInput, "variable index out of range");
  Exp e(nvars, 0);
  e[i] = 1;
  return monomial(nvars, e, 1);
}

Poly Poly::monomial(int nvars, const Exp& e, const Rat& c) {
  if (static_cast<int>(e.size()) != nvars) fail(Errc::DimensionMismatch, "exponent length != nvars");
  Poly p(nvars);
  p.add_term(e, c);
  return p;
}

int Poly::degree() const {
  if (terms_.empty()) return -1;
  return exp_degree(terms_.rbegin()->first);
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = exp_degree(terms_.begin()->first);
  return d == exp_degree(terms_.rbegin()->first);
}

Poly Poly::homogeneous_part(int d) const {
  Poly out(nvars_);
  for (const auto& [e, c] : terms_)
    if (exp_degree(e) == d) out.terms_.emplace(e, c);
  return out;
}

Poly Poly::truncated(int maxdeg) const {
  Poly out(nvars_);
  for (const auto& [e, c] : terms_)
    if (exp_degree(e) <= maxdeg) out.terms_.emplace(e, c);
  return out;
}

Rat Poly::coeff(const Exp& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat Poly::constant_term() const { return coeff(Exp(nvars_, 0)); }

void Poly::add_term(const Exp& e, const Rat& c) {
  if (static_cast<int>(e.size()) != nvars_) fail(Errc::DimensionMismatch, "exponent length != nvars");
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

Poly Poly::operator+(const Poly& o) const {
  if (nvars_ != o.nvars_) fail(Errc::DimensionMismatch, "polynomial variable counts differ");
  Poly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

Poly Poly::operator-(const Poly& o) const {
  if (nvars_ != o.nvars_) fail(Errc::DimensionMismatch, "polynomial variable counts differ");
  Poly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

Poly Poly::operator*(const Poly& o) const {
  if (nvars_ != o.nvars_) fail(Errc::DimensionMismatch, "polynomial variable counts differ");
  Poly out(nvars_);
  Exp e(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Poly Poly::operator*(const Rat& c) const {
  Poly out(nvars_);
  if (c == 0) return out;
  for (const auto& [e, k] : terms_) out.terms_.emplace(e, k * c);
  return out;
}

Poly operator*(const Rat& c, const Poly& p) { return p * c; }

Rat Poly::eval(const RatVec& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    fail(Errc::DimensionMismatch, "evaluation point length != nvars");
  Rat total = 0;
  for (const auto& [e, c] : terms_) {
    Rat term = c;
    for (int i = 0; i < nvars_; ++i) {
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    }
    total += term;
  }
  return total;
}

Poly Poly::partial(int var) const {
  if (var < 0 || var >= nvars_) fail(Errc::BadInput, "partial: variable index out of range");
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exp d = e;
    d[var] -= 1;
    out.add_term(d, c * e[var]);
  }
  return out;
}

Poly Poly::substitute(const std::vector<Poly>& images, int trunc) const {
  if (static_cast<int>(images.size()) != nvars_)
    fail(Errc::DimensionMismatch, "substitute: image count != nvars");
  int m = images.empty() ? 0 : images[0].nvars();
  for (const Poly& im : images)
    if (im.nvars() != m) fail(Errc::DimensionMismatch, "substitute: inconsistent image nvars");

  // Cache powers of each image as successive truncated products.
  std::vector<std::vector<Poly>> powers(nvars_);
  auto power = [&](int i, int k) -> const Poly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Poly::constant(m, 1));
    while (static_cast<int>(cache.size()) <= k) {
      Poly next = cache.back() * images[i];
      if (trunc >= 0) next = next.truncated(trunc);
      cache.push_back(next);
    }
    return cache[k];
  };

  Poly out(m);
  for (const auto& [e, c] : terms_) {
    Poly term = Poly::constant(m, c);
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      term = term * power(i, e[i]);
      if (trunc >= 0) term = term.truncated(trunc);
    }
    out = out + term;
  }
  if (trunc >= 0) out = out.truncated(trunc);
  return out;
}

Poly Poly::linear_change(const RatMat& mat) const {
  if (static_cast<int>(mat.size()) != nvars_)
    fail(Errc::DimensionMismatch, "linear_change: matrix rows != nvars");
  int m = mat.empty() ? 0 : static_cast<int>(mat[0].size());
  std::vector<Poly> images;
  images.reserve(nvars_);
  for (int i = 0; i < nvars_; ++i) {
    Poly li(m);
    for (int j = 0; j < m; ++j) {
      Exp e(m, 0);
      e[j] = 1;
      li.add_term(e, mat[i][j]);
    }
    images.push_back(li);
  }
  return substitute(images);
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // grevlex descending, leading term first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool has_vars = exp_degree(e) > 0;
    if (!has_vars || a != 1) os << a << (has_vars ? "*" : "");
    bool firstvar = true;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!firstvar) os << "*";
      firstvar = false;
      if (i < static_cast<int>(names.size()))
        os << names[i];
      else
        os << "x" << i;
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

std::vector<std::string> ambient_names(int count) {
  std::vector<std::string> out;
  for (int i = 0; i < count; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

std::vector<std::string> chart_names(int count) {
  std::vector<std::string> out;
  for (int i = 0; i < count; ++i) out.push_back("w" + std::to_string(i + 1));
  return out;
}

namespace {
void enumerate_exps(int nvars, int pos, int remaining, Exp& cur, std::vector<Exp>& out) {
  if (pos == nvars - 1) {
    cur[pos] = remaining;
    out.push_back(cur);
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    cur[pos] = k;
    enumerate_exps(nvars, pos + 1, remaining - k, cur, out);
  }
  cur[pos] = 0;
}
}  // namespace

std::vector<Exp> monomials_of_degree(int nvars, int d) {
  std::vector<Exp> out;
  if (nvars <= 0 || d < 0) return out;
  Exp cur(nvars, 0);
  enumerate_exps(nvars, 0, d, cur, out);
  std::sort(out.begin(), out.end(), [](const Exp& a, const Exp& b) { return grevlex_less(b, a); });
  return out;
}

long monomial_count(int nvars, int d) {
  // C(d + nvars - 1, nvars - 1)
  long num = 1, den = 1;
  for (int i = 1; i <= nvars - 1; ++i) {
    num *= d + i;
    den *= i;
  }
  return num / den;
}

}  // namespace jetgeom
