#include "linalg.hpp"

#include "errors.hpp"

namespace jetgeom {

RatMat mat_zero(int rows, int cols) { return RatMat(rows, RatVec(cols, Rat(0))); }

RatMat mat_identity(int n) {
  RatMat m = mat_zero(n, n);
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RatMat mat_transpose(const RatMat& m) {
  if (m.empty()) return m;
  RatMat t = mat_zero(static_cast<int>(m[0].size()), static_cast<int>(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

RatMat mat_mul(const RatMat& a, const RatMat& b) {
  if (a.empty() || b.empty()) return {};
  size_t n = a.size(), k = b.size(), m = b[0].size();
  if (a[0].size() != k) fail(Errc::DimensionMismatch, "matrix product shape mismatch");
  RatMat out = mat_zero(static_cast<int>(n), static_cast<int>(m));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

RatVec mat_vec(const RatMat& a, const RatVec& v) {
  RatVec out(a.size(), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != v.size()) fail(Errc::DimensionMismatch, "matrix-vector shape mismatch");
    for (size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  }
  return out;
}

bool mat_is_symmetric(const RatMat& m) {
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != m.size()) return false;
    for (size_t j = i + 1; j < m.size(); ++j)
      if (m[i][j] != m[j][i]) return false;
  }
  return true;
}

std::vector<int> rref(RatMat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[r], m[p]);
    Rat inv = Rat(1) / m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(RatMat m) { return static_cast<int>(rref(m).size()); }

Rat det(RatMat m) {
  int n = static_cast<int>(m.size());
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n) fail(Errc::DimensionMismatch, "det of non-square matrix");
  Rat d = 1;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (m[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) return Rat(0);
    if (p != c) {
      std::swap(m[c], m[p]);
      d = -d;
    }
    d *= m[c][c];
    Rat inv = Rat(1) / m[c][c];
    for (int i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] * inv;
      for (int j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return d;
}

std::optional<RatMat> inverse(const RatMat& m) {
  int n = static_cast<int>(m.size());
  RatMat aug = m;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(m[i].size()) != n) fail(Errc::DimensionMismatch, "inverse of non-square matrix");
    for (int j = 0; j < n; ++j) aug[i].push_back(i == j ? Rat(1) : Rat(0));
  }
  auto pivots = rref(aug);
  if (static_cast<int>(pivots.size()) != n) return std::nullopt;
  RatMat inv = mat_zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

std::optional<RatVec> solve(const RatMat& a, const RatVec& b) {
  int rows = static_cast<int>(a.size());
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  if (static_cast<int>(b.size()) != rows) fail(Errc::DimensionMismatch, "solve: rhs length mismatch");
  if (rows == 0) return RatVec(cols, Rat(0));
  RatMat aug = a;
  for (int i = 0; i < rows; ++i) aug[i].push_back(b[i]);
  auto pivots = rref(aug);
  RatVec x(cols, Rat(0));
  for (size_t k = 0; k < pivots.size(); ++k) {
    if (pivots[k] == cols) return std::nullopt;  // pivot in the rhs column
    x[pivots[k]] = aug[k][cols];
  }
  return x;
}

std::vector<RatVec> nullspace(const RatMat& a) {
  int rows = static_cast<int>(a.size());
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  RatMat m = a;
  auto pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(cols, Rat(0));
    v[f] = 1;
    for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m[k][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace jetgeom
