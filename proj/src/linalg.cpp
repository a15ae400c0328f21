#include "coxdec/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace coxdec {

namespace {

int first_nonzero_in_col(const CycMat& a, int col, int from) {
  for (int i = from; i < static_cast<int>(a.size()); ++i)
    if (!a[i][col].is_zero()) return i;
  return -1;
}

}  // namespace

int rank_of(CycMat a) {
  if (a.empty()) return 0;
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(a[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = first_nonzero_in_col(a, c, r);
    if (p < 0) continue;
    std::swap(a[p], a[r]);
    CycReal inv = a[r][c].inverse();
    for (int j = c; j < cols; ++j) a[r][j] = a[r][j] * inv;
    for (int i = r + 1; i < rows; ++i) {
      if (a[i][c].is_zero()) continue;
      CycReal f = a[i][c];
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

int kernel_dimension(const CycMat& a) {
  if (a.empty()) return 0;
  return static_cast<int>(a[0].size()) - rank_of(a);
}

int determinant_sign(CycMat a) {
  const int n = static_cast<int>(a.size());
  int sign = 1;
  for (int c = 0; c < n; ++c) {
    int p = first_nonzero_in_col(a, c, c);
    if (p < 0) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      sign = -sign;
    }
    int s = a[c][c].sign();
    if (s < 0) sign = -sign;
    CycReal inv = a[c][c].inverse();
    for (int i = c + 1; i < n; ++i) {
      if (a[i][c].is_zero()) continue;
      CycReal f = a[i][c] * inv;
      for (int j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return sign;
}

bool is_positive_definite(const CycMat& gram) {
  const int n = static_cast<int>(gram.size());
  for (int k = 1; k <= n; ++k) {
    CycMat minor(k, std::vector<CycReal>());
    for (int i = 0; i < k; ++i)
      minor[i] = std::vector<CycReal>(gram[i].begin(), gram[i].begin() + k);
    if (determinant_sign(std::move(minor)) <= 0) return false;
  }
  return true;
}

bool is_positive_semidefinite(CycMat gram) {
  const int n = static_cast<int>(gram.size());
  std::vector<bool> done(n, false);
  for (;;) {
    int p = -1;
    for (int i = 0; i < n; ++i)
      if (!done[i] && !gram[i][i].is_zero()) { p = i; break; }
    if (p < 0) break;
    if (gram[p][p].sign() < 0) return false;
    // Schur complement on the active block
    CycReal inv = gram[p][p].inverse();
    for (int i = 0; i < n; ++i) {
      if (done[i] || i == p || gram[i][p].is_zero()) continue;
      CycReal f = gram[i][p] * inv;
      for (int j = 0; j < n; ++j)
        if (!done[j] && j != p) gram[i][j] -= f * gram[p][j];
    }
    done[p] = true;
  }
  // active block has an all-zero diagonal; PSD iff it is entirely zero
  for (int i = 0; i < n; ++i) {
    if (done[i]) continue;
    for (int j = 0; j < n; ++j)
      if (!done[j] && !gram[i][j].is_zero()) return false;
  }
  return true;
}

const char* gram_kind_name(GramKind k) {
  switch (k) {
    case GramKind::kFinite: return "finite";
    case GramKind::kAffine: return "affine";
    case GramKind::kIndefinite: return "indefinite";
  }
  return "?";
}

GramKind classify_gram(const CycMat& gram) {
  if (is_positive_definite(gram)) return GramKind::kFinite;
  if (is_positive_semidefinite(gram) && kernel_dimension(gram) == 1)
    return GramKind::kAffine;
  return GramKind::kIndefinite;
}

int rank_of_rows(const std::vector<std::vector<Rational>>& rows) {
  auto a = rows;
  if (a.empty()) return 0;
  const int m = static_cast<int>(a.size());
  const int n = static_cast<int>(a[0].size());
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    int p = -1;
    for (int i = r; i < m; ++i)
      if (a[i][c] != 0) { p = i; break; }
    if (p < 0) continue;
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][c];
    for (int j = c; j < n; ++j) a[r][j] *= inv;
    for (int i = r + 1; i < m; ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (int j = c; j < n; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

bool in_row_span(const std::vector<std::vector<Rational>>& rows,
                 const std::vector<Rational>& target) {
  int base = rank_of_rows(rows);
  auto extended = rows;
  extended.push_back(target);
  return rank_of_rows(extended) == base;
}

}  // namespace coxdec
