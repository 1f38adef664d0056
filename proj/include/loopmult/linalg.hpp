#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "loopmult/rational.hpp"

namespace loopmult {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

inline RatMat mat_mul(const RatMat& a, const RatMat& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  RatMat out(n, RatVec(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (a[i][j] == 0) continue;
      for (std::size_t t = 0; t < m; ++t) out[i][t] += a[i][j] * b[j][t];
    }
  return out;
}

// In-place reduced row echelon form; returns the pivot column per surviving
// row. Pivoting is first-nonzero-column, first-row: fully deterministic.
inline std::vector<int> rref(RatMat& a) {
  std::vector<int> pivots;
  if (a.empty()) return pivots;
  std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        sel = i;
        break;
      }
    if (sel == rows) continue;
    std::swap(a[r], a[sel]);
    Rat inv = a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] /= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  a.resize(r, RatVec(cols, 0));
  return pivots;
}

inline int rank(RatMat a) { return static_cast<int>(rref(a).size()); }

// Canonical basis (RREF rows) of the row span.
inline RatMat row_space(RatMat a) {
  rref(a);
  return a;
}

inline bool in_row_space(const RatMat& rref_rows, const std::vector<int>& pivots, RatVec v) {
  for (std::size_t i = 0; i < rref_rows.size(); ++i) {
    Rat f = v[pivots[i]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * rref_rows[i][j];
  }
  for (auto& x : v)
    if (x != 0) return false;
  return true;
}

// Basis of {x : A x = 0}, one row per kernel basis vector, canonical given
// the RREF pivots (free variables in increasing column order).
inline RatMat kernel_basis(RatMat a, std::size_t cols) {
  std::vector<int> pivots = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  RatMat out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][free];
    out.push_back(std::move(v));
  }
  return out;
}

struct AffineSolution {
  RatVec particular;
  RatMat nullspace;  // rows
};

// Exact solve of A x = b; nullopt when inconsistent.
inline std::optional<AffineSolution> solve_affine(const RatMat& a, const RatVec& b) {
  std::size_t rows = a.size();
  std::size_t cols = rows == 0 ? 0 : a[0].size();
  RatMat aug(rows, RatVec(cols + 1, 0));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
    aug[i][cols] = b[i];
  }
  std::vector<int> pivots = rref(aug);
  for (int p : pivots)
    if (p == static_cast<int>(cols)) return std::nullopt;
  AffineSolution sol;
  sol.particular.assign(cols, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) sol.particular[pivots[i]] = aug[i][cols];
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -aug[i][free];
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

}  // namespace loopmult
