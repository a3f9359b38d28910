#pragma once

#include <optional>
#include <vector>

#include "mkdv/poly.hpp"

namespace mkdv {

template <class F>
using Matrix = std::vector<std::vector<F>>;

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row. Pivots are chosen among invertible entries, so this also works
/// over Dual<Rat> as long as the value matrix has the same rank.
template <class F>
std::vector<int> row_reduce(Matrix<F>& a, int ncols) {
  std::vector<int> pivots;
  int row = 0;
  const int nrows = static_cast<int>(a.size());
  for (int col = 0; col < ncols && row < nrows; ++col) {
    int sel = -1;
    for (int r = row; r < nrows; ++r) {
      if (is_unit(a[r][col])) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(a[row], a[sel]);
    const F inv = F(1) / a[row][col];
    for (auto& v : a[row]) v = v * inv;
    for (int r = 0; r < nrows; ++r) {
      if (r == row || a[r][col] == F(0)) continue;
      const F factor = a[r][col];
      for (size_t c = 0; c < a[r].size(); ++c) a[r][c] -= factor * a[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/// Solves A x = b exactly. Returns nullopt when inconsistent. Free variables
/// are set to zero.
template <class F>
std::optional<std::vector<F>> solve(Matrix<F> a, const std::vector<F>& b, int ncols) {
  for (size_t r = 0; r < a.size(); ++r) {
    a[r].resize(static_cast<size_t>(ncols), F(0));
    a[r].push_back(b[r]);
  }
  const auto pivots = row_reduce(a, ncols);
  for (size_t r = pivots.size(); r < a.size(); ++r) {
    for (int c = 0; c < ncols; ++c) {
      // Only reachable over Dual<Rat>: a pure-infinitesimal entry left behind.
      if (!(a[r][static_cast<size_t>(c)] == F(0))) throw FieldError("linear system degenerates over dual numbers");
    }
    if (!(a[r][static_cast<size_t>(ncols)] == F(0))) return std::nullopt;
  }
  std::vector<F> x(static_cast<size_t>(ncols), F(0));
  for (size_t r = 0; r < pivots.size(); ++r) x[static_cast<size_t>(pivots[r])] = a[r][static_cast<size_t>(ncols)];
  return x;
}

/// Basis of the right null space of A over Rat.
inline std::vector<std::vector<Rat>> nullspace(Matrix<Rat> a, int ncols) {
  for (auto& r : a) r.resize(static_cast<size_t>(ncols), Rat(0));
  const auto pivots = row_reduce(a, ncols);
  std::vector<bool> is_pivot(static_cast<size_t>(ncols), false);
  for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
  std::vector<std::vector<Rat>> basis;
  for (int free = 0; free < ncols; ++free) {
    if (is_pivot[static_cast<size_t>(free)]) continue;
    std::vector<Rat> v(static_cast<size_t>(ncols), Rat(0));
    v[static_cast<size_t>(free)] = Rat(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[static_cast<size_t>(pivots[r])] = -a[r][static_cast<size_t>(free)];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace mkdv
