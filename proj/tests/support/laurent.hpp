#pragma once

// Explicit N x N matrices with entries in F(x)[lambda, 1/lambda], built from
// the cyclic matrix Lambda by plain matrix multiplication. Used only as an
// oracle for the graded-coordinate arithmetic.

#include <map>
#include <vector>

#include "mkdv/loop_algebra.hpp"

namespace oracle {

using mkdv::Fn;

/// lambda power -> coefficient; zero coefficients are never stored.
using Laurent = std::map<int, Fn>;
struct LMatrix {
  std::vector<std::vector<Laurent>> e;
  size_t size() const { return e.size(); }
  std::vector<Laurent>& operator[](size_t i) { return e[i]; }
  const std::vector<Laurent>& operator[](size_t i) const { return e[i]; }
  friend bool operator==(const LMatrix&, const LMatrix&) = default;
};

inline void add_to(Laurent& a, int p, const Fn& c) {
  if (c.is_zero()) return;
  auto it = a.find(p);
  if (it == a.end()) {
    a.emplace(p, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) a.erase(it);
}

inline LMatrix zeros(int n) {
  return LMatrix{std::vector<std::vector<Laurent>>(static_cast<size_t>(n), std::vector<Laurent>(static_cast<size_t>(n)))};
}

inline LMatrix identity(int n) {
  LMatrix m = zeros(n);
  for (int k = 0; k < n; ++k) add_to(m[k][k], 0, Fn(1));
  return m;
}

/// sum_k e_{k+1,k} + lambda e_{1,N}
inline LMatrix lambda_matrix(int n) {
  LMatrix m = zeros(n);
  for (int k = 0; k + 1 < n; ++k) add_to(m[k + 1][k], 0, Fn(1));
  add_to(m[0][n - 1], 1, Fn(1));
  return m;
}

/// sum_k e_{k,k+1} + lambda^{-1} e_{N,1}
inline LMatrix lambda_inverse_matrix(int n) {
  LMatrix m = zeros(n);
  for (int k = 0; k + 1 < n; ++k) add_to(m[k][k + 1], 0, Fn(1));
  add_to(m[n - 1][0], -1, Fn(1));
  return m;
}

inline LMatrix operator*(const LMatrix& a, const LMatrix& b) {
  const size_t n = a.size();
  LMatrix out = zeros(static_cast<int>(n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t k = 0; k < n; ++k) {
      if (a[i][k].empty()) continue;
      for (size_t j = 0; j < n; ++j) {
        for (const auto& [p, x] : a[i][k]) {
          for (const auto& [q, y] : b[k][j]) add_to(out[i][j], p + q, x * y);
        }
      }
    }
  }
  return out;
}

inline LMatrix operator+(LMatrix a, const LMatrix& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < a.size(); ++j) {
      for (const auto& [p, c] : b[i][j]) add_to(a[i][j], p, c);
    }
  }
  return a;
}

inline LMatrix operator-(LMatrix a, const LMatrix& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < a.size(); ++j) {
      for (const auto& [p, c] : b[i][j]) add_to(a[i][j], p, -c);
    }
  }
  return a;
}

/// Lambda^j by repeated multiplication.
inline LMatrix lambda_pow(int n, int j) {
  LMatrix out = identity(n);
  const LMatrix step = j >= 0 ? lambda_matrix(n) : lambda_inverse_matrix(n);
  for (int t = 0; t < (j >= 0 ? j : -j); ++t) out = out * step;
  return out;
}

inline LMatrix diagonal(const mkdv::DiagVec& b) {
  LMatrix m = zeros(static_cast<int>(b.size()));
  for (size_t k = 0; k < b.size(); ++k) add_to(m[k][k], 0, b[k]);
  return m;
}

/// sum_j diag(b_j) Lambda^j for an exact graded element.
inline LMatrix to_matrix(const mkdv::GradedElem& x) {
  const int n = x.dims().size();
  LMatrix out = zeros(n);
  for (const auto& [j, b] : x.terms()) out = out + diagonal(b) * lambda_pow(n, j);
  return out;
}

}  // namespace oracle
