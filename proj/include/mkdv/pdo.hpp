#pragma once

#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "mkdv/miura.hpp"

namespace mkdv {

using DualFn = Dual<Fn>;

inline Fn coeff_derivative(const Fn& a) { return a.derivative(); }
inline DualFn coeff_derivative(const DualFn& a) { return DualFn(a.value().derivative(), a.eps().derivative()); }
inline bool coeff_is_zero(const Fn& a) { return a.is_zero(); }
inline bool coeff_is_zero(const DualFn& a) { return a.value().is_zero() && a.eps().is_zero(); }
template <class C>
C coeff_from(const Rat& r) {
  if constexpr (std::is_same_v<C, Fn>) {
    return Fn(r);
  } else {
    return C(Fn(r));
  }
}

/// k-th generalized binomial coefficient of an integer (possibly negative) i.
Rat binomial(int i, int k);

/// Formal pseudodifferential operator sum_i a_i d^i. Orders below floor() are
/// unknown (truncated); without a floor the operator is exact.
template <class C>
class Pdo {
 public:
  Pdo() = default;
  explicit Pdo(std::optional<int> floor) : floor_(floor) {}

  static Pdo d_power(int k) {
    Pdo out;
    out.set(k, C(1));
    return out;
  }
  static Pdo multiplication(C a) {
    Pdo out;
    out.set(0, std::move(a));
    return out;
  }

  const std::map<int, C>& terms() const { return terms_; }
  const std::optional<int>& floor() const { return floor_; }
  bool exact() const { return !floor_.has_value(); }
  bool is_zero() const { return terms_.empty(); }
  std::optional<int> max_order() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
  }

  C coeff(int i) const {
    if (floor_ && i < *floor_) throw DepthError("order " + std::to_string(i) + " lies below the truncation floor");
    auto it = terms_.find(i);
    return it == terms_.end() ? C(0) : it->second;
  }
  void set(int i, C a) {
    if (floor_ && i < *floor_) return;
    if (coeff_is_zero(a)) {
      terms_.erase(i);
    } else {
      terms_[i] = std::move(a);
    }
  }
  void add(int i, const C& a) {
    if (floor_ && i < *floor_) return;
    auto it = terms_.find(i);
    if (it == terms_.end()) {
      set(i, a);
      return;
    }
    it->second = it->second + a;
    if (coeff_is_zero(it->second)) terms_.erase(it);
  }

  Pdo truncated(int floor) const {
    Pdo out(floor_ ? std::max(*floor_, floor) : floor);
    for (const auto& [i, a] : terms_) out.set(i, a);
    return out;
  }
  /// Orders in [lo, hi]; exact.
  Pdo slice(int lo, int hi) const {
    if (floor_ && lo < *floor_) throw DepthError("slice reaches below the truncation floor");
    Pdo out;
    for (const auto& [i, a] : terms_) {
      if (i >= lo && i <= hi) out.set(i, a);
    }
    return out;
  }
  /// Right multiplication by d^k: shifts every order by k.
  Pdo shifted(int k) const {
    Pdo out(floor_ ? std::optional<int>(*floor_ + k) : std::nullopt);
    for (const auto& [i, a] : terms_) out.set(i + k, a);
    return out;
  }
  Pdo scaled(const C& s) const {
    Pdo out(floor_);
    for (const auto& [i, a] : terms_) out.set(i, a * s);
    return out;
  }

  friend Pdo operator+(const Pdo& a, const Pdo& b) {
    std::optional<int> f = a.floor_;
    if (b.floor_) f = f ? std::max(*f, *b.floor_) : *b.floor_;
    Pdo out(f);
    for (const auto& [i, c] : a.terms_) out.add(i, c);
    for (const auto& [i, c] : b.terms_) out.add(i, c);
    return out;
  }
  friend Pdo operator-(const Pdo& a, const Pdo& b) { return a + b.scaled(C(-1)); }
  friend bool operator==(const Pdo& a, const Pdo& b) { return a.floor_ == b.floor_ && a.terms_ == b.terms_; }

 private:
  std::optional<int> floor_;
  std::map<int, C> terms_;
};

/// a * b via d^k u = sum_i binom(k, i) u^(i) d^(k-i), truncated to orders >= floor
/// (and to whatever the operands' floors allow).
template <class C>
Pdo<C> pdo_mul(const Pdo<C>& a, const Pdo<C>& b, std::optional<int> floor = std::nullopt) {
  std::optional<int> f = floor;
  auto raise = [&](int v) { f = f ? std::max(*f, v) : v; };
  if (a.floor() && b.max_order()) raise(*a.floor() + *b.max_order());
  if (b.floor() && a.max_order()) raise(*b.floor() + *a.max_order());
  Pdo<C> out(f);
  if (a.is_zero() || b.is_zero()) return out;
  std::map<int, std::vector<C>> derivs;  // successive derivatives of b's coefficients
  for (const auto& [j, bj] : b.terms()) derivs[j].push_back(bj);
  for (const auto& [i, ai] : a.terms()) {
    for (const auto& [j, bj] : b.terms()) {
      auto& ds = derivs[j];
      for (int k = 0;; ++k) {
        if (i >= 0 && k > i) break;
        const int order = i + j - k;
        if (!f && i < 0) throw DomainError("product with a negative order needs a truncation floor");
        if (f && order < *f) break;
        while (static_cast<int>(ds.size()) <= k) ds.push_back(coeff_derivative(ds.back()));
        if (coeff_is_zero(ds[static_cast<size_t>(k)])) continue;
        out.add(order, ai * ds[static_cast<size_t>(k)] * coeff_from<C>(binomial(i, k)));
      }
    }
  }
  return out;
}

template <class C>
Pdo<C> pdo_pow(const Pdo<C>& q, int e, std::optional<int> floor = std::nullopt) {
  if (e < 0) throw DomainError("negative power");
  Pdo<C> out = Pdo<C>::d_power(0);
  const int top = q.max_order().value_or(0);
  for (int k = 1; k <= e; ++k) {
    // The e - k factors still to come can raise orders by up to top each.
    std::optional<int> f;
    if (floor) f = *floor - (e - k) * top;
    out = pdo_mul(out, q, f);
  }
  return out;
}

/// Checks the shape d^N + sum_{i <= N-2} u_i d^i with N = 2n+1 and returns n.
int diff_op_rank(const Pdo<Fn>& l);

/// The unique root d + sum_{i<=0} a_i d^i with root^N = L, by solving for one
/// coefficient per order. Exact at orders >= floor.
Pdo<Fn> pdo_root(const Pdo<Fn>& l, int floor);
/// The same root by iterating Q <- Q + (L - Q^N) d^{1-N} / N from Q = d.
Pdo<Fn> pdo_root_refined(const Pdo<Fn>& l, int floor);

/// Coefficients Z_0..Z_{2n-1} of [L, (L^{r/N})^+]. A nonzero coefficient at
/// order >= 2n is an IdentityViolation.
std::vector<Fn> kdv_vector(const Pdo<Fn>& l, int r);

/// Order of the factors (d - v_k) in m_i, left to right (1-based k):
/// i, i-1, ..., 1, N, N-1, ..., i+1.
std::vector<int> miura_factor_order(int big, int i);

template <class C>
Pdo<C> miura_product(const std::vector<C>& v, int i) {
  Pdo<C> out = Pdo<C>::d_power(0);
  for (int k : miura_factor_order(static_cast<int>(v.size()), i)) {
    Pdo<C> factor = Pdo<C>::d_power(1);
    factor.set(0, C(0) - v[static_cast<size_t>(k - 1)]);
    out = pdo_mul(out, factor);
  }
  return out;
}

/// m_i(L), i = 0..2n, as a differential operator of order 2n+1.
Pdo<Fn> miura_map(const MiuraOper& op, int i);

/// Derivative of m_i along the diagonal tangent X, coefficients at orders
/// 0..2n-1, via dual numbers (v + eps X). The explicit sum over factor
/// positions is evaluated too and must agree.
std::vector<Fn> miura_tangent(const MiuraOper& op, const DiagVec& x, int i);
/// The explicit sum over factor positions alone.
std::vector<Fn> miura_tangent_leibniz(const DiagVec& v, const DiagVec& x, int i);

/// Closed form of the order-(2n-1) coefficient of the tangent of m_i:
/// -(sum_k v_k X_k + sum_{k<=i} (i-k) X'_k + sum_{k>i} (i+N-k) X'_k).
Fn first_coeff_formula(const DiagVec& v, const DiagVec& x, int i);

enum class KernelCase { kFull, kSkipPair, kSkipCenter };

struct KernelSpec {
  KernelCase kind = KernelCase::kFull;
  int j = 0;  // only for kSkipPair, 1 <= j <= n-1
};

/// Indices i in 0..2n whose first tangent coefficient is assumed to vanish.
std::vector<int> kernel_hypothesis_indices(int n, const KernelSpec& spec);
bool kernel_hypothesis_holds(const DiagVec& v, const DiagVec& x, const KernelSpec& spec);
bool kernel_conclusion_holds(const DiagVec& v, const DiagVec& x, const KernelSpec& spec);

struct KernelLemmaReport {
  int basis_size = 0;
  int kernel_dim = 0;
  bool conclusions_hold = false;
};

/// Takes twisted tangents X_k = P_k / den (k = 1..n, deg P_k <= numerator_degree),
/// imposes the hypotheses as exact linear conditions, and checks the conclusions
/// on every vector of the resulting null space.
KernelLemmaReport kernel_lemma_check(const MiuraOper& op, const KernelSpec& spec, const Poly<Rat>& den,
                                     int numerator_degree);

}  // namespace mkdv
