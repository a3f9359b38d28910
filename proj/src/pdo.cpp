#include "mkdv/pdo.hpp"

#include <algorithm>

#include "mkdv/fn_system.hpp"

namespace mkdv {

Rat binomial(int i, int k) {
  if (k < 0) return Rat(0);
  Rat out(1);
  for (int t = 0; t < k; ++t) out = out * Rat(i - t) / Rat(t + 1);
  return out;
}

int diff_op_rank(const Pdo<Fn>& l) {
  if (!l.exact()) throw DomainError("expected an exact differential operator");
  const auto top = l.max_order();
  if (!top || *top < 5 || *top % 2 == 0) throw DomainError("expected an operator of odd order 2n+1 >= 5");
  if (!(l.coeff(*top) == Fn(1))) throw DomainError("leading coefficient must be 1");
  if (!l.coeff(*top - 1).is_zero()) throw DomainError("coefficient of d^{2n} must vanish");
  if (l.terms().begin()->first < 0) throw DomainError("expected a differential operator");
  return (*top - 1) / 2;
}

Pdo<Fn> pdo_root(const Pdo<Fn>& l, int floor) {
  const int big = 2 * diff_op_rank(l) + 1;
  if (floor > 0) throw DomainError("root floor must be <= 0");
  Pdo<Fn> q = Pdo<Fn>::d_power(1);
  for (int o = 0; o >= floor; --o) {
    // Only the order-(N-1+o) coefficient of q^N is needed; it is linear in a_o
    // with slope N.
    const int target = big - 1 + o;
    const Pdo<Fn> power = pdo_pow(q.truncated(o), big, target);
    const Fn a = (l.coeff(target) - power.coeff(target)) * Fn(Rat(1, big));
    Pdo<Fn> next = q;
    next.set(o, a);
    q = std::move(next);
  }
  return q.truncated(floor);
}

Pdo<Fn> pdo_root_refined(const Pdo<Fn>& l, int floor) {
  const int big = 2 * diff_op_rank(l) + 1;
  if (floor > 0) throw DomainError("root floor must be <= 0");
  Pdo<Fn> q = Pdo<Fn>::d_power(1).truncated(floor);
  for (int iter = 0; iter <= 2 - floor; ++iter) {
    const Pdo<Fn> err = l.truncated(floor + big - 1) - pdo_pow(q, big, floor + big - 1);
    if (err.is_zero()) return q;
    q = q + err.shifted(1 - big).scaled(Fn(Rat(1, big)));
  }
  const Pdo<Fn> err = l.truncated(floor + big - 1) - pdo_pow(q, big, floor + big - 1);
  if (!err.is_zero()) throw IdentityViolation("root refinement did not converge");
  return q;
}

std::vector<Fn> kdv_vector(const Pdo<Fn>& l, int r) {
  const int n = diff_op_rank(l);
  if (r < 1) throw DomainError("flow index must be positive");
  const int floor = std::min(-(2 * n + 2), 1 - r);
  const Pdo<Fn> q = pdo_root(l, floor);
  const Pdo<Fn> power = pdo_pow(q, r, 0);
  if (power.floor() && *power.floor() > 0) throw DepthError("root truncated too high for this flow index");
  const Pdo<Fn> plus = power.slice(0, r);
  const Pdo<Fn> comm = pdo_mul(l, plus) - pdo_mul(plus, l);
  std::vector<Fn> out(static_cast<size_t>(2 * n), Fn());
  for (const auto& [o, a] : comm.terms()) {
    if (o >= 2 * n || o < 0) {
      throw IdentityViolation("[L, (L^{r/N})^+] has a term of order " + std::to_string(o));
    }
    out[static_cast<size_t>(o)] = a;
  }
  return out;
}

std::vector<int> miura_factor_order(int big, int i) {
  if (i < 0 || i >= big) throw DomainError("Miura map index out of range");
  std::vector<int> out;
  for (int k = i; k >= 1; --k) out.push_back(k);
  for (int k = big; k > i; --k) out.push_back(k);
  return out;
}

Pdo<Fn> miura_map(const MiuraOper& op, int i) { return miura_product(op.v(), i); }

std::vector<Fn> miura_tangent_leibniz(const DiagVec& v, const DiagVec& x, int i) {
  const int big = static_cast<int>(v.size());
  if (x.size() != v.size()) throw DomainError("tangent of wrong length");
  const std::vector<int> order = miura_factor_order(big, i);
  std::vector<Pdo<Fn>> factors;
  for (int k : order) {
    Pdo<Fn> f = Pdo<Fn>::d_power(1);
    f.set(0, -v[static_cast<size_t>(k - 1)]);
    factors.push_back(std::move(f));
  }
  std::vector<Pdo<Fn>> prefix(factors.size() + 1, Pdo<Fn>::d_power(0));
  std::vector<Pdo<Fn>> suffix(factors.size() + 1, Pdo<Fn>::d_power(0));
  for (size_t p = 0; p < factors.size(); ++p) prefix[p + 1] = pdo_mul(prefix[p], factors[p]);
  for (size_t p = factors.size(); p-- > 0;) suffix[p] = pdo_mul(factors[p], suffix[p + 1]);
  Pdo<Fn> total;
  for (size_t p = 0; p < factors.size(); ++p) {
    const Pdo<Fn> mid = Pdo<Fn>::multiplication(-x[static_cast<size_t>(order[p] - 1)]);
    total = total + pdo_mul(pdo_mul(prefix[p], mid), suffix[p + 1]);
  }
  // Orders 0..2n-1; the order-2n coefficient is -trace(X).
  std::vector<Fn> out(static_cast<size_t>(big - 1), Fn());
  for (const auto& [o, a] : total.terms()) {
    if (o == big - 1) continue;
    if (o >= big) throw IdentityViolation("tangent of the Miura map has a term of order " + std::to_string(o));
    out[static_cast<size_t>(o)] = a;
  }
  return out;
}

std::vector<Fn> miura_tangent(const MiuraOper& op, const DiagVec& x, int i) {
  if (!trace(x).is_zero()) throw DomainError("tangent must have zero trace");
  const int big = op.dims().size();
  std::vector<DualFn> vd;
  for (int k = 0; k < big; ++k) vd.emplace_back(op.v()[static_cast<size_t>(k)], x[static_cast<size_t>(k)]);
  const Pdo<DualFn> m = miura_product(vd, i);
  std::vector<Fn> out(static_cast<size_t>(big - 1), Fn());
  for (const auto& [o, a] : m.terms()) {
    if (a.eps().is_zero()) continue;
    if (o >= big - 1) throw IdentityViolation("tangent of the Miura map has a term of order " + std::to_string(o));
    out[static_cast<size_t>(o)] = a.eps();
  }
  if (out != miura_tangent_leibniz(op.v(), x, i)) {
    throw IdentityViolation("dual-number tangent differs from the sum over factor positions");
  }
  return out;
}

Fn first_coeff_formula(const DiagVec& v, const DiagVec& x, int i) {
  const int big = static_cast<int>(v.size());
  if (i < 0 || i >= big) throw DomainError("Miura map index out of range");
  Fn acc;
  for (int k = 1; k <= big; ++k) {
    const Fn& xk = x[static_cast<size_t>(k - 1)];
    acc += v[static_cast<size_t>(k - 1)] * xk;
    const int w = k <= i ? i - k : i + big - k;
    if (w != 0) acc += xk.derivative() * Fn(w);
  }
  return -acc;
}

std::vector<int> kernel_hypothesis_indices(int n, const KernelSpec& spec) {
  const int big = 2 * n + 1;
  std::vector<int> out;
  switch (spec.kind) {
    case KernelCase::kFull:
      for (int i = 1; i <= 2 * n; ++i) out.push_back(i);
      break;
    case KernelCase::kSkipPair:
      if (spec.j < 1 || spec.j > n - 1) throw DomainError("skipped pair index must lie in 1..n-1");
      for (int i = 0; i <= 2 * n; ++i) {
        if (i != spec.j && i != big - spec.j) out.push_back(i);
      }
      break;
    case KernelCase::kSkipCenter:
      for (int i = 0; i <= 2 * n; ++i) {
        if (i != n && i != n + 1) out.push_back(i);
      }
      break;
  }
  return out;
}

bool kernel_hypothesis_holds(const DiagVec& v, const DiagVec& x, const KernelSpec& spec) {
  const int n = (static_cast<int>(v.size()) - 1) / 2;
  for (int i : kernel_hypothesis_indices(n, spec)) {
    if (!first_coeff_formula(v, x, i).is_zero()) return false;
  }
  return true;
}

bool kernel_conclusion_holds(const DiagVec& v, const DiagVec& x, const KernelSpec& spec) {
  const int big = static_cast<int>(v.size());
  const int n = (big - 1) / 2;
  auto xv = [&](int k) -> const Fn& { return x[static_cast<size_t>(k - 1)]; };
  auto vv = [&](int k) -> const Fn& { return v[static_cast<size_t>(k - 1)]; };
  auto dx = [&](int k) { return xv(k).derivative(); };
  auto vx_sum = [&](int lo, int hi, std::vector<int> skip) {
    Fn acc;
    for (int k = lo; k <= hi; ++k) {
      if (std::find(skip.begin(), skip.end(), k) == skip.end()) acc += vv(k) * xv(k);
    }
    return acc;
  };
  auto constant_except = [&](std::vector<int> keep) {
    for (int k = 1; k <= big; ++k) {
      if (std::find(keep.begin(), keep.end(), k) == keep.end() && !dx(k).is_zero()) return false;
    }
    return true;
  };
  switch (spec.kind) {
    case KernelCase::kFull:
      // X'_i = 0 for 2 <= i <= 2n, X'_1 - 2 v_1 X_1 = sum_{k=2}^{2n} v_k X_k.
      return constant_except({1, big}) && dx(1) - Fn(2) * vv(1) * xv(1) == vx_sum(2, 2 * n, {});
    case KernelCase::kSkipPair: {
      const int j = spec.j;
      if (!constant_except({j, j + 1, big - j, big + 1 - j})) return false;
      if (!(dx(j) + dx(j + 1)).is_zero()) return false;
      return dx(j) + vv(j) * xv(j) + vv(j + 1) * xv(j + 1) == -vx_sum(1, n, {j, j + 1});
    }
    case KernelCase::kSkipCenter:
      if (!constant_except({n, n + 2})) return false;
      return dx(n) + vv(n) * xv(n) == -vx_sum(1, n - 1, {});
  }
  return false;
}

KernelLemmaReport kernel_lemma_check(const MiuraOper& op, const KernelSpec& spec, const Poly<Rat>& den,
                                     int numerator_degree) {
  const AlgebraDims& dims = op.dims();
  const int n = dims.n(), big = dims.size();
  if (den.is_zero()) throw DomainError("zero denominator for the tangent basis");
  // Basis of twisted tangents: x^d / den * (e_k - e_{N+1-k}), k = 1..n.
  std::vector<DiagVec> basis;
  for (int k = 1; k <= n; ++k) {
    for (int d = 0; d <= numerator_degree; ++d) {
      basis.push_back(scaled(unit_diag(dims, k) - unit_diag(dims, big + 1 - k),
                             Fn(Poly<Rat>::monomial(Rat(1), d), den)));
    }
  }
  const std::vector<int> hyp = kernel_hypothesis_indices(n, spec);
  std::vector<std::vector<Fn>> columns;
  for (const auto& x : basis) {
    std::vector<Fn> col;
    for (int i : hyp) col.push_back(first_coeff_formula(op.v(), x, i));
    columns.push_back(std::move(col));
  }
  FnSystem sys = fn_system(columns, std::vector<Fn>(hyp.size(), Fn()));
  const auto kernel = nullspace(std::move(sys.a), sys.unknowns);
  KernelLemmaReport out{static_cast<int>(basis.size()), static_cast<int>(kernel.size()), true};
  for (const auto& t : kernel) {
    DiagVec x = zero_diag(dims);
    for (size_t b = 0; b < basis.size(); ++b) {
      if (!t[b].is_zero()) x = x + scaled(basis[b], Fn(t[b]));
    }
    if (!kernel_hypothesis_holds(op.v(), x, spec) || !kernel_conclusion_holds(op.v(), x, spec)) {
      out.conclusions_hold = false;
      break;
    }
  }
  return out;
}

}  // namespace mkdv
