#include "mkdv/dressing.hpp"

#include <string>

#include "mkdv/fn_system.hpp"

namespace mkdv {

namespace {

// [a Lambda^i, b Lambda^j] as a diagonal at grade i + j.
DiagVec bracket(const DiagVec& a, int i, const DiagVec& b, int j) {
  return hadamard(a, shift(b, i)) - hadamard(b, shift(a, j));
}

}  // namespace

DressingResult dress(const MiuraOper& op, int depth, Affine type) {
  if (depth < 1) throw DomainError("dressing depth must be at least 1");
  const AlgebraDims& dims = op.dims();
  const DiagVec ones = ones_diag(dims);
  DressingResult out{GradedElem(dims), {}, depth, type};
  // t[k][g] = grade g of (ad U)^k (L). Grade g of t[k] only involves U_a with
  // a >= g - 1, so finished grades never change once U grows downwards.
  std::vector<std::map<int, DiagVec>> t(1);
  t[0][1] = ones;
  t[0][0] = op.v();
  std::vector<DiagVec> u;  // u[s] = U_{-1-s}
  auto u_at = [&](int a) -> const DiagVec& { return u[static_cast<size_t>(-1 - a)]; };
  for (int j = 0; j > -depth; --j) {
    const int kmax = 1 - j;
    if (static_cast<int>(t.size()) <= kmax) t.resize(static_cast<size_t>(kmax) + 1);
    DiagVec residue = t[0].count(j) ? t[0][j] : zero_diag(dims);
    Rat factorial(1);
    for (int k = 1; k <= kmax; ++k) {
      factorial *= Rat(k);
      DiagVec acc = zero_diag(dims);
      bool any = false;
      // [U_a, t[k-1] at grade j - a] with U_{j-1} still unknown (a >= j).
      for (int a = -1; a >= j; --a) {
        auto it = t[static_cast<size_t>(k - 1)].find(j - a);
        if (it == t[static_cast<size_t>(k - 1)].end()) continue;
        acc = acc + bracket(u_at(a), a, it->second, j - a);
        any = true;
      }
      if (k == 1 && j <= -1) {
        acc = acc - derivative(u_at(j));
        any = true;
      }
      if (!any || is_zero(acc)) continue;
      residue = residue + scaled(acc, Fn(Rat(1) / factorial));
      t[static_cast<size_t>(k)][j] = std::move(acc);
    }
    AdLambdaInverse inv = invert_ad_lambda(residue);
    if (!inv.center.is_zero()) {
      if (!is_center_grade(type, dims, j)) {
        throw IdentityViolation("dressing left a central residue at grade " + std::to_string(j) +
                                " which carries no center direction");
      }
      out.h.emplace(j, std::move(inv.center));
    }
    // Now that U_{j-1} is known, complete t[1] at grade j with [U_{j-1}, Lambda].
    const DiagVec fix = bracket(inv.preimage, j - 1, ones, 1);
    auto& slot = t[1][j];
    if (slot.empty()) slot = zero_diag(dims);
    slot = slot + fix;
    u.push_back(inv.preimage);
    out.u.set(j - 1, std::move(inv.preimage));
  }
  return out;
}

GradedElem phi_element(const MiuraOper& op, int r, const DressingResult& dressing) {
  if (r <= 0) throw CenterGapError("flow index must be positive");
  const GradedElem lr = lambda_power(op.dims(), dressing.type, r);
  if (dressing.depth < r) {
    throw DepthError("dressing depth " + std::to_string(dressing.depth) + " is below the flow index " + std::to_string(r));
  }
  const LoopOperator conj = ad_exp(-dressing.u, LoopOperator{false, lr}, std::max(1, dressing.depth - r));
  return conj.body.truncated(r - dressing.depth);
}

DiagVec mkdv_vector(const MiuraOper& op, int r, Affine type, std::optional<int> depth) {
  const int d = depth.value_or(r);
  const GradedElem phi = phi_element(op, r, dress(op, d, type));
  const DiagVec x = scaled(derivative(phi.at(0)), Fn(-1));

  const LoopOperator l = op.as_loop_operator();
  const GradedElem plus = phi.slice(0, r);
  const GradedElem comm = commutator(plus, l.body) - plus.derivative();
  for (const auto& [g, b] : comm.terms()) {
    if (g != 0) throw IdentityViolation("[phi+, L] has a component at grade " + std::to_string(g));
  }
  if (!(comm.at(0) == x)) throw IdentityViolation("[phi+, L] differs from -d/dx phi^0");
  return x;
}

bool a1_vs_a2_flow(const MiuraOper& op, int r) {
  return mkdv_vector(op, r, Affine::kTwisted) == mkdv_vector(op, r, Affine::kUntwisted);
}

TangencyReport verify_tangency(int n, const GenSequence& seq, const std::vector<Rat>& c, int r,
                               std::optional<int> depth) {
  const OperFamily fam = family_oper(n, seq, c);
  if (!is_generic(fam.generation.tuple())) throw NotGenericError("tuple at the chosen parameters is not generic");
  TangencyReport out;
  out.flow = mkdv_vector(fam.oper, r, Affine::kTwisted, depth);
  for (size_t i = 1; i <= seq.size(); ++i) out.derivatives.push_back(family_derivative(n, seq, c, static_cast<int>(i)));
  auto gamma = solve_fn_combination(out.derivatives, out.flow);
  if (!gamma) return out;
  DiagVec residual = out.flow;
  for (size_t i = 0; i < gamma->size(); ++i) residual = residual - scaled(out.derivatives[i], Fn((*gamma)[i]));
  out.residual_zero = is_zero(residual);
  out.gamma = std::move(*gamma);
  return out;
}

bool last_step_support_check(const DiagVec& diff, int n, int jm) {
  const int big = 2 * n + 1;
  if (static_cast<int>(diff.size()) != big) throw DomainError("vector of wrong length");
  if (jm < 0 || jm > n) throw DomainError("direction out of range");
  auto at = [&](int k) -> const Fn& { return diff[static_cast<size_t>(k - 1)]; };
  std::vector<int> support;
  if (jm == 0) {
    support = {1, big};
    if (!(at(big) + at(1)).is_zero()) return false;
  } else if (jm == n) {
    support = {n, n + 1, n + 2};
  } else {
    support = {jm, jm + 1, big - jm, big + 1 - jm};
    if (!(at(jm) + at(jm + 1)).is_zero()) return false;
    if (!(at(big - jm) + at(big + 1 - jm)).is_zero()) return false;
  }
  for (int k = 1; k <= big; ++k) {
    if (std::find(support.begin(), support.end(), k) == support.end() && !at(k).is_zero()) return false;
  }
  return true;
}

Poly<Rat> interpolate(const std::vector<Rat>& t, const std::vector<Rat>& values) {
  if (t.size() != values.size()) throw DomainError("interpolation needs one value per node");
  Poly<Rat> out;
  for (size_t i = 0; i < t.size(); ++i) {
    Poly<Rat> basis = Poly<Rat>::constant(Rat(1));
    Rat scale(1);
    for (size_t k = 0; k < t.size(); ++k) {
      if (k == i) continue;
      if (t[k] == t[i]) throw DomainError("repeated interpolation node");
      basis = basis * Poly<Rat>::linear(-t[k]);
      scale *= t[i] - t[k];
    }
    out += basis.scaled(values[i] / scale);
  }
  return out;
}

}  // namespace mkdv
