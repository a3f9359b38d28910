#pragma once

#include <optional>
#include <vector>

#include "mkdv/miura.hpp"

namespace mkdv {

/// e^{ad U}(L) = d/dx + Lambda + sum_j H_j Lambda^j, all negative grades central.
struct DressingResult {
  GradedElem u;                    // grades -1 .. -depth
  std::map<int, Fn> h;             // center component per grade 0 .. 1-depth, zeros omitted
  int depth = 0;
  Affine type = Affine::kTwisted;
};

/// Grade-by-grade canonical form: at grade j the known part R_j of e^{ad U}(L)
/// is split as [Lambda, U_{j-1}] + H_j Lambda^j with U_{j-1} in the zero-center gauge.
/// For the twisted type any center component at a grade that carries none is
/// an IdentityViolation.
DressingResult dress(const MiuraOper& op, int depth, Affine type = Affine::kTwisted);

/// phi(Lambda_r) = e^{-ad U}(Lambda_r), exact at grades >= r - depth.
GradedElem phi_element(const MiuraOper& op, int r, const DressingResult& dressing);

/// Flow vector X = -(phi^0)' of the r-th mKdV equation. The commutator form
/// [phi^+, L] is recomputed and must be grade-0 and equal to X.
DiagVec mkdv_vector(const MiuraOper& op, int r, Affine type = Affine::kTwisted,
                    std::optional<int> depth = std::nullopt);

/// Flow computed with the untwisted dressing equals the twisted one.
bool a1_vs_a2_flow(const MiuraOper& op, int r);

struct TangencyReport {
  DiagVec flow;
  std::vector<DiagVec> derivatives;  // d mu / d c_i, i = 1..m
  std::vector<Rat> gamma;            // empty when no solution
  bool residual_zero = false;
};

/// Solves sum_i gamma_i d mu/d c_i = mkdv_vector(mu^J(c), r) over Q by clearing
/// denominators and matching polynomial coefficients. NotGenericError when the
/// tuple at c is not generic.
TangencyReport verify_tangency(int n, const GenSequence& seq, const std::vector<Rat>& c, int r,
                               std::optional<int> depth = std::nullopt);

/// The difference of flows between mu^J(c) and mu^{J without last}(c without
/// last) has the support pattern dictated by the last direction j_m.
bool last_step_support_check(const DiagVec& diff, int n, int jm);

/// Least-degree exact interpolation of samples (t_k, value_k) by a polynomial.
Poly<Rat> interpolate(const std::vector<Rat>& t, const std::vector<Rat>& values);

}  // namespace mkdv
