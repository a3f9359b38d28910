#pragma once

#include <vector>

#include "mkdv/generation.hpp"
#include "mkdv/loop_algebra.hpp"

namespace mkdv {

/// d/dx + Lambda + diag(v_1, ..., v_N) of the twisted type:
/// sum v = 0 and v_j + v_{N+1-j} = 0.
class MiuraOper {
 public:
  /// Validates the twisted constraints (DomainError otherwise).
  MiuraOper(AlgebraDims dims, DiagVec v);
  /// The oper d/dx + Lambda.
  static MiuraOper trivial(const AlgebraDims& dims);

  const AlgebraDims& dims() const { return dims_; }
  const DiagVec& v() const { return v_; }
  LoopOperator as_loop_operator() const { return miura_operator(dims_, v_); }

  friend bool operator==(const MiuraOper&, const MiuraOper&) = default;

 private:
  AlgebraDims dims_;
  DiagVec v_;
};

/// V = -sum_i ln'(y_i) h_i.
MiuraOper oper_from_tuple(const PolyTuple<Rat>& y);

/// g' - <alpha_j, V> g + g^2.
Fn riccati_residual(const MiuraOper& op, int j, const Fn& g);

/// e^{ad g f_j} L = L - g h_j for a Riccati solution g; NotASolutionError otherwise.
MiuraOper riccati_deform(const MiuraOper& op, int j, const Fn& g);

struct OperFamily {
  GenSequence sequence;
  std::vector<Rat> c;
  Generation<Rat> generation;
  /// g_l = ln'(y_{j_l} after step l) - ln'(y_{j_l} before step l).
  std::vector<Fn> g;
  MiuraOper oper;
};

/// mu^J(c) = d/dx + Lambda - sum_l g_l h_{j_l}. Asserts agreement with
/// oper_from_tuple(generate(J, c)) and the Riccati certificate of every step.
OperFamily family_oper(int n, const GenSequence& seq, const std::vector<Rat>& c);

/// e^{ad g_m f_{j_m}} ... e^{ad g_1 f_{j_1}} applied to d/dx + Lambda through
/// the truncated exponential series, grades >= -depth.
LoopOperator conjugated_trivial_oper(const OperFamily& family, int depth);

/// d mu^J / d c_i at c (1-based i) as a diagonal vector, via dual numbers.
DiagVec family_derivative(int n, const GenSequence& seq, const std::vector<Rat>& c, int i);

/// -prod_i y_i^{-a_{i,j_m}} / y_{j_m}^2 * h_{j_m} evaluated on the final tuple;
/// the derivative in c_m is a nonzero integer multiple of this vector.
DiagVec last_parameter_closed_form(const OperFamily& family);

/// Membership in the tangent space of twisted Miura opers.
bool tangent_space_check(const DiagVec& x);

}  // namespace mkdv
