#include "mkdv/miura.hpp"

#include <string>

namespace mkdv {

MiuraOper::MiuraOper(AlgebraDims dims, DiagVec v) : dims_(dims), v_(std::move(v)) {
  if (static_cast<int>(v_.size()) != dims_.size()) throw DomainError("Miura potential has wrong length");
  if (!a2_check(v_)) throw DomainError("Miura potential violates the twisted symmetry constraints");
}

MiuraOper MiuraOper::trivial(const AlgebraDims& dims) { return MiuraOper(dims, zero_diag(dims)); }

MiuraOper oper_from_tuple(const PolyTuple<Rat>& y) {
  const AlgebraDims dims(y.n());
  DiagVec v = zero_diag(dims);
  for (int i = 0; i <= y.n(); ++i) {
    const auto& p = y.y[static_cast<size_t>(i)];
    if (p.is_zero()) throw DomainError("zero polynomial in tuple");
    if (p.degree() == 0) continue;
    v = v - scaled(twisted_h(dims, i), log_deriv(p));
  }
  return MiuraOper(dims, std::move(v));
}

Fn riccati_residual(const MiuraOper& op, int j, const Fn& g) {
  return g.derivative() - alpha_pairing(op.dims(), op.v(), j) * g + g * g;
}

MiuraOper riccati_deform(const MiuraOper& op, int j, const Fn& g) {
  if (!riccati_residual(op, j, g).is_zero()) {
    throw NotASolutionError("g does not solve the Riccati equation in direction " + std::to_string(j));
  }
  return MiuraOper(op.dims(), op.v() - scaled(twisted_h(op.dims(), j), g));
}

OperFamily family_oper(int n, const GenSequence& seq, const std::vector<Rat>& c) {
  const AlgebraDims dims(n);
  OperFamily fam{seq, c, generate<Rat>(n, seq, c), {}, MiuraOper::trivial(dims)};
  MiuraOper current = MiuraOper::trivial(dims);
  for (size_t l = 0; l < seq.size(); ++l) {
    const int j = seq[l];
    const auto& before = fam.generation.history[l].y[static_cast<size_t>(j)];
    const auto& after = fam.generation.history[l + 1].y[static_cast<size_t>(j)];
    Fn g = log_deriv(after) - log_deriv(before);
    try {
      current = riccati_deform(current, j, g);
    } catch (const NotASolutionError& e) {
      throw IdentityViolation(std::string("Riccati certificate failed: ") + e.what());
    }
    fam.g.push_back(std::move(g));
  }
  if (!(current == oper_from_tuple(fam.generation.tuple()))) {
    throw IdentityViolation("family oper differs from the oper of the generated tuple");
  }
  fam.oper = std::move(current);
  return fam;
}

LoopOperator conjugated_trivial_oper(const OperFamily& family, int depth) {
  const AlgebraDims& dims = family.oper.dims();
  LoopOperator op = MiuraOper::trivial(dims).as_loop_operator();
  for (size_t l = 0; l < family.sequence.size(); ++l) {
    const GradedElem u = single_grade(dims, -1, scaled(twisted_f(dims, family.sequence[l]), family.g[l]));
    op = ad_exp(u, op, depth);
  }
  return op;
}

DiagVec family_derivative(int n, const GenSequence& seq, const std::vector<Rat>& c, int i) {
  if (i < 1 || i > static_cast<int>(seq.size())) {
    throw DomainError("parameter index " + std::to_string(i) + " out of range 1.." + std::to_string(seq.size()));
  }
  if (c.size() != seq.size()) throw DomainError("generation needs one parameter per step");
  const AlgebraDims dims(n);
  std::vector<DualRat> cd;
  for (size_t l = 0; l < c.size(); ++l) {
    cd.push_back(static_cast<int>(l) + 1 == i ? DualRat::variable(c[l]) : DualRat(c[l]));
  }
  DiagVec out = zero_diag(dims);
  try {
    const auto gen = generate<DualRat>(n, seq, cd);
    for (int k = 0; k <= n; ++k) {
      const auto& p = gen.tuple().y[static_cast<size_t>(k)];
      if (p.degree() <= 0) continue;
      const auto tangent = split(log_deriv(p)).second;
      out = out - scaled(twisted_h(dims, k), tangent);
    }
  } catch (const FieldError& e) {
    throw PoleError(std::string("family is singular at the chosen parameters: ") + e.what());
  }
  return out;
}

DiagVec last_parameter_closed_form(const OperFamily& family) {
  if (family.sequence.empty()) throw DomainError("empty sequence has no last parameter");
  const int j = family.sequence.back();
  const auto& y = family.generation.tuple();
  const AlgebraDims dims(y.n());
  const Poly<Rat>& yj = y.y[static_cast<size_t>(j)];
  const Fn weight = -Fn(wronskian_rhs(y, j), yj * yj);
  return scaled(twisted_h(dims, j), weight);
}

bool tangent_space_check(const DiagVec& x) { return a2_check(x); }

}  // namespace mkdv
