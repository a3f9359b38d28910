#pragma once

// Derivative of a Miura map along a tangent without dual numbers or the
// factor-position sum: exact Lagrange differentiation in t of m_i(v + t X).

#include <vector>

#include "mkdv/pdo.hpp"

namespace oracle {

/// Coefficients at orders 0..2n-1 of d/dt m_i(v + t X) at t = 0. Each
/// coefficient is a polynomial of degree <= N in t, so N + 1 samples suffice.
inline std::vector<mkdv::Fn> tangent_by_interpolation(const mkdv::DiagVec& v, const mkdv::DiagVec& x, int i) {
  using mkdv::Fn;
  using mkdv::Rat;
  using P = mkdv::Poly<Rat>;
  const int big = static_cast<int>(v.size());
  std::vector<Fn> out(static_cast<size_t>(big - 1), Fn());
  for (int t = 0; t <= big; ++t) {
    const mkdv::Pdo<Fn> sample = mkdv::miura_product(v + mkdv::scaled(x, Fn(t)), i);
    P basis = P::constant(Rat(1));
    for (int s = 0; s <= big; ++s) {
      if (s != t) basis = basis * P::linear(Rat(-s)).scaled(Rat(1, t - s));
    }
    const Rat w = basis.derivative()(Rat(0));
    for (int o = 0; o < big - 1; ++o) out[static_cast<size_t>(o)] += sample.coeff(o) * Fn(w);
  }
  return out;
}

}  // namespace oracle
