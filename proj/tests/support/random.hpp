#pragma once

// Seeded generators of small exact test data.

#include <random>
#include <vector>

#include "mkdv/loop_algebra.hpp"

namespace testdata {

using mkdv::Fn;
using mkdv::Poly;
using mkdv::Rat;

class Source {
 public:
  explicit Source(unsigned long long seed) : gen_(seed) {}

  int integer(int lo, int hi) { return lo + static_cast<int>(gen_() % static_cast<unsigned long long>(hi - lo + 1)); }

  Rat rat(int bound = 5, int den = 4) { return Rat(integer(-bound, bound), integer(1, den)); }

  Rat nonzero_rat(int bound = 5, int den = 4) {
    for (;;) {
      Rat r = rat(bound, den);
      if (!r.is_zero()) return r;
    }
  }

  Poly<Rat> poly(int degree) {
    std::vector<Rat> c;
    for (int d = 0; d <= degree; ++d) c.push_back(rat());
    return Poly<Rat>(std::move(c));
  }

  Poly<Rat> nonzero_poly(int degree) {
    for (;;) {
      Poly<Rat> p = poly(degree);
      if (!p.is_zero()) return p;
    }
  }

  /// Small rational function with a monic linear or constant denominator.
  Fn fn() {
    const Poly<Rat> num = poly(integer(0, 2));
    if (integer(0, 1) == 0) return Fn(num);
    return Fn(num, Poly<Rat>::linear(rat(4, 1)));
  }

  mkdv::DiagVec diag(int size) {
    mkdv::DiagVec v;
    for (int k = 0; k < size; ++k) v.push_back(fn());
    return v;
  }

  /// Trace-zero diagonal vector.
  mkdv::DiagVec trace_free_diag(int size) {
    mkdv::DiagVec v = diag(size);
    v.back() = v.back() - mkdv::trace(v);
    return v;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace testdata
