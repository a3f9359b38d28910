#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mkdv/loop_algebra.hpp"
#include "support/laurent.hpp"
#include "support/random.hpp"
#include "support/series.hpp"

using namespace mkdv;
using oracle::exp_series;
using oracle::identity_elem;

namespace {

GradedElem random_element(testdata::Source& src, const AlgebraDims& dims) {
  GradedElem x(dims);
  const int count = src.integer(1, 3);
  for (int t = 0; t < count; ++t) x.add(src.integer(-6, 6), src.diag(dims.size()));
  return x;
}

}  // namespace

TEST_CASE("grade of a matrix unit") {
  const AlgebraDims d(2);
  CHECK(grade_of_basis(d, 0, 2, 1) == 1);
  CHECK(grade_of_basis(d, 1, 1, 5) == 1);
  CHECK(grade_of_basis(d, 0, 1, 1) == 0);
  CHECK(grade_of_basis(d, -1, 5, 1) == -1);
  CHECK_THROWS_AS(grade_of_basis(d, 0, 0, 1), DomainError);
  CHECK_THROWS_AS(grade_of_basis(d, 0, 1, 6), DomainError);
}

TEST_CASE("graded coordinates of Lambda^j match explicit matrices") {
  const AlgebraDims d(2);
  const auto lam = oracle::lambda_matrix(5);
  CHECK(oracle::to_matrix(lambda_power(d, Affine::kTwisted, 1)) == lam);
  CHECK(oracle::lambda_matrix(5) * oracle::lambda_inverse_matrix(5) == oracle::identity(5));
  for (int r = 1; r <= 11; ++r) {
    const auto power = oracle::lambda_pow(5, r);
    for (Affine t : {Affine::kTwisted, Affine::kUntwisted}) {
      if (is_center_grade(t, d, r)) {
        CHECK(oracle::to_matrix(lambda_power(d, t, r)) == power);
      } else {
        CHECK_THROWS_AS(lambda_power(d, t, r), CenterGapError);
      }
    }
  }
  CHECK_THROWS_AS(lambda_power(d, Affine::kTwisted, 5), CenterGapError);
  CHECK_THROWS_AS(lambda_power(d, Affine::kUntwisted, 5), CenterGapError);
  CHECK_THROWS_AS(lambda_power(d, Affine::kTwisted, 2), CenterGapError);
  CHECK_NOTHROW(lambda_power(d, Affine::kUntwisted, 2));
}

TEST_CASE("product and commutator match Laurent-matrix multiplication") {
  const AlgebraDims d(2);
  testdata::Source src(11);
  for (int t = 0; t < 100; ++t) {
    const GradedElem x = random_element(src, d);
    const GradedElem y = random_element(src, d);
    const auto mx = oracle::to_matrix(x);
    const auto my = oracle::to_matrix(y);
    REQUIRE(oracle::to_matrix(commutator(x, y)) == mx * my - my * mx);
    REQUIRE(oracle::to_matrix(product(x, y)) == mx * my);
  }
}

TEST_CASE("commutator of a grade-0 diagonal with Lambda is a cyclic difference") {
  const AlgebraDims d(2);
  testdata::Source src(3);
  const DiagVec a = src.diag(5);
  const GradedElem c = commutator(single_grade(d, 0, a), lambda_power(d, Affine::kTwisted, 1));
  CHECK(c == single_grade(d, 1, a - shift(a, 1)));
  const GradedElem lam = lambda_power(d, Affine::kTwisted, 1);
  CHECK(commutator(lam, lam).is_zero());
  CHECK(commutator(single_grade(d, 0, src.diag(5)), single_grade(d, 0, src.diag(5))).is_zero());
}

TEST_CASE("centers commute") {
  for (int n : {2, 3}) {
    const AlgebraDims d(n);
    for (Affine t : {Affine::kTwisted, Affine::kUntwisted}) {
      for (int r = 1; r <= 4 * n + 3; ++r) {
        if (!is_center_grade(t, d, r)) continue;
        for (int s = -(4 * n + 3); s <= 4 * n + 3; ++s) {
          if (!is_center_grade(t, d, s)) continue;
          CHECK(commutator(lambda_power(d, t, r), single_grade(d, s, ones_diag(d))).is_zero());
        }
      }
    }
  }
}

TEST_CASE("exponentials of lowering generators in closed form") {
  for (int n : {2, 3}) {
    const AlgebraDims d(n);
    const int big = d.size();
    const Fn g(Poly<Rat>{Rat(2), Rat(-1)}, Poly<Rat>::linear(Rat(3)));
    auto f = [&](int i) { return untwisted_f(d, i); };
    auto e = [&](int i) { return unit_diag(d, i); };

    // e^{g F_0} = 1 + g e_{N,N} Lambda^{-1}
    {
      const GradedElem x = single_grade(d, -1, scaled(f(0), g));
      const GradedElem closed = identity_elem(d) + single_grade(d, -1, scaled(e(big), g));
      CHECK(exp_series(x) == closed);
      CHECK(oracle::to_matrix(exp_series(x)) == oracle::identity(big) + oracle::diagonal(scaled(e(big), g)) *
                                                                           oracle::lambda_inverse_matrix(big));
    }
    // e^{g(F_i + F_{N-i})} = 1 + g (e_{i,i} + e_{N-i,N-i}) Lambda^{-1}
    for (int i = 1; i <= n - 1; ++i) {
      const GradedElem x = single_grade(d, -1, scaled(f(i) + f(big - i), g));
      const GradedElem closed = identity_elem(d) + single_grade(d, -1, scaled(e(i) + e(big - i), g));
      CHECK(exp_series(x) == closed);
    }
    // e^{2g(F_n + F_{n+1})} = 1 + 2g (e_{n,n} + e_{n+1,n+1}) Lambda^{-1} + 2g^2 e_{n,n} Lambda^{-2}
    {
      const GradedElem x = single_grade(d, -1, scaled(f(n) + f(n + 1), g * Fn(2)));
      const GradedElem linear = single_grade(d, -1, scaled(e(n) + e(n + 1), g * Fn(2)));
      const GradedElem closed = identity_elem(d) + linear + single_grade(d, -2, scaled(e(n), g * g * Fn(2)));
      CHECK(exp_series(x) == closed);
      const auto m = oracle::to_matrix(x);
      CHECK(oracle::to_matrix(exp_series(x)) == oracle::identity(big) + m + m * m * oracle::diagonal(
                                                                                  scaled(ones_diag(d), Fn(Rat(1, 2)))));
      // The quadratic coefficient 4g^2 does not give the exponential.
      const GradedElem four = identity_elem(d) + linear + single_grade(d, -2, scaled(e(n), g * g * Fn(4)));
      CHECK_FALSE(exp_series(x) == four);
    }
  }
}

TEST_CASE("ad_exp equals conjugation by the matrix exponential") {
  for (int n : {2, 3}) {
    const AlgebraDims d(n);
    const Fn g(Poly<Rat>{Rat(1), Rat(0), Rat(1)}, Poly<Rat>::linear(Rat(-2)));
    const LoopOperator lam{false, lambda_power(d, Affine::kTwisted, 1)};
    for (int j = 0; j <= n; ++j) {
      const GradedElem x = single_grade(d, -1, scaled(twisted_f(d, j), g));
      const GradedElem conj = product(product(exp_series(x), lam.body), exp_series(-x));
      const int depth = 6;
      CHECK(ad_exp(x, lam, depth).body == conj.truncated(-depth));
      // e^{ad g f_j} Lambda = Lambda - g h_j - g^2 f_j
      const GradedElem expected = lam.body - single_grade(d, 0, scaled(twisted_h(d, j), g)) -
                                  single_grade(d, -1, scaled(twisted_f(d, j), g * g));
      CHECK(conj == expected);
    }
  }
}

TEST_CASE("ad_exp on a Miura operator deforms the potential") {
  const AlgebraDims d(2);
  const Fn a(Poly<Rat>::constant(Rat(2)), Poly<Rat>::linear(Rat(5)));
  const DiagVec v{Fn(), a, Fn(), -a, Fn()};
  const LoopOperator op = miura_operator(d, v);
  const Fn g(Poly<Rat>{Rat(1), Rat(3)}, Poly<Rat>{Rat(1), Rat(0), Rat(1)});
  for (int j = 0; j <= 2; ++j) {
    const GradedElem u = single_grade(d, -1, scaled(twisted_f(d, j), g));
    const LoopOperator out = ad_exp(u, op, 4);
    CHECK(out.has_derivation);
    const Fn ric = g.derivative() - alpha_pairing(d, v, j) * g + g * g;
    GradedElem expected(d, -4);
    expected.set(1, ones_diag(d));
    expected.set(0, v - scaled(twisted_h(d, j), g));
    expected.set(-1, scaled(twisted_f(d, j), -ric));
    CHECK(out.body == expected);
  }
  CHECK(ad_exp(GradedElem(d), op, 3).body == op.body.truncated(-3));
  CHECK_THROWS_AS(ad_exp(single_grade(d, 0, ones_diag(d)), op, 3), GradeError);
}

TEST_CASE("inverting ad Lambda") {
  const AlgebraDims d(2);
  {
    const auto r = invert_ad_lambda(zero_diag(d));
    CHECK(is_zero(r.preimage));
    CHECK(r.center.is_zero());
  }
  {
    const DiagVec x{Fn(1), Fn(-1), Fn(), Fn(), Fn()};
    const auto r = invert_ad_lambda(x);
    const Fn big(Rat(-4, 5)), small(Rat(1, 5));
    CHECK(r.preimage == DiagVec{big, small, small, small, small});
    CHECK(r.center.is_zero());
  }
  {
    const auto r = invert_ad_lambda(ones_diag(d));
    CHECK(is_zero(r.preimage));
    CHECK(r.center == Fn(1));
  }
  testdata::Source src(5);
  const GradedElem lam = lambda_power(d, Affine::kTwisted, 1);
  for (int t = 0; t < 30; ++t) {
    const int j = src.integer(-5, 5);
    const DiagVec x = src.diag(5);
    const auto r = invert_ad_lambda(x);
    CHECK(trace(r.preimage).is_zero());
    const GradedElem rebuilt = commutator(lam, single_grade(d, j - 1, r.preimage)) +
                               single_grade(d, j, scaled(ones_diag(d), r.center));
    CHECK(rebuilt == single_grade(d, j, x));
  }
}

TEST_CASE("twisted potential constraints") {
  const AlgebraDims d(2);
  const Fn a(Poly<Rat>::constant(Rat(2)), Poly<Rat>::linear(Rat(7)));
  CHECK(a2_check(zero_diag(d)));
  CHECK(a2_check(DiagVec{Fn(), a, Fn(), -a, Fn()}));
  CHECK(a2_check(DiagVec{Fn(1), Fn(), Fn(), Fn(), Fn(-1)}));
  CHECK_FALSE(a2_check(DiagVec{Fn(1), Fn(-1), Fn(), Fn(), Fn()}));
  CHECK_FALSE(a2_check(unit_diag(d, 3)));
}

TEST_CASE("twisted generators") {
  for (int n : {2, 3, 4}) {
    const AlgebraDims d(n);
    DiagVec serre = twisted_h(d, n);
    for (int j = 0; j < n; ++j) serre = serre + scaled(twisted_h(d, j), Fn(2));
    CHECK(is_zero(serre));
    CHECK(twisted_h(d, n) == scaled(unit_diag(d, n + 2) - unit_diag(d, n), Fn(2)));
    for (int j = 0; j <= n; ++j) {
      const GradedElem e = single_grade(d, 1, twisted_e(d, j));
      const GradedElem f = single_grade(d, -1, twisted_f(d, j));
      CHECK(commutator(e, f) == single_grade(d, 0, twisted_h(d, j)));
      CHECK(in_twisted_subalgebra(e));
      CHECK(in_twisted_subalgebra(f));
      CHECK(in_twisted_subalgebra(single_grade(d, 0, twisted_h(d, j))));
      // [h_j, e_j] = 2 e_j
      CHECK(commutator(single_grade(d, 0, twisted_h(d, j)), e) == e.scaled(Fn(2)));
      CHECK(alpha_pairing(d, twisted_h(d, j), j) == Fn(2));
    }
    CHECK_FALSE(in_twisted_subalgebra(single_grade(d, -1, untwisted_f(d, 1))));
    CHECK_THROWS_AS(twisted_f(d, n + 1), DomainError);
  }
}

TEST_CASE("truncation bookkeeping") {
  const AlgebraDims d(2);
  GradedElem x(d);
  x.set(2, ones_diag(d));
  x.set(-3, ones_diag(d));
  const GradedElem t = x.truncated(-1);
  CHECK(t.floor() == -1);
  CHECK(t.at(2) == ones_diag(d));
  CHECK_THROWS_AS(t.at(-3), DepthError);
  CHECK(x.slice(-3, 0) == single_grade(d, -3, ones_diag(d)));
}
