#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mkdv/generation.hpp"
#include "support/cells.hpp"
#include "support/random.hpp"

using namespace mkdv;

namespace {

using P = Poly<Rat>;

P xp(const Rat& a) { return P::linear(a); }
P one() { return P::constant(Rat(1)); }

}  // namespace

TEST_CASE("Wronskian right-hand sides follow the twisted Cartan matrix") {
  const P a = xp(Rat(1)), b = xp(Rat(2)), c = xp(Rat(3));
  const PolyTuple<Rat> y{{a, b, c}};
  CHECK(wronskian_rhs(y, 0) == b * b);
  CHECK(wronskian_rhs(y, 1) == a * c * c);
  CHECK(wronskian_rhs(y, 2) == b);
  const P d = xp(Rat(4));
  const PolyTuple<Rat> z{{a, b, c, d}};
  CHECK(wronskian_rhs(z, 0) == b * b);
  CHECK(wronskian_rhs(z, 1) == a * c);
  CHECK(wronskian_rhs(z, 2) == b * d * d);
  CHECK(wronskian_rhs(z, 3) == c);
}

TEST_CASE("degree transformations") {
  CHECK(degree_transform({0, 0, 0}, 0) == DegreeVector{1, 0, 0});
  CHECK(degree_transform({0, 0, 0}, 2) == DegreeVector{0, 0, 1});
  CHECK(degree_transform({0, 0, 1}, 1) == DegreeVector{0, 3, 1});
  CHECK(degree_transform({0, 0, 0, 0}, 1) == DegreeVector{0, 1, 0, 0});
  CHECK(degree_transform({0, 1, 0, 0}, 2) == DegreeVector{0, 1, 2, 0});
  CHECK_THROWS_AS(degree_transform({0, 0, 0}, 3), DomainError);

  const auto one_step = is_degree_increasing(2, {2});
  CHECK(one_step.increasing);
  CHECK(one_step.k == DegreeVector{0, 0, 1});
  const auto twice = is_degree_increasing(2, {2, 2});
  CHECK_FALSE(twice.increasing);
  CHECK(twice.first_failure == 1);
  const auto three = is_degree_increasing(2, {2, 1, 0});
  CHECK(three.increasing);
  CHECK(three.k == DegreeVector{7, 3, 1});
}

TEST_CASE("fertility solve") {
  for (int j = 0; j <= 2; ++j) {
    const auto step = fertility_solve(empty_tuple<Rat>(2), j);
    CHECK(step.poly == P::x());
    CHECK(step.epsilon == Rat(-1));
  }
  const Rat c(3, 2);
  const auto step = fertility_solve(PolyTuple<Rat>{{one(), one(), xp(c)}}, 1);
  CHECK(step.poly == pow(xp(c), 3) - P::constant(c * c * c));
  CHECK(wronskian(step.poly, one()) == wronskian_rhs(PolyTuple<Rat>{{one(), one(), xp(c)}}, 1).scaled(step.epsilon));
  CHECK_THROWS_AS(fertility_solve(PolyTuple<Rat>{{one(), one(), P::x()}}, 2), DegreeError);
}

TEST_CASE("generation") {
  const Rat c1(-2, 3), c2(5);
  const auto base = generate<Rat>(2, {1}, {c1});
  CHECK(base.tuple() == PolyTuple<Rat>{{one(), xp(c1), one()}});
  const auto g = generate<Rat>(2, {2, 1}, {Rat(0), c2});
  CHECK(g.tuple() == PolyTuple<Rat>{{one(), P::monomial(Rat(1), 3) + P::constant(c2), P::x()}});
  CHECK(generate<Rat>(2, {}, {}).tuple() == empty_tuple<Rat>(2));
  CHECK_THROWS_AS(generate<Rat>(2, {2, 2}, {Rat(1), Rat(1)}), DegreeError);
  CHECK_THROWS_AS(generate<Rat>(2, {2}, {}), DomainError);
  // distinct parameters give distinct tuples
  CHECK_FALSE(generate<Rat>(2, {2, 1}, {Rat(1), Rat(2)}).tuple() == generate<Rat>(2, {2, 1}, {Rat(1), Rat(3)}).tuple());
  CHECK_FALSE(generate<Rat>(2, {2, 1}, {Rat(1), Rat(2)}).tuple() == generate<Rat>(2, {2, 1}, {Rat(2), Rat(2)}).tuple());
}

TEST_CASE("generated tuples are monic, generic, fertile and carry Wronskian certificates") {
  testdata::Source src(21);
  for (int n : {2, 3}) {
    for (const auto& seq : testdata::degree_increasing_sequences(n, n == 2 ? 3 : 2)) {
      std::vector<Rat> c;
      for (size_t l = 0; l < seq.size(); ++l) c.push_back(src.rat(9, 5));
      const auto g = generate(n, seq, c);
      const PolyTuple<Rat>& y = g.tuple();
      CHECK(y.degrees() == is_degree_increasing(n, seq).k);
      for (const auto& p : y.y) CHECK(p.is_monic());
      if (!is_generic(y)) continue;  // finitely many exceptional c
      CHECK(fertility_identity(y));
      for (size_t l = 0; l < seq.size(); ++l) {
        const int j = seq[l];
        const P& before = g.history[l].y[static_cast<size_t>(j)];
        const P& after = g.history[l + 1].y[static_cast<size_t>(j)];
        const P fresh = after - before.scaled(c[l]);
        CHECK(fresh.coeff(before.degree()) == Rat(0));
        const Rat& eps = g.epsilons[l];
        CHECK(eps.is_integer());
        CHECK_FALSE(eps.is_zero());
        CHECK(wronskian(after, before) == wronskian_rhs(g.history[l], j).scaled(eps));
      }
    }
  }
}

TEST_CASE("genericity") {
  CHECK(fertility_identity(empty_tuple<Rat>(2)));
  const PolyTuple<Rat> bad{{one(), P::monomial(Rat(1), 2), P::x()}};
  CHECK_FALSE(is_generic(bad));
  CHECK_THROWS_AS(fertility_identity(bad), NotGenericError);
  const PolyTuple<Rat> shared{{one(), xp(Rat(1)), xp(Rat(1))}};
  CHECK_FALSE(is_generic(shared));
}

TEST_CASE("master function") {
  const CriticalSystem empty{2, {{}, {}, {}}};
  CHECK(master_value(empty).terms.empty());
  CHECK(master_value(empty).product == Rat(1));
  CHECK(bethe_residuals(empty).empty());

  const CriticalSystem single{2, {{}, {}, {Rat(4)}}};
  CHECK(master_value(single).terms.empty());
  CHECK(master_value(single).product == Rat(1));
  CHECK(bethe_residuals(single) == std::vector<Rat>{Rat(0)});

  const CriticalSystem pair{2, {{}, {}, {Rat(0), Rat(1)}}};
  const auto mv = master_value(pair);
  REQUIRE(mv.terms.size() == 1);
  CHECK(mv.terms[0].coeff == 8);
  CHECK(mv.product == Rat(1));
  CHECK_THROWS_AS(master_value(CriticalSystem{2, {{}, {}, {Rat(1), Rat(1)}}}), SingularityError);
  CHECK_THROWS_AS(bethe_residuals(CriticalSystem{2, {{Rat(1)}, {Rat(1)}, {}}}), SingularityError);
}

TEST_CASE("critical points on cells with rational roots") {
  testdata::Source src(31);
  // J = (0, 1) and (1, 2): the last polynomial is quadratic with roots a, b
  // once c_1 = -(a+b)/2 and c_2 = ab.
  for (const GenSequence seq : {GenSequence{0, 1}, GenSequence{1, 2}}) {
    for (int t = 0; t < 5; ++t) {
      const Rat a = src.rat(9, 3);
      Rat b = src.rat(9, 3);
      if (a == b) b += Rat(1);
      const Rat c1 = -(a + b) / Rat(2), c2 = a * b;
      const auto y = generate<Rat>(2, seq, {c1, c2}).tuple();
      CriticalSystem sys{2, {{}, {}, {}}};
      sys.u[static_cast<size_t>(seq[0])] = {-c1};
      sys.u[static_cast<size_t>(seq[1])] = {a, b};
      CHECK(tuple_from_roots(sys) == y);
      for (const Rat& r : bethe_residuals(sys)) CHECK(r == Rat(0));
      // moving one root off the cell breaks criticality
      sys.u[static_cast<size_t>(seq[1])][0] += Rat(1, 7);
      bool all_zero = true;
      for (const Rat& r : bethe_residuals(sys)) all_zero = all_zero && r.is_zero();
      CHECK_FALSE(all_zero);
    }
  }
  // k = (0, 0, 1): every point is critical and equals generate((2), -u).
  for (int t = 0; t < 5; ++t) {
    const Rat u = src.rat();
    const CriticalSystem sys{2, {{}, {}, {u}}};
    CHECK(bethe_residuals(sys) == std::vector<Rat>{Rat(0)});
    CHECK(tuple_from_roots(sys) == generate<Rat>(2, {2}, {-u}).tuple());
  }
}

TEST_CASE("generation over dual numbers") {
  const Rat c1(1, 2), c2(-3);
  const auto g = generate<DualRat>(2, {2, 1}, {DualRat(c1), DualRat::variable(c2)});
  const auto plain = generate<Rat>(2, {2, 1}, {c1, c2});
  for (int i = 0; i <= 2; ++i) {
    const auto [value, tangent] = split(g.tuple().y[static_cast<size_t>(i)]);
    CHECK(value == plain.tuple().y[static_cast<size_t>(i)]);
    // y_1 is linear in c_2 with slope 1 = y_1 before the step
    CHECK(tangent == (i == 1 ? one() : P()));
  }
}
