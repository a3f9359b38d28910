#pragma once

#include <string>
#include <vector>

#include "mkdv/linear.hpp"
#include "mkdv/ratfn.hpp"

namespace mkdv {

/// (k_0, ..., k_n).
using DegreeVector = std::vector<int>;

/// Generation directions (j_1, ..., j_m), each in {0, ..., n}.
using GenSequence = std::vector<int>;

/// Tuple (y_0, ..., y_n) of polynomials representing a critical point.
template <class F>
struct PolyTuple {
  std::vector<Poly<F>> y;

  int n() const { return static_cast<int>(y.size()) - 1; }
  DegreeVector degrees() const {
    DegreeVector k;
    for (const auto& p : y) k.push_back(p.degree());
    return k;
  }
  friend bool operator==(const PolyTuple&, const PolyTuple&) = default;
};

template <class F>
PolyTuple<F> empty_tuple(int n) {
  return PolyTuple<F>{std::vector<Poly<F>>(static_cast<size_t>(n) + 1, Poly<F>::constant(F(1)))};
}

/// -a_{i,j} for the twisted Cartan matrix, i.e. the exponent of y_i on the
/// right-hand side of the Wronskian equation in direction j.
int wronskian_exponent(int n, int i, int j);

/// prod_{i != j} y_i^{-a_{i,j}}: y_1^2 (j=0), y_{j-1} y_{j+1} (mid),
/// y_{n-2} y_n^2 (j=n-1), y_{n-1} (j=n).
template <class F>
Poly<F> wronskian_rhs(const PolyTuple<F>& y, int j) {
  const int n = y.n();
  Poly<F> out = Poly<F>::constant(F(1));
  for (int i = 0; i <= n; ++i) {
    const int e = wronskian_exponent(n, i, j);
    if (e > 0) out = out * pow(y.y[static_cast<size_t>(i)], e);
  }
  return out;
}

DegreeVector degree_transform(const DegreeVector& k, int i);

struct DegreeWalk {
  bool increasing = true;
  DegreeVector k;
  /// Index (0-based) of the first non-increasing step, or -1.
  int first_failure = -1;
};
DegreeWalk is_degree_increasing(int n, const GenSequence& j);

/// Result of one Wronskian solve: monic y_{j,0} with zero coefficient at x^{k_j}
/// and Wr(y_{j,0}, y_j) = epsilon * rhs.
template <class F>
struct FertilityStep {
  Poly<F> poly;
  F epsilon;
};

/// Solves for the degree-raising descendant by exact linear algebra on
/// coefficients. DegreeError if direction j does not raise the degree,
/// NotFertileError if no polynomial solution exists.
template <class F>
FertilityStep<F> fertility_solve(const PolyTuple<F>& y, int j) {
  const int n = y.n();
  if (j < 0 || j > n) throw DomainError("direction out of range");
  const DegreeVector k = y.degrees();
  const int kj = k[static_cast<size_t>(j)];
  const int target = degree_transform(k, j)[static_cast<size_t>(j)];
  if (target <= kj) {
    throw DegreeError("direction " + std::to_string(j) + " does not raise the degree (" + std::to_string(kj) + " -> " +
                      std::to_string(target) + ")");
  }
  const Poly<F>& yj = y.y[static_cast<size_t>(j)];
  const Poly<F> rhs = wronskian_rhs(y, j);
  // Unknowns: coefficients a_d of x^d for d < target, d != kj, then epsilon.
  std::vector<int> slots;
  for (int d = 0; d < target; ++d) {
    if (d != kj) slots.push_back(d);
  }
  const int nunk = static_cast<int>(slots.size()) + 1;
  const int neq = target + kj;  // deg Wr <= target + kj - 1
  Matrix<F> a(static_cast<size_t>(neq), std::vector<F>(static_cast<size_t>(nunk), F(0)));
  std::vector<F> b(static_cast<size_t>(neq), F(0));
  auto column = [&](const Poly<F>& w, int col) {
    for (int d = 0; d <= w.degree(); ++d) a[static_cast<size_t>(d)][static_cast<size_t>(col)] += w.coeffs()[static_cast<size_t>(d)];
  };
  for (size_t s = 0; s < slots.size(); ++s) column(wronskian(Poly<F>::monomial(F(1), slots[s]), yj), static_cast<int>(s));
  column(-rhs, nunk - 1);
  const Poly<F> lead = wronskian(Poly<F>::monomial(F(1), target), yj);
  for (int d = 0; d <= lead.degree(); ++d) b[static_cast<size_t>(d)] = -lead.coeffs()[static_cast<size_t>(d)];
  if (rhs.degree() >= neq || lead.degree() >= neq) throw NotFertileError("Wronskian right-hand side has unexpected degree");
  auto sol = solve(std::move(a), b, nunk);
  if (!sol) throw NotFertileError("no polynomial solution in direction " + std::to_string(j));
  std::vector<F> coeffs(static_cast<size_t>(target) + 1, F(0));
  coeffs.back() = F(1);
  for (size_t s = 0; s < slots.size(); ++s) coeffs[static_cast<size_t>(slots[s])] = (*sol)[s];
  F eps = sol->back();
  if (!is_unit(eps)) throw NotFertileError("degenerate Wronskian scalar");
  return {Poly<F>(std::move(coeffs)), std::move(eps)};
}

/// Y^J(c) together with all intermediate tuples and the per-step scalars.
template <class F>
struct Generation {
  GenSequence sequence;
  std::vector<PolyTuple<F>> history;  // history[l] = Y^{J_l}(c_1..c_l), history[0] = (1,...,1)
  std::vector<F> epsilons;
  const PolyTuple<F>& tuple() const { return history.back(); }
};

template <class F>
Generation<F> generate(int n, const GenSequence& seq, const std::vector<F>& c) {
  if (n < 2) throw DomainError("rank n must be at least 2");
  if (seq.size() != c.size()) throw DomainError("generation needs one parameter per step");
  for (int j : seq) {
    if (j < 0 || j > n) throw DomainError("generation direction out of range");
  }
  const auto walk = is_degree_increasing(n, seq);
  if (!walk.increasing) {
    throw DegreeError("sequence is not degree increasing at step " + std::to_string(walk.first_failure + 1));
  }
  Generation<F> out;
  out.sequence = seq;
  out.history.push_back(empty_tuple<F>(n));
  for (size_t l = 0; l < seq.size(); ++l) {
    PolyTuple<F> next = out.history.back();
    const int j = seq[l];
    FertilityStep<F> step;
    try {
      step = fertility_solve(next, j);
    } catch (const NotFertileError& e) {
      // Degree-increasing generation from a fertile tuple never fails.
      throw IdentityViolation(std::string("generation step failed: ") + e.what());
    }
    auto& yj = next.y[static_cast<size_t>(j)];
    yj = step.poly + yj.scaled(c[l]);
    out.history.push_back(std::move(next));
    out.epsilons.push_back(step.epsilon);
  }
  return out;
}

/// Each y_i squarefree and consecutive y_i, y_{i+1} coprime.
bool is_generic(const PolyTuple<Rat>& y);

/// True iff the Wronskian equation has a polynomial solution in every
/// direction (of either admissible degree). Throws NotGenericError first if
/// the tuple is not generic.
bool fertility_identity(const PolyTuple<Rat>& y);

/// Whether a polynomial solution exists in one direction.
bool fertile_in_direction(const PolyTuple<Rat>& y, int j);

/// Variables u_i^{(j)} grouped by color j.
struct CriticalSystem {
  int n = 2;
  std::vector<std::vector<Rat>> u;  // u[j] has k_j entries
};

/// One weighted logarithm coeff * ln(u_a - u_b) of the master function.
struct LogTerm {
  int coeff;
  int color_a, index_a, color_b, index_b;
};

struct MasterValue {
  std::vector<LogTerm> terms;
  /// prod (u_a - u_b)^coeff over all terms.
  Rat product;
};

MasterValue master_value(const CriticalSystem& sys);

/// Left-hand sides of the critical point equations, ordered by color then index.
std::vector<Rat> bethe_residuals(const CriticalSystem& sys);

/// Roots-to-tuple helper: y_j = prod (x - u_i^{(j)}).
PolyTuple<Rat> tuple_from_roots(const CriticalSystem& sys);

}  // namespace mkdv
