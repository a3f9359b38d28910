#include "mkdv/generation.hpp"

namespace mkdv {

int wronskian_exponent(int n, int i, int j) {
  if (i == j) return 0;
  if (j == 0) return i == 1 ? 2 : 0;
  if (j == n) return i == n - 1 ? 1 : 0;
  if (j == n - 1) {
    if (i == n) return 2;
    return i == n - 2 ? 1 : 0;
  }
  return (i == j - 1 || i == j + 1) ? 1 : 0;
}

DegreeVector degree_transform(const DegreeVector& k, int i) {
  const int n = static_cast<int>(k.size()) - 1;
  if (n < 2) throw DomainError("degree vector must have at least 3 entries");
  if (i < 0 || i > n) throw DomainError("degree transformation index out of range");
  DegreeVector out = k;
  auto at = [&](int idx) { return k[static_cast<size_t>(idx)]; };
  int& target = out[static_cast<size_t>(i)];
  if (i == 0) {
    target = 2 * at(1) + 1 - at(0);
  } else if (i == n) {
    target = at(n - 1) + 1 - at(n);
  } else if (i == n - 1) {
    target = at(n - 2) + 2 * at(n) + 1 - at(n - 1);
  } else {
    target = at(i - 1) + at(i + 1) + 1 - at(i);
  }
  return out;
}

DegreeWalk is_degree_increasing(int n, const GenSequence& seq) {
  DegreeWalk walk;
  walk.k.assign(static_cast<size_t>(n) + 1, 0);
  for (size_t s = 0; s < seq.size(); ++s) {
    const int j = seq[s];
    DegreeVector next = degree_transform(walk.k, j);
    if (walk.increasing && next[static_cast<size_t>(j)] <= walk.k[static_cast<size_t>(j)]) {
      walk.increasing = false;
      walk.first_failure = static_cast<int>(s);
    }
    walk.k = std::move(next);
  }
  return walk;
}

bool is_generic(const PolyTuple<Rat>& y) {
  for (const auto& p : y.y) {
    if (p.is_zero() || !is_squarefree(p)) return false;
  }
  for (size_t i = 0; i + 1 < y.y.size(); ++i) {
    if (!coprime(y.y[i], y.y[i + 1])) return false;
  }
  return true;
}

bool fertile_in_direction(const PolyTuple<Rat>& y, int j) {
  const DegreeVector k = y.degrees();
  const Poly<Rat>& yj = y.y[static_cast<size_t>(j)];
  const Poly<Rat> rhs = wronskian_rhs(y, j);
  const int top = std::max(k[static_cast<size_t>(j)], degree_transform(k, j)[static_cast<size_t>(j)]);
  if (top < 0) return false;
  const int neq = std::max(top + yj.degree(), rhs.degree() + 1);
  Matrix<Rat> a(static_cast<size_t>(neq), std::vector<Rat>(static_cast<size_t>(top) + 1, Rat(0)));
  for (int d = 0; d <= top; ++d) {
    const Poly<Rat> w = wronskian(Poly<Rat>::monomial(Rat(1), d), yj);
    for (int e = 0; e <= w.degree(); ++e) a[static_cast<size_t>(e)][static_cast<size_t>(d)] = w.coeffs()[static_cast<size_t>(e)];
  }
  std::vector<Rat> b(static_cast<size_t>(neq), Rat(0));
  for (int e = 0; e <= rhs.degree(); ++e) b[static_cast<size_t>(e)] = rhs.coeffs()[static_cast<size_t>(e)];
  return solve(std::move(a), b, top + 1).has_value();
}

bool fertility_identity(const PolyTuple<Rat>& y) {
  if (!is_generic(y)) throw NotGenericError("tuple is not generic");
  for (int j = 0; j <= y.n(); ++j) {
    if (!fertile_in_direction(y, j)) return false;
  }
  return true;
}

namespace {

// Weight of ln(u^{(a)} - u^{(b)}) in the master function; a == b is the
// same-color weight.
int interaction(int n, int a, int b) {
  if (a == b) {
    if (a == n) return 8;
    return a == 0 ? 2 : 4;
  }
  if (a > b) std::swap(a, b);
  if (b != a + 1) return 0;
  return b == n ? -4 : -2;
}

void check_system(const CriticalSystem& sys) {
  if (sys.n < 2) throw DomainError("rank n must be at least 2");
  if (static_cast<int>(sys.u.size()) != sys.n + 1) throw DomainError("critical system needs n+1 color groups");
}

}  // namespace

MasterValue master_value(const CriticalSystem& sys) {
  check_system(sys);
  MasterValue out{{}, Rat(1)};
  const int n = sys.n;
  for (int a = 0; a <= n; ++a) {
    for (int b = a; b <= n; ++b) {
      const int w = interaction(n, a, b);
      if (w == 0) continue;
      const auto& ua = sys.u[static_cast<size_t>(a)];
      const auto& ub = sys.u[static_cast<size_t>(b)];
      for (size_t i = 0; i < ua.size(); ++i) {
        for (size_t l = (a == b ? i + 1 : 0); l < ub.size(); ++l) {
          const Rat d = ua[i] - ub[l];
          if (d.is_zero()) throw SingularityError("coincident interacting variables");
          out.terms.push_back({w, a, static_cast<int>(i), b, static_cast<int>(l)});
          out.product *= pow(d, w);
        }
      }
    }
  }
  return out;
}

std::vector<Rat> bethe_residuals(const CriticalSystem& sys) {
  check_system(sys);
  const int n = sys.n;
  std::vector<Rat> out;
  for (int a = 0; a <= n; ++a) {
    const auto& ua = sys.u[static_cast<size_t>(a)];
    for (size_t i = 0; i < ua.size(); ++i) {
      Rat r(0);
      for (int b = std::max(0, a - 1); b <= std::min(n, a + 1); ++b) {
        const int w = interaction(n, a, b);
        const auto& ub = sys.u[static_cast<size_t>(b)];
        for (size_t l = 0; l < ub.size(); ++l) {
          if (a == b && l == i) continue;
          const Rat d = ua[i] - ub[l];
          if (d.is_zero()) throw SingularityError("coincident interacting variables");
          r += Rat(w) / d;
        }
      }
      out.push_back(r);
    }
  }
  return out;
}

PolyTuple<Rat> tuple_from_roots(const CriticalSystem& sys) {
  check_system(sys);
  PolyTuple<Rat> out;
  for (const auto& roots : sys.u) {
    Poly<Rat> p = Poly<Rat>::constant(Rat(1));
    for (const auto& r : roots) p = p * Poly<Rat>::linear(-r);
    out.y.push_back(std::move(p));
  }
  return out;
}

}  // namespace mkdv
