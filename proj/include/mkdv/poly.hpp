#pragma once

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "mkdv/dual.hpp"
#include "mkdv/errors.hpp"
#include "mkdv/rational.hpp"

namespace mkdv {

// Coefficient fields: Rat, and Dual<Rat> (a local ring; an element is
// invertible iff its value part is nonzero).
inline bool is_unit(const Rat& r) { return !r.is_zero(); }
template <class T>
bool is_unit(const Dual<T>& d) {
  return is_unit(d.value());
}

/// Dense univariate polynomial, coefficients lowest degree first.
/// The zero polynomial has no coefficients; otherwise the leading coefficient
/// is nonzero.
template <class F>
class Poly {
 public:
  using Field = F;

  Poly() = default;
  explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<F> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(F v) { return Poly(std::vector<F>{std::move(v)}); }
  static Poly x() { return Poly(std::vector<F>{F(0), F(1)}); }
  static Poly monomial(F v, int degree) {
    std::vector<F> c(static_cast<size_t>(degree) + 1, F(0));
    c.back() = std::move(v);
    return Poly(std::move(c));
  }
  /// x + a
  static Poly linear(F a) { return Poly(std::vector<F>{std::move(a), F(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<F>& coeffs() const { return c_; }
  F coeff(int d) const { return (d < 0 || d > degree()) ? F(0) : c_[static_cast<size_t>(d)]; }
  const F& leading() const {
    if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return c_.back();
  }
  bool is_monic() const { return !c_.empty() && c_.back() == F(1); }

  Poly monic() const {
    if (c_.empty()) return *this;
    if (!is_unit(c_.back())) throw FieldError("leading coefficient is not invertible");
    F inv = F(1) / c_.back();
    return scaled(inv);
  }

  Poly scaled(const F& s) const {
    std::vector<F> out;
    out.reserve(c_.size());
    for (const F& a : c_) out.push_back(a * s);
    return Poly(std::move(out));
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<F> out(c_.size() - 1, F(0));
    for (size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * F(static_cast<int>(i));
    return Poly(std::move(out));
  }

  F operator()(const F& at) const {
    F acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  Poly operator-() const { return scaled(F(-1)); }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<F> out(a.c_.size() + b.c_.size() - 1, F(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == F(0)) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Human-readable form in x, highest degree first.
  std::string to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
      F a = c_[static_cast<size_t>(d)];
      if (a == F(0)) continue;
      bool negative = false;
      if constexpr (std::is_same_v<F, Rat>) negative = a.sign() < 0;
      if (negative) a = -a;
      if (first) {
        if (negative) os << "-";
      } else {
        os << (negative ? " - " : " + ");
      }
      first = false;
      if (d == 0) {
        os << a;
      } else {
        if (!(a == F(1))) os << a << "*";
        os << "x";
        if (d > 1) os << "^" << d;
      }
    }
    return os.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == F(0)) c_.pop_back();
  }

  std::vector<F> c_;
};

/// Euclidean division a = q*b + r with deg r < deg b.
template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (!is_unit(b.leading())) throw FieldError("divisor has a non-invertible leading coefficient");
  if (a.degree() < b.degree()) return {Poly<F>(), a};
  std::vector<F> rem = a.coeffs();
  std::vector<F> quo(static_cast<size_t>(a.degree() - b.degree() + 1), F(0));
  const F inv = F(1) / b.leading();
  const int db = b.degree();
  for (int d = a.degree(); d >= db; --d) {
    const F& top = rem[static_cast<size_t>(d)];
    if (top == F(0)) continue;
    F factor = top * inv;
    for (int k = 0; k <= db; ++k) rem[static_cast<size_t>(d - db + k)] -= factor * b.coeffs()[static_cast<size_t>(k)];
    quo[static_cast<size_t>(d - db)] = std::move(factor);
  }
  rem.resize(static_cast<size_t>(db));
  return {Poly<F>(std::move(quo)), Poly<F>(std::move(rem))};
}

template <class F>
Poly<F> exact_div(const Poly<F>& a, const Poly<F>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw DivisibilityError("polynomial exact division left a nonzero remainder");
  return q;
}

/// Monic greatest common divisor (zero iff both arguments are zero).
/// Over Dual<Rat> the Euclidean algorithm raises FieldError when a remainder's
/// leading coefficient is a pure infinitesimal.
template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    b = b.monic();
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Wr(f, g) = f g' - f' g.
template <class F>
Poly<F> wronskian(const Poly<F>& f, const Poly<F>& g) {
  return f * g.derivative() - f.derivative() * g;
}

template <class F>
Poly<F> pow(const Poly<F>& p, int e) {
  Poly<F> out = Poly<F>::constant(F(1));
  for (int i = 0; i < e; ++i) out = out * p;
  return out;
}

namespace detail {

using ZPoly = std::vector<mpz_class>;

inline void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Divides out the content and makes the leading coefficient positive.
inline void make_primitive(ZPoly& p) {
  trim(p);
  if (p.empty()) return;
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  if (p.back() < 0) g = -g;
  if (g != 1) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

inline ZPoly to_integer(const Poly<Rat>& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.raw().get_den_mpz_t());
  ZPoly out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.raw().get_num() * (l / c.raw().get_den()));
  make_primitive(out);
  return out;
}

// Pseudo-remainder of a by b, replaced by its primitive part.
inline ZPoly primitive_prem(ZPoly a, const ZPoly& b) {
  const size_t db = b.size() - 1;
  const mpz_class& lb = b.back();
  while (a.size() > db) {
    const mpz_class la = a.back();
    const size_t shift = a.size() - 1 - db;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), la.get_mpz_t(), lb.get_mpz_t());
    const mpz_class fa = lb / g, fb = la / g;
    for (auto& c : a) c *= fa;
    for (size_t k = 0; k <= db; ++k) a[shift + k] -= fb * b[k];
    trim(a);
  }
  make_primitive(a);
  return a;
}

// Whether b divides a in Z[x].
inline bool divides(ZPoly a, const ZPoly& b) {
  const size_t db = b.size() - 1;
  const mpz_class& lb = b.back();
  mpz_class q;
  while (a.size() > db) {
    if (!mpz_divisible_p(a.back().get_mpz_t(), lb.get_mpz_t())) return false;
    mpz_divexact(q.get_mpz_t(), a.back().get_mpz_t(), lb.get_mpz_t());
    const size_t shift = a.size() - 1 - db;
    for (size_t k = 0; k <= db; ++k) a[shift + k] -= q * b[k];
    trim(a);
  }
  return a.empty();
}

inline mpz_class max_norm(const ZPoly& p) {
  mpz_class m = 0;
  for (const auto& c : p) {
    if (abs(c) > m) m = abs(c);
  }
  return m;
}

// Heuristic gcd of primitive polynomials: the integer gcd of the values at a
// large point, read back in base xi, is the gcd once its primitive part
// divides both inputs (xi > 2 min(|a|, |b|) guarantees this).
inline std::optional<ZPoly> heuristic_gcd(const ZPoly& a, const ZPoly& b) {
  mpz_class xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    auto eval = [&](const ZPoly& p) {
      mpz_class v = 0;
      for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * xi + *it;
      return v;
    };
    mpz_class h;
    mpz_gcd(h.get_mpz_t(), eval(a).get_mpz_t(), eval(b).get_mpz_t());
    ZPoly g;
    const mpz_class half = xi / 2;
    while (h != 0) {
      mpz_class c;
      mpz_fdiv_r(c.get_mpz_t(), h.get_mpz_t(), xi.get_mpz_t());
      if (c > half) c -= xi;
      g.push_back(c);
      h = (h - c) / xi;
    }
    make_primitive(g);
    if (!g.empty() && divides(a, g) && divides(b, g)) return g;
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

}  // namespace detail

/// Over Q the gcd is computed over Z: heuristically by evaluation first, then by
/// a primitive remainder sequence, which keeps coefficient growth in check.
inline Poly<Rat> gcd(const Poly<Rat>& a0, const Poly<Rat>& b0) {
  if (a0.is_zero()) return b0.monic();
  if (b0.is_zero()) return a0.monic();
  if (a0.degree() == 0 || b0.degree() == 0) return Poly<Rat>::constant(Rat(1));
  detail::ZPoly a = detail::to_integer(a0), b = detail::to_integer(b0);
  if (a.size() < b.size()) std::swap(a, b);
  if (auto h = detail::heuristic_gcd(a, b)) {
    a = std::move(*h);
    b.clear();
  }
  while (!b.empty()) {
    if (b.size() == 1) return Poly<Rat>::constant(Rat(1));
    detail::ZPoly r = detail::primitive_prem(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  std::vector<Rat> c;
  c.reserve(a.size());
  for (const auto& z : a) c.emplace_back(mpq_class(z, a.back()));
  return Poly<Rat>(std::move(c));
}

inline bool is_squarefree(const Poly<Rat>& p) {
  if (p.degree() <= 0) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

inline bool coprime(const Poly<Rat>& a, const Poly<Rat>& b) { return gcd(a, b).degree() == 0; }

/// Splits a dual-coefficient polynomial into value and tangent parts.
template <class T>
std::pair<Poly<T>, Poly<T>> split(const Poly<Dual<T>>& p) {
  std::vector<T> v, e;
  for (const auto& c : p.coeffs()) {
    v.push_back(c.value());
    e.push_back(c.eps());
  }
  return {Poly<T>(std::move(v)), Poly<T>(std::move(e))};
}

template <class T>
Poly<Dual<T>> lift(const Poly<T>& p) {
  std::vector<Dual<T>> out;
  for (const auto& c : p.coeffs()) out.emplace_back(c);
  return Poly<Dual<T>>(std::move(out));
}

}  // namespace mkdv
