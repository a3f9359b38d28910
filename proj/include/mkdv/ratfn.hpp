#pragma once

#include <ostream>
#include <string>
#include <type_traits>
#include <utility>

#include "mkdv/poly.hpp"

namespace mkdv {

/// Reduced quotient num/den of polynomials: gcd(num, den) = 1, den monic.
/// Canonical form makes equality a structural comparison.
template <class F>
class RatFn {
 public:
  using Field = F;

  RatFn() : num_(), den_(Poly<F>::constant(F(1))) {}
  RatFn(int v) : RatFn(Poly<F>::constant(F(v))) {}  // NOLINT
  RatFn(F v) : RatFn(Poly<F>::constant(std::move(v))) {}  // NOLINT
  RatFn(Poly<F> p) : num_(std::move(p)), den_(Poly<F>::constant(F(1))) {}  // NOLINT
  RatFn(Poly<F> num, Poly<F> den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  const Poly<F>& num() const { return num_; }
  const Poly<F>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RatFn operator-() const { return from_reduced(-num_, den_); }

  friend RatFn operator+(const RatFn& a, const RatFn& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFn(a.num_ + b.num_, a.den_);
    if (a.is_polynomial()) return from_reduced(a.num_ * b.den_ + b.num_, b.den_);
    if (b.is_polynomial()) return from_reduced(a.num_ + b.num_ * a.den_, a.den_);
    if constexpr (std::is_same_v<F, Rat>) {
      // Henrici: only factors of gcd(den a, den b) can cancel.
      const Poly<F> g = gcd(a.den_, b.den_);
      if (g.degree() == 0) return from_reduced(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
      const Poly<F> bq = exact_div(a.den_, g), dq = exact_div(b.den_, g);
      Poly<F> t = a.num_ * dq + b.num_ * bq;
      Poly<F> den = bq * b.den_;
      if (t.is_zero()) return RatFn();
      const Poly<F> h = gcd(t, g);
      if (h.degree() > 0) {
        t = exact_div(t, h);
        den = exact_div(den, h);
      }
      return from_reduced(std::move(t), std::move(den));
    } else {
      return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
  }
  friend RatFn operator-(const RatFn& a, const RatFn& b) { return a + (-b); }
  friend RatFn operator*(const RatFn& a, const RatFn& b) {
    if (a.is_zero() || b.is_zero()) return RatFn();
    if (a.is_polynomial() && b.is_polynomial()) return RatFn(a.num_ * b.num_);
    if constexpr (std::is_same_v<F, Rat>) {
      // Cross-cancel num(a) with den(b) and num(b) with den(a).
      Poly<F> an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
      if (bd.degree() > 0) {
        const Poly<F> g = gcd(an, bd);
        if (g.degree() > 0) an = exact_div(an, g), bd = exact_div(bd, g);
      }
      if (ad.degree() > 0) {
        const Poly<F> g = gcd(bn, ad);
        if (g.degree() > 0) bn = exact_div(bn, g), ad = exact_div(ad, g);
      }
      return from_reduced(an * bn, ad * bd);
    } else {
      return RatFn(a.num_ * b.num_, a.den_ * b.den_);
    }
  }
  friend RatFn operator/(const RatFn& a, const RatFn& b) {
    if (b.is_zero()) throw DomainError("rational function division by zero");
    return RatFn(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
  RatFn& operator-=(const RatFn& o) { return *this = *this - o; }
  RatFn& operator*=(const RatFn& o) { return *this = *this * o; }
  RatFn& operator/=(const RatFn& o) { return *this = *this / o; }

  RatFn scaled(const F& s) const {
    if (s == F(0)) return RatFn();
    return from_reduced(num_.scaled(s), den_);
  }

  /// d/dx, reduced.
  RatFn derivative() const {
    if (is_polynomial()) return RatFn(num_.derivative());
    return RatFn(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }

  F operator()(const F& at) const {
    F d = den_(at);
    if (!is_unit(d)) throw PoleError("rational function evaluated at a pole");
    return num_(at) / d;
  }

  friend bool operator==(const RatFn& a, const RatFn& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  std::string to_string() const {
    if (is_polynomial()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }
  friend std::ostream& operator<<(std::ostream& os, const RatFn& r) { return os << r.to_string(); }

 private:
  static RatFn from_reduced(Poly<F> num, Poly<F> den) {
    RatFn out;
    out.num_ = std::move(num);
    out.den_ = out.num_.is_zero() ? Poly<F>::constant(F(1)) : std::move(den);
    return out;
  }

  void normalize() {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = Poly<F>::constant(F(1));
      return;
    }
    if (den_.degree() > 0) {
      Poly<F> g = common_factor();
      if (g.degree() > 0) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
      }
    }
    const F lead = den_.leading();
    if (!(lead == F(1))) {
      if (!is_unit(lead)) throw FieldError("denominator leading coefficient is not invertible");
      const F inv = F(1) / lead;
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }

  Poly<F> common_factor() const {
    if constexpr (is_dual_v<F>) {
      // Coprime value parts imply coprime dual polynomials (a Bezout identity
      // for the values lifts to a unit). This avoids spurious FieldErrors from
      // abnormal remainder sequences in the common, generic case.
      auto [nv, ne] = split(num_);
      auto [dv, de] = split(den_);
      if (nv.is_zero() || gcd(nv, dv).degree() == 0) return Poly<F>::constant(F(1));
    }
    return gcd(num_, den_);
  }

  Poly<F> num_;
  Poly<F> den_;
};

using Fn = RatFn<Rat>;

/// f'/f, reduced.
template <class F>
RatFn<F> log_deriv(const Poly<F>& f) {
  if (f.is_zero()) throw DomainError("logarithmic derivative of the zero polynomial");
  return RatFn<F>(f.derivative(), f);
}

/// Value and tangent parts of a rational function with dual coefficients:
/// (N0 + eps N1)/(D0 + eps D1) = N0/D0 + eps (N1 D0 - N0 D1)/D0^2.
template <class T>
std::pair<RatFn<T>, RatFn<T>> split(const RatFn<Dual<T>>& f) {
  auto [n0, n1] = split(f.num());
  auto [d0, d1] = split(f.den());
  return {RatFn<T>(n0, d0), RatFn<T>(n1 * d0 - n0 * d1, d0 * d0)};
}

}  // namespace mkdv
