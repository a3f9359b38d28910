#pragma once

#include <ostream>
#include <type_traits>

#include "mkdv/errors.hpp"
#include "mkdv/rational.hpp"

namespace mkdv {

/// Element value + eps * tangent of T[eps]/(eps^2).
///
/// Used at two levels: Dual<Rat> differentiates generation in a parameter c_i,
/// and Dual<RatFn<Rat>> differentiates operator products along a tangent
/// direction of the potential.
template <class T>
class Dual {
 public:
  Dual() : value_(0), eps_(0) {}
  Dual(T value) : value_(std::move(value)), eps_(zero_like(value_)) {}  // NOLINT
  Dual(T value, T eps) : value_(std::move(value)), eps_(std::move(eps)) {}
  Dual(int v) : value_(T(v)), eps_(T(0)) {}  // NOLINT

  static Dual variable(T value) { return Dual(std::move(value), T(1)); }

  const T& value() const { return value_; }
  const T& eps() const { return eps_; }

  bool is_zero() const { return value_ == T(0) && eps_ == T(0); }

  Dual operator-() const { return Dual(-value_, -eps_); }
  Dual& operator+=(const Dual& o) { value_ += o.value_; eps_ += o.eps_; return *this; }
  Dual& operator-=(const Dual& o) { value_ -= o.value_; eps_ -= o.eps_; return *this; }
  Dual& operator*=(const Dual& o) {
    eps_ = value_ * o.eps_ + eps_ * o.value_;
    value_ *= o.value_;
    return *this;
  }
  Dual& operator/=(const Dual& o) {
    if (o.value_ == T(0)) throw FieldError("division by a dual number with zero value part");
    // (a + eps b)/(c + eps d) = a/c + eps (b c - a d)/c^2
    T inv = T(1) / o.value_;
    T v = value_ * inv;
    eps_ = (eps_ - v * o.eps_) * inv;
    value_ = std::move(v);
    return *this;
  }

  friend Dual operator+(Dual a, const Dual& b) { return a += b; }
  friend Dual operator-(Dual a, const Dual& b) { return a -= b; }
  friend Dual operator*(Dual a, const Dual& b) { return a *= b; }
  friend Dual operator/(Dual a, const Dual& b) { return a /= b; }
  friend bool operator==(const Dual& a, const Dual& b) { return a.value_ == b.value_ && a.eps_ == b.eps_; }

  friend std::ostream& operator<<(std::ostream& os, const Dual& d) {
    return os << "(" << d.value_ << " + eps*" << d.eps_ << ")";
  }

 private:
  static T zero_like(const T&) { return T(0); }

  T value_;
  T eps_;
};

using DualRat = Dual<Rat>;

template <class T>
struct is_dual : std::false_type {};
template <class T>
struct is_dual<Dual<T>> : std::true_type {};
template <class T>
inline constexpr bool is_dual_v = is_dual<T>::value;

}  // namespace mkdv
