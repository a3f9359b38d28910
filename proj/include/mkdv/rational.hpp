#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "mkdv/errors.hpp"

namespace mkdv {

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class. The wrapper exists so that generic
/// code (Poly<F>, Dual<T>, linear solvers) never sees gmpxx expression
/// templates, which do not play well with `auto`.
class Rat {
 public:
  Rat() = default;
  Rat(long v) : q_(v) {}  // NOLINT: implicit by design of a numeric type
  Rat(int v) : q_(v) {}   // NOLINT
  Rat(long num, long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  explicit Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "p", "-p", or "p/q".
  static Rat parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw SchemaError("empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw SchemaError("malformed rational literal '" + s + "'");
    if (q.get_den() == 0) throw SchemaError("rational literal with zero denominator '" + s + "'");
    q.canonicalize();
    return Rat(q);
  }

  const mpq_class& raw() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// Always "p/q", including integers ("5/1"), so files are self-describing.
  std::string to_string() const {
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }
  /// "p" for integers, "p/q" otherwise.
  std::string to_short_string() const { return q_.get_str(); }

  Rat operator-() const { return Rat(mpq_class(-q_)); }
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw DomainError("division by zero rational");
    q_ /= o.q_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_short_string(); }

 private:
  mpq_class q_;
};

inline Rat pow(const Rat& base, int e) {
  if (e < 0) return Rat(1) / pow(base, -e);
  Rat out(1);
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace mkdv
