#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace kantor {

/// Exact rational number.  Values are always canonical: gcd(|num|, den) = 1
/// and den > 0.  Arithmetic is exact; there is no floating-point path.
class Scalar {
 public:
  Scalar() : v_(0) {}
  Scalar(long n) : v_(n) {}  // NOLINT: implicit by design, `3 * x` reads naturally
  Scalar(long num, long den);

  /// Parses "p" or "p/q" with optional leading '-'.  Rejects everything else.
  static Scalar parse(const std::string& text);

  /// Canonical rendering: "p" for integers, "p/q" otherwise.
  std::string str() const { return v_.get_str(); }

  bool is_zero() const { return mpq_sgn(v_.get_mpq_t()) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return mpq_sgn(v_.get_mpq_t()); }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
  Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
  Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }
  Scalar& operator/=(const Scalar& o);

  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return a.v_ != b.v_; }
  friend bool operator<(const Scalar& a, const Scalar& b) { return a.v_ < b.v_; }

 private:
  explicit Scalar(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace kantor
