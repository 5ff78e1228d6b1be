#include "kantor/scalar.hpp"

#include <cctype>
#include <ostream>

#include "kantor/errors.hpp"

namespace kantor {

Scalar::Scalar(long num, long den) {
  if (den == 0) throw InputError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

namespace {

bool looks_like_rational(const std::string& s) {
  size_t i = 0;
  if (i < s.size() && s[i] == '-') ++i;
  size_t digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
  if (digits == 0) return false;
  if (i == s.size()) return true;
  if (s[i] != '/') return false;
  ++i;
  digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
  return digits > 0 && i == s.size();
}

}  // namespace

Scalar Scalar::parse(const std::string& text) {
  if (!looks_like_rational(text))
    throw ParseError("not a rational literal: '" + text + "'");
  mpq_class v;
  if (mpq_set_str(v.get_mpq_t(), text.c_str(), 10) != 0)
    throw ParseError("not a rational literal: '" + text + "'");
  if (mpz_sgn(mpq_denref(v.get_mpq_t())) == 0)
    throw ParseError("zero denominator in '" + text + "'");
  v.canonicalize();
  return Scalar(std::move(v));
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.v_ = -r.v_;
  return r;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw Error("division by zero");
  v_ /= o.v_;
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("inverse of zero");
  return Scalar(1) / *this;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace kantor
