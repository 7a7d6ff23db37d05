#include "asreg/scalar.hpp"

#include "asreg/errors.hpp"

#include <charconv>

namespace asreg {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

} // namespace

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p))
    throw InvalidPresentation("field characteristic " + std::to_string(p) +
                              " is not prime");
  Field f;
  f.p_ = p;
  return f;
}

std::string Field::to_string() const {
  return is_rational() ? "Q" : "F " + std::to_string(p_);
}

Scalar::Scalar(Field f, long value) : field_(f), value_(value) { normalize(); }

Scalar::Scalar(Field f, const mpq_class& value) : field_(f), value_(value) {
  normalize();
}

Scalar Scalar::parse(Field f, std::string_view text) {
  auto slash = text.find('/');
  auto num_text = std::string(text.substr(0, slash));
  mpz_class num, den = 1;
  if (num.set_str(num_text, 10) != 0)
    throw InvalidPresentation("bad scalar literal '" + std::string(text) + "'");
  if (slash != std::string_view::npos) {
    if (den.set_str(std::string(text.substr(slash + 1)), 10) != 0 || den == 0)
      throw InvalidPresentation("bad scalar literal '" + std::string(text) +
                                "'");
  }
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(f, q);
}

void Scalar::normalize() {
  value_.canonicalize();
  if (field_.is_rational())
    return;
  mpz_class p = field_.characteristic();
  mpz_class num = value_.get_num() % p;
  mpz_class den = value_.get_den() % p;
  if (den == 0)
    throw InvalidPresentation("denominator divisible by the characteristic");
  if (den != 1) {
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    num = num * inv;
  }
  num %= p;
  if (num < 0)
    num += p;
  value_ = mpq_class(num);
}

void Scalar::check_same_field(const Scalar& other) const {
  if (!(field_ == other.field_))
    throw FieldMismatch("scalar fields differ: " + field_.to_string() +
                        " vs " + other.field_.to_string());
}

Scalar Scalar::inverse() const {
  if (is_zero())
    throw std::domain_error("inverse of zero");
  return Scalar(field_, mpq_class(1) / value_);
}

Scalar Scalar::pow(long exponent) const {
  Scalar base = exponent < 0 ? inverse() : *this;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                 : static_cast<unsigned long>(exponent);
  Scalar result = one(field_);
  while (e) {
    if (e & 1u)
      result *= base;
    base *= base;
    e >>= 1u;
  }
  return result;
}

Scalar Scalar::operator-() const { return Scalar(field_, -value_); }

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same_field(rhs);
  value_ += rhs.value_;
  if (!field_.is_rational())
    normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  check_same_field(rhs);
  value_ -= rhs.value_;
  if (!field_.is_rational())
    normalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_same_field(rhs);
  value_ *= rhs.value_;
  if (!field_.is_rational())
    normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  check_same_field(rhs);
  return *this *= rhs.inverse();
}

std::string Scalar::to_string() const { return value_.get_str(); }

} // namespace asreg
