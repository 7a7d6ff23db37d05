#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace asreg {

/// The coefficient field: either the rationals or a prime field F_p.
class Field {
public:
  Field() = default;

  static Field rationals() { return Field{}; }
  static Field prime(std::uint32_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }

  /// "Q" or "F <p>", the same spelling the presentation format uses.
  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

private:
  std::uint32_t p_ = 0;
};

/// Exact field element. Rationals are kept reduced with positive
/// denominator; F_p values are integers in [0, p).
class Scalar {
public:
  Scalar() = default;
  Scalar(Field f, long value);
  Scalar(Field f, const mpq_class& value);

  static Scalar zero(Field f) { return Scalar(f, 0L); }
  static Scalar one(Field f) { return Scalar(f, 1L); }

  /// Parses "n" or "n/m" (optionally signed).
  static Scalar parse(Field f, std::string_view text);

  Field field() const { return field_; }
  const mpq_class& value() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }

  Scalar inverse() const;
  Scalar pow(long exponent) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

  /// Canonical text: "3", "-1/2"; F_p values print as their residue.
  std::string to_string() const;

private:
  void normalize();
  void check_same_field(const Scalar& other) const;

  Field field_;
  mpq_class value_;
};

} // namespace asreg
