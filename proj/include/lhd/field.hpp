#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace lhd {

/// The ground field: the rationals, or the prime field F_p with p < 2^31.
///
/// Field elements are stored as mpq_class throughout. Over F_p they are kept
/// as integer representatives in [0, p); every operation below returns a
/// canonical representative, so equality of stored values is field equality.
class Field {
 public:
  static Field rationals() noexcept { return Field(0); }
  /// Throws std::invalid_argument unless p is a prime below 2^31.
  static Field prime(std::uint32_t p);

  std::uint32_t characteristic() const noexcept { return p_; }
  bool is_rationals() const noexcept { return p_ == 0; }
  std::string name() const;

  mpq_class from_int(long v) const;
  /// Maps a rational into the field; over F_p the denominator must be a unit.
  mpq_class from_rational(const mpq_class& v) const;

  mpq_class add(const mpq_class& a, const mpq_class& b) const;
  mpq_class sub(const mpq_class& a, const mpq_class& b) const;
  mpq_class mul(const mpq_class& a, const mpq_class& b) const;
  mpq_class neg(const mpq_class& a) const;
  /// Throws std::domain_error on zero.
  mpq_class inv(const mpq_class& a) const;
  mpq_class div(const mpq_class& a, const mpq_class& b) const { return mul(a, inv(b)); }

  /// a += b * c, in place.
  void add_mul(mpq_class& a, const mpq_class& b, const mpq_class& c) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t p) noexcept : p_(p) {}
  std::uint32_t p_;
};

/// A field element bundled with its field, for callers that want value
/// semantics with operators instead of going through Field directly.
class Scalar {
 public:
  Scalar(Field f, long v) : field_(f), value_(f.from_int(v)) {}
  Scalar(Field f, const mpq_class& v) : field_(f), value_(f.from_rational(v)) {}

  const Field& field() const noexcept { return field_; }
  const mpq_class& value() const noexcept { return value_; }
  bool is_zero() const { return sgn(value_) == 0; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;

  bool operator==(const Scalar& o) const { return field_ == o.field_ && value_ == o.value_; }

  std::string to_string() const { return value_.get_str(); }

 private:
  struct Raw {};
  Scalar(Raw, Field f, mpq_class v) : field_(f), value_(std::move(v)) {}
  void require_same(const Scalar& o) const;

  Field field_;
  mpq_class value_;
};

}  // namespace lhd
