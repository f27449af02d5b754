#include "lhd/field.hpp"

#include <stdexcept>

#include "lhd/errors.hpp"

namespace lhd {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t as_u64(const mpq_class& a) { return a.get_num().get_ui(); }

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1;
  base %= mod;
  while (exp) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw std::invalid_argument("field characteristic must be a prime below 2^31, got " +
                                std::to_string(p));
  return Field(p);
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F_" + std::to_string(p_); }

mpq_class Field::from_int(long v) const {
  if (p_ == 0) return mpq_class(v);
  long r = v % static_cast<long>(p_);
  if (r < 0) r += p_;
  return mpq_class(r);
}

mpq_class Field::from_rational(const mpq_class& v) const {
  if (p_ == 0) return v;
  mpz_class num = v.get_num() % p_;
  if (num < 0) num += p_;
  mpz_class den = v.get_den() % p_;
  if (den == 0) throw std::domain_error("denominator vanishes in " + name() + ": " + v.get_str());
  std::uint64_t inv_den = pow_mod(den.get_ui(), p_ - 2, p_);
  return mpq_class(num.get_ui() * inv_den % p_);
}

mpq_class Field::add(const mpq_class& a, const mpq_class& b) const {
  if (p_ == 0) return a + b;
  std::uint64_t r = as_u64(a) + as_u64(b);
  if (r >= p_) r -= p_;
  return mpq_class(r);
}

mpq_class Field::sub(const mpq_class& a, const mpq_class& b) const {
  if (p_ == 0) return a - b;
  std::uint64_t x = as_u64(a), y = as_u64(b);
  return mpq_class(x >= y ? x - y : x + p_ - y);
}

mpq_class Field::mul(const mpq_class& a, const mpq_class& b) const {
  if (p_ == 0) return a * b;
  return mpq_class(as_u64(a) * as_u64(b) % p_);
}

mpq_class Field::neg(const mpq_class& a) const {
  if (p_ == 0) return -a;
  std::uint64_t x = as_u64(a);
  return mpq_class(x == 0 ? 0 : p_ - x);
}

mpq_class Field::inv(const mpq_class& a) const {
  if (sgn(a) == 0) throw std::domain_error("inverse of zero");
  if (p_ == 0) return 1 / a;
  return mpq_class(pow_mod(as_u64(a), p_ - 2, p_));
}

void Field::add_mul(mpq_class& a, const mpq_class& b, const mpq_class& c) const {
  if (p_ == 0) {
    a += b * c;
    return;
  }
  a = mpq_class((as_u64(a) + as_u64(b) * as_u64(c)) % p_);
}

void Scalar::require_same(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw FieldMismatch("scalar arithmetic across " + field_.name() + " and " + o.field_.name());
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same(o);
  return Scalar(Raw{}, field_, field_.add(value_, o.value_));
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same(o);
  return Scalar(Raw{}, field_, field_.sub(value_, o.value_));
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same(o);
  return Scalar(Raw{}, field_, field_.mul(value_, o.value_));
}

Scalar Scalar::operator/(const Scalar& o) const {
  require_same(o);
  return Scalar(Raw{}, field_, field_.div(value_, o.value_));
}

Scalar Scalar::operator-() const { return Scalar(Raw{}, field_, field_.neg(value_)); }

Scalar Scalar::inverse() const { return Scalar(Raw{}, field_, field_.inv(value_)); }

}  // namespace lhd
