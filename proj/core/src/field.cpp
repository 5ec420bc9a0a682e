#include "curvlab/field.hpp"

#include <string>

#include "curvlab/error.hpp"

namespace curvlab {

bool is_prime(std::uint32_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint32_t d = 3; std::uint64_t{d} * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw Error(Errc::kInvalidArgument, "characteristic " + std::to_string(p) + " is not a prime below 2^31");
  }
}

Residue PrimeField::inv(Residue a) const {
  if (a % p_ == 0) throw Error(Errc::kInvalidArgument, "inverse of zero in F_" + std::to_string(p_));
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a % p_;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return reduce(t);
}

Residue PrimeField::pow(Residue a, std::uint64_t e) const noexcept {
  Residue result = 1 % p_;
  Residue base = a % p_;
  while (e != 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

FieldScalar::FieldScalar(std::int64_t value, PrimeField field) : field_(field), value_(field.reduce(value)) {}

void FieldScalar::check_same(const FieldScalar& a, const FieldScalar& b) {
  if (a.field_ != b.field_) throw Error(Errc::kInvalidArgument, "mixed moduli in field arithmetic");
}

FieldScalar FieldScalar::inverse() const { return FieldScalar(field_.inv(value_), field_); }

FieldScalar FieldScalar::operator-() const { return FieldScalar(field_.neg(value_), field_); }

FieldScalar operator+(const FieldScalar& a, const FieldScalar& b) {
  FieldScalar::check_same(a, b);
  return FieldScalar(a.field_.add(a.value_, b.value_), a.field_);
}

FieldScalar operator-(const FieldScalar& a, const FieldScalar& b) {
  FieldScalar::check_same(a, b);
  return FieldScalar(a.field_.sub(a.value_, b.value_), a.field_);
}

FieldScalar operator*(const FieldScalar& a, const FieldScalar& b) {
  FieldScalar::check_same(a, b);
  return FieldScalar(a.field_.mul(a.value_, b.value_), a.field_);
}

FieldScalar operator/(const FieldScalar& a, const FieldScalar& b) {
  FieldScalar::check_same(a, b);
  return FieldScalar(a.field_.mul(a.value_, a.field_.inv(b.value_)), a.field_);
}

}  // namespace curvlab
