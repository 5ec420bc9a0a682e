#pragma once

#include <cstdint>

namespace curvlab {

/// Residue class representative in [0, p).
using Residue = std::uint32_t;

bool is_prime(std::uint32_t n) noexcept;

/// Arithmetic in F_p for a prime p < 2^31.
class PrimeField {
 public:
  static constexpr std::uint32_t kDefaultModulus = 101;

  explicit PrimeField(std::uint32_t p = kDefaultModulus);

  std::uint32_t modulus() const noexcept { return p_; }

  Residue reduce(std::int64_t v) const noexcept {
    auto r = v % static_cast<std::int64_t>(p_);
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }
  Residue add(Residue a, Residue b) const noexcept {
    Residue s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>((std::uint64_t{a} * b) % p_);
  }
  /// Throws Errc::kInvalidArgument on zero.
  Residue inv(Residue a) const;
  Residue pow(Residue a, std::uint64_t e) const noexcept;

  /// Symmetric representative in (-p/2, p/2], used for printing.
  std::int64_t centered(Residue a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a;
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

/// A field element bundled with its modulus. Mixing moduli throws.
class FieldScalar {
 public:
  FieldScalar(std::int64_t value, PrimeField field);

  Residue value() const noexcept { return value_; }
  std::uint32_t modulus() const noexcept { return field_.modulus(); }
  const PrimeField& field() const noexcept { return field_; }

  FieldScalar inverse() const;

  friend FieldScalar operator+(const FieldScalar& a, const FieldScalar& b);
  friend FieldScalar operator-(const FieldScalar& a, const FieldScalar& b);
  friend FieldScalar operator*(const FieldScalar& a, const FieldScalar& b);
  friend FieldScalar operator/(const FieldScalar& a, const FieldScalar& b);
  FieldScalar operator-() const;
  friend bool operator==(const FieldScalar&, const FieldScalar&) = default;

 private:
  static void check_same(const FieldScalar& a, const FieldScalar& b);

  PrimeField field_;
  Residue value_;
};

}  // namespace curvlab
