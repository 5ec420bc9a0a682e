#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "curvlab/field.hpp"

namespace curvlab {

enum class MonomialOrder { kGrevlex, kLex };

std::string_view order_name(MonomialOrder order) noexcept;
/// Accepts "grevlex" or "lex"; throws Errc::kParse otherwise.
MonomialOrder parse_order(std::string_view name);

struct Monomial {
  std::vector<std::uint32_t> exp;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exp(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> e) : exp(std::move(e)) {}

  static Monomial variable(std::size_t nvars, std::size_t v);

  std::size_t nvars() const noexcept { return exp.size(); }
  std::uint32_t degree() const noexcept;
  bool is_one() const noexcept;
  bool divides(const Monomial& other) const noexcept;
  /// this / other; requires other.divides(*this).
  Monomial quotient(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const noexcept;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Negative, zero, or positive as a is below, equal to, or above b.
int compare(const Monomial& a, const Monomial& b, MonomialOrder order) noexcept;

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& vars);

struct Term {
  Monomial mono;
  Residue coeff;
};

/// Polynomial over F_p with terms kept sorted in decreasing monomial order.
class Polynomial {
 public:
  Polynomial(std::size_t nvars, PrimeField field, MonomialOrder order = MonomialOrder::kGrevlex);

  static Polynomial constant(std::size_t nvars, PrimeField field, MonomialOrder order, std::int64_t c);
  static Polynomial monomial(const Monomial& m, Residue c, PrimeField field, MonomialOrder order);

  std::size_t nvars() const noexcept { return nvars_; }
  const PrimeField& field() const noexcept { return field_; }
  MonomialOrder order() const noexcept { return order_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  const Term& leading() const;
  const Monomial& leading_monomial() const { return leading().mono; }
  /// Largest total degree of a term; 0 for the zero polynomial.
  std::uint32_t degree() const noexcept;
  /// Smallest total degree of a term; 0 for the zero polynomial.
  std::uint32_t low_degree() const noexcept;
  bool is_homogeneous() const noexcept;
  Residue coefficient(const Monomial& m) const noexcept;

  Polynomial with_order(MonomialOrder order) const;
  Polynomial scaled(Residue c) const;
  Polynomial times_monomial(const Monomial& m, Residue c) const;
  Polynomial monic() const;
  /// Adds c * m * other to this polynomial.
  void add_multiple(const Polynomial& other, const Monomial& m, Residue c);

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  std::string to_string(const std::vector<std::string>& vars) const;

  /// Builds from unsorted terms, merging duplicates and dropping zeros.
  static Polynomial from_terms(std::size_t nvars, PrimeField field, MonomialOrder order, std::vector<Term> terms);

 private:
  void check_compatible(const Polynomial& other) const;

  std::size_t nvars_;
  PrimeField field_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

/// Parses `poly := term (('+'|'-') term)*` with
/// `term := [coeff]['*']? (var('^'int)?('*'var('^'int)?)*)`; whitespace is ignored.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& vars, PrimeField field,
                            MonomialOrder order = MonomialOrder::kGrevlex);

}  // namespace curvlab
