#pragma once

#include <cstdint>
#include <vector>

#include "curvlab/polynomial.hpp"

namespace curvlab {

/// Reduced, monic Groebner basis sorted by increasing leading monomial.
struct GroebnerBasis {
  std::vector<Polynomial> generators;
  MonomialOrder order = MonomialOrder::kGrevlex;

  bool is_unit() const noexcept;
  std::vector<Monomial> leading_monomials() const;
};

constexpr std::uint32_t kDefaultDegreeGuard = 32;

/// Buchberger's algorithm with the normal selection strategy and the
/// Gebauer-Moeller pair criteria. Throws Errc::kGuardExceeded when an input
/// generator or S-pair lcm has degree above the guard.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, std::uint32_t degree_guard = kDefaultDegreeGuard);

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& g);

/// True when every S-polynomial of the basis reduces to zero.
bool is_groebner_basis(const GroebnerBasis& g);

/// Monomials of degree <= cap outside the leading-term ideal, ordered by
/// degree and, within a degree, by decreasing monomial order.
std::vector<Monomial> standard_monomials(const GroebnerBasis& g, std::uint32_t degree_cap);
std::vector<Monomial> standard_monomials(const std::vector<Monomial>& leading, std::size_t nvars,
                                         MonomialOrder order, std::uint32_t degree_cap);

/// Krull dimension of k[x]/(leading): nvars minus the smallest set of
/// variables meeting the support of every generator.
std::size_t monomial_ideal_dimension(const std::vector<Monomial>& leading, std::size_t nvars);

}  // namespace curvlab
