#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "curvlab/groebner.hpp"
#include "curvlab/matrix.hpp"

namespace curvlab {

struct HilbertFunction {
  /// values[t] = dim_k m^t / m^{t+1}.
  std::vector<std::size_t> values;
  /// True when the tail of values is constant (zero for artinian rings).
  bool stabilized = false;
};

/// A = k[x_1..x_n]/I with I inside m^2. For Krull dimension 0 the standard
/// monomial basis is finite and the multiplication tables are populated; for
/// positive dimension (standard graded only) the basis is truncated at
/// basis_cap().
class QuotientAlgebra {
 public:
  const PrimeField& field() const noexcept { return field_; }
  std::uint32_t characteristic() const noexcept { return field_.modulus(); }
  const std::vector<std::string>& vars() const noexcept { return vars_; }
  std::size_t nvars() const noexcept { return vars_.size(); }
  MonomialOrder order() const noexcept { return order_; }
  const std::vector<Polynomial>& ideal() const noexcept { return ideal_; }
  const GroebnerBasis& groebner() const noexcept { return gb_; }
  std::size_t krull_dim() const noexcept { return krull_dim_; }
  bool is_artinian() const noexcept { return krull_dim_ == 0; }
  /// The ideal is generated by homogeneous polynomials, so A is standard graded.
  bool is_homogeneous() const noexcept { return homogeneous_; }

  const std::vector<Monomial>& basis() const noexcept { return basis_; }
  std::uint32_t basis_cap() const noexcept { return basis_cap_; }
  std::uint32_t basis_degree(std::size_t i) const { return basis_.at(i).degree(); }
  /// Largest degree of a basis monomial (socle degree when A is graded artinian).
  std::uint32_t top_degree() const noexcept;
  std::optional<std::size_t> index_of(const Monomial& m) const;

  /// l(A); throws Errc::kUnsupportedDimension when A is not artinian.
  std::size_t length() const;
  std::size_t embedding_dim() const noexcept { return vars_.size(); }
  /// Smallest L with m^L = 0 (artinian only).
  std::size_t loewy_length() const;

  Polynomial parse(std::string_view text) const;
  Polynomial zero() const { return Polynomial(nvars(), field_, order_); }
  Polynomial reduce(const Polynomial& f) const { return normal_form(f, gb_); }
  /// Coordinates of NF(f) in the basis (artinian, or graded with deg f small enough).
  Vector coordinates(const Polynomial& f) const;
  Polynomial element(std::span<const Residue> coords) const;

  /// Column j is x_v * basis_j. Artinian only.
  const Matrix& action(std::size_t v) const;
  /// basis_i * basis_j in basis coordinates. Artinian only.
  const SparseVec& product(std::size_t i, std::size_t j) const;
  /// For each basis monomial other than 1: a variable v and the index of the
  /// basis monomial m / x_v, with v the first variable dividing m.
  std::pair<std::size_t, std::size_t> factor(std::size_t i) const { return factor_.at(i); }

  HilbertFunction hilbert_function(std::uint32_t cap) const;

 private:
  friend std::shared_ptr<const QuotientAlgebra> build_algebra(PrimeField, std::vector<std::string>,
                                                             std::vector<Polynomial>, MonomialOrder,
                                                             std::uint32_t);
  QuotientAlgebra() = default;
  void require_artinian(const char* what) const;

  PrimeField field_;
  std::vector<std::string> vars_;
  MonomialOrder order_ = MonomialOrder::kGrevlex;
  std::vector<Polynomial> ideal_;
  GroebnerBasis gb_;
  std::size_t krull_dim_ = 0;
  bool homogeneous_ = true;
  std::uint32_t basis_cap_ = 0;
  std::vector<Monomial> basis_;
  std::map<std::vector<std::uint32_t>, std::size_t> index_;
  std::vector<Matrix> actions_;
  std::vector<SparseVec> products_;
  std::vector<std::pair<std::size_t, std::size_t>> factor_;
};

using AlgebraPtr = std::shared_ptr<const QuotientAlgebra>;

/// Throws NotInMSquared, NotLocal, GuardExceeded, or InvalidArgument.
AlgebraPtr build_algebra(PrimeField field, std::vector<std::string> vars, std::vector<Polynomial> ideal,
                         MonomialOrder order = MonomialOrder::kGrevlex,
                         std::uint32_t degree_guard = kDefaultDegreeGuard);
AlgebraPtr build_algebra(std::uint32_t p, const std::vector<std::string>& vars,
                         const std::vector<std::string>& ideal, MonomialOrder order = MonomialOrder::kGrevlex,
                         std::uint32_t degree_guard = kDefaultDegreeGuard);

/// e(A) for d <= 1; throws Errc::kUnsupportedDimension otherwise.
std::size_t multiplicity(const QuotientAlgebra& a);
/// mu(I) = dim_k I/mI.
std::size_t minimal_generator_count(const QuotientAlgebra& a);
bool is_complete_intersection(const QuotientAlgebra& a);

/// Default regularity bound: twice the largest generator degree plus four.
std::uint32_t default_degree_bound(const QuotientAlgebra& a);
/// Multiplication by the linear form x is injective on A_t for all t <= bound.
bool is_regular_up_to(const QuotientAlgebra& a, const Polynomial& x, std::uint32_t bound);
/// Random search; throws Errc::kZeroDimensional for artinian A.
std::optional<Polynomial> find_linear_regular_element(const QuotientAlgebra& a, std::uint32_t degree_bound,
                                                      std::size_t attempts, std::uint64_t seed = 0);
/// B = k[vars]/(I + (x)), rebuilt on the variables other than the first one
/// occurring in x.
AlgebraPtr quotient_by_linear_form(const QuotientAlgebra& a, const Polynomial& x);

}  // namespace curvlab
