#pragma once

#include <span>
#include <string>
#include <vector>

#include "curvlab/algebra.hpp"

namespace curvlab {

/// A finitely generated module over an artinian algebra, held as a
/// finite-dimensional vector space with one action matrix per variable
/// (column j of action(v) is x_v applied to basis vector j). Optionally
/// carries an internal degree for each basis vector; graded modules let the
/// resolution engine split every computation by degree.
class ModuleRep {
 public:
  ModuleRep(AlgebraPtr algebra, std::vector<Matrix> actions, std::vector<int> degrees = {},
            std::string provenance = {});

  static ModuleRep zero(AlgebraPtr algebra);
  /// A^rank with generators in degree 0.
  static ModuleRep free(AlgebraPtr algebra, std::size_t rank);

  const QuotientAlgebra& algebra() const noexcept { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const noexcept { return algebra_; }
  std::size_t dim() const noexcept { return dim_; }
  const Matrix& action(std::size_t v) const { return actions_.at(v); }
  const std::vector<Matrix>& actions() const noexcept { return actions_; }
  bool graded() const noexcept { return graded_; }
  /// Internal degrees of the basis vectors; empty when not graded.
  const std::vector<int>& degrees() const noexcept { return degrees_; }
  const std::string& provenance() const noexcept { return provenance_; }
  void set_provenance(std::string p) { provenance_ = std::move(p); }

  /// Action matrices of every basis monomial of A, in basis order.
  std::vector<Matrix> monomial_actions() const;
  /// Forgets the grading.
  ModuleRep ungraded() const;
  /// Relabels basis vector i as perm[i].
  ModuleRep permuted(const std::vector<std::size_t>& perm) const;
  /// Actions commute and every ideal generator acts as zero.
  bool satisfies_relations() const;

 private:
  AlgebraPtr algebra_;
  std::size_t dim_ = 0;
  std::vector<Matrix> actions_;
  std::vector<int> degrees_;
  bool graded_ = false;
  std::string provenance_;
};

/// b0 x b1 matrix with entries in A; column c is stored as a sparse vector in
/// k^(b0 * l(A)) with index r * l(A) + s for basis monomial s in row r.
struct PresentationMatrix {
  std::size_t target_rank = 0;
  std::size_t source_rank = 0;
  std::size_t algebra_length = 0;
  std::vector<SparseVec> columns;

  static PresentationMatrix from_polynomials(const QuotientAlgebra& a,
                                             const std::vector<std::vector<Polynomial>>& rows);
  static PresentationMatrix from_strings(const QuotientAlgebra& a, const std::vector<std::vector<std::string>>& rows);

  Vector entry(std::size_t r, std::size_t c) const;
  /// Every entry lies in the maximal ideal (no coefficient on the basis monomial 1).
  bool is_minimal() const;
};

/// Subspace generated by the vectors as a submodule (closed under the actions).
RowSpace submodule_closure(const ModuleRep& m, const std::vector<Vector>& gens);
/// m / s for a submodule s.
ModuleRep quotient_module(const ModuleRep& m, const RowSpace& s);
/// The submodule s of m as a module in its own right (basis: the rows of s).
ModuleRep submodule(const ModuleRep& m, const RowSpace& s);

/// Throws Errc::kUnitIdeal when the ideal generated in A contains a unit.
ModuleRep cyclic_module(AlgebraPtr a, const std::vector<Polynomial>& ideal_gens);
ModuleRep cyclic_module(AlgebraPtr a, const std::vector<std::string>& ideal_gens);
ModuleRep cokernel_module(AlgebraPtr a, const PresentationMatrix& pm);
ModuleRep residue_field(AlgebraPtr a);

/// mM, the sum of the images of the variable actions.
RowSpace maximal_ideal_image(const ModuleRep& m);
std::size_t min_gens(const ModuleRep& m);
/// Basis vectors spanning a complement of mM; they minimally generate m.
std::vector<std::size_t> minimal_generator_indices(const ModuleRep& m);
std::size_t socle_dim(const ModuleRep& m);

ModuleRep direct_sum(const ModuleRep& m, const ModuleRep& n);
ModuleRep tensor(const ModuleRep& m, const ModuleRep& n);
ModuleRep hom_module(const ModuleRep& m, const ModuleRep& n);
/// Transposed actions; throws Errc::kNotArtinian for positive-dimensional algebras.
ModuleRep matlis_dual(const ModuleRep& m);

}  // namespace curvlab
