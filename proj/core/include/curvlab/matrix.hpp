#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "curvlab/field.hpp"

namespace curvlab {

using Vector = std::vector<Residue>;

/// Sparse vector with strictly increasing indices and nonzero values.
struct SparseVec {
  std::vector<std::uint32_t> index;
  std::vector<Residue> value;

  std::size_t nnz() const noexcept { return index.size(); }
  bool empty() const noexcept { return index.empty(); }
  void push(std::uint32_t i, Residue v) {
    index.push_back(i);
    value.push_back(v);
  }
  Vector dense(std::size_t dim) const;
  static SparseVec from_dense(std::span<const Residue> v);
  friend bool operator==(const SparseVec&, const SparseVec&) = default;
};

/// Dense row-major matrix over F_p. Entries are always kept in [0, p).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, PrimeField field);

  static Matrix identity(std::size_t n, PrimeField field);
  static Matrix from_rows(PrimeField field, const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const PrimeField& field() const noexcept { return field_; }

  Residue at(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Residue v) noexcept { data_[r * cols_ + c] = v % field_.modulus(); }

  std::span<const Residue> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
  /// Mutable row access; callers must keep entries reduced.
  std::span<Residue> row_mut(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  Vector column(std::size_t c) const;

  Residue* data() noexcept { return data_.data(); }
  const Residue* data() const noexcept { return data_.data(); }

  Matrix transposed() const;
  Vector apply(std::span<const Residue> x) const;
  bool is_zero() const noexcept;

  /// Keeps the first n rows.
  void truncate_rows(std::size_t n);

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  PrimeField field_;
  std::vector<Residue> data_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

RrefResult rref(Matrix m);
std::size_t rank(Matrix m);
/// Basis of the right null space, one vector per non-pivot column in increasing order.
std::vector<Vector> kernel_basis(const Matrix& m);
/// Some solution of m x = rhs (free variables set to zero), or nullopt when inconsistent.
std::optional<Vector> solve(const Matrix& m, std::span<const Residue> rhs);

/// In-place reduced row echelon form. Returns the pivot columns; the first
/// pivots.size() rows hold the reduced basis. With max_rank set, elimination
/// stops once that many pivots are found and the remaining rows are left
/// unspecified.
std::vector<std::size_t> rref_in_place(Matrix& m, std::size_t max_rank = SIZE_MAX);

/// Row echelon basis grown in batches; used when only a prefix of a tall
/// matrix is needed to reach a known rank. Stored rows are fully reduced
/// against each other, but kept in insertion order.
class EchelonBasis {
 public:
  EchelonBasis(std::size_t cols, PrimeField field);

  std::size_t cols() const noexcept { return cols_; }
  std::size_t rank() const noexcept { return pivots_.size(); }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  std::span<const Residue> row(std::size_t t) const noexcept { return {data_.data() + t * cols_, cols_}; }

  /// Reduces the rows of batch against the basis and appends whatever is
  /// independent. The batch is clobbered. Returns the number of new pivots.
  std::size_t add_rows(Matrix& batch, std::size_t max_new = SIZE_MAX);

 private:
  std::size_t cols_;
  PrimeField field_;
  std::vector<Residue> data_;
  std::vector<std::size_t> pivots_;
};

/// Incrementally built subspace of F_p^n held in fully reduced form: every
/// stored row has a unit pivot at which all other rows vanish. Reducing a
/// vector therefore yields a canonical representative of its coset, supported
/// off the pivot columns.
class RowSpace {
 public:
  RowSpace(std::size_t ambient_dim, PrimeField field);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return rows_.size(); }
  const PrimeField& field() const noexcept { return field_; }

  /// Reduces v in place; returns true when v lies in the span.
  bool reduce(std::span<Residue> v) const;
  bool contains(std::span<const Residue> v) const;
  /// Returns false (and leaves the space unchanged) when v already lies in it.
  bool insert(Vector v);

  const std::vector<Vector>& basis() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  /// Non-pivot columns in increasing order; they index a basis of the quotient.
  std::vector<std::size_t> complement() const;

 private:
  std::size_t ambient_;
  PrimeField field_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::int64_t> pivot_row_;  // column -> row index or -1
};

}  // namespace curvlab
