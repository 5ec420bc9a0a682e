#include "curvlab/matrix.hpp"

#include <algorithm>
#include <cassert>
#include <cstring>

#include "curvlab/error.hpp"

namespace curvlab {

namespace {

__extension__ typedef unsigned __int128 u128;

// Lemire's fastmod for 32-bit operands.
struct Reducer {
  std::uint32_t p;
  std::uint64_t magic;
  explicit Reducer(std::uint32_t p_) : p(p_), magic(~std::uint64_t{0} / p_ + 1) {}
  Residue operator()(std::uint32_t a) const noexcept {
    std::uint64_t low = magic * a;
    return static_cast<Residue>((static_cast<u128>(low) * p) >> 64);
  }
};

constexpr std::size_t kPanel = 64;
constexpr std::size_t kChunk = 1024;

// Arithmetic context for the elimination kernels. Rows are allowed to hold
// unreduced uint32 values as long as at most `budget` products of reduced
// operands have been added since the row was last normalised.
struct Ctx {
  std::uint32_t p;
  Reducer red;
  std::uint64_t budget;
  bool lazy;

  explicit Ctx(std::uint32_t p_) : p(p_), red(p_) {
    std::uint64_t q = p_ - 1;
    budget = (0xFFFFFFFFull - q) / (q * q);
    lazy = budget >= kPanel;
  }

  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>((std::uint64_t{a} * b) % p);
  }

  void normalize(Residue* v, std::size_t n) const noexcept {
    for (std::size_t i = 0; i < n; ++i) v[i] = red(v[i]);
  }

  void axpy(Residue* __restrict d, const Residue* __restrict s, std::size_t n, Residue c) const noexcept {
    if (lazy) {
      for (std::size_t i = 0; i < n; ++i) d[i] += c * s[i];
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        d[i] = static_cast<Residue>((std::uint64_t{d[i]} + std::uint64_t{c} * s[i]) % p);
      }
    }
  }

  // Lazy only.
  static void axpy4(Residue* __restrict d, const Residue* __restrict s0, const Residue* __restrict s1,
                    const Residue* __restrict s2, const Residue* __restrict s3, std::size_t n, Residue c0,
                    Residue c1, Residue c2, Residue c3) noexcept {
    for (std::size_t i = 0; i < n; ++i) d[i] += c0 * s0[i] + c1 * s1[i] + c2 * s2[i] + c3 * s3[i];
  }
};

// For every target row: row -= sum_t row[piv[t]] * src[t] on columns [c0, c1).
// Sources must be reduced on [c0, c1) and satisfy src[t][piv[u]] = delta(t, u).
// adds may be null, in which case targets are normalised before returning.
void apply_sources(const Ctx& ctx, Residue* const* targets, std::size_t nt, std::uint64_t* adds,
                   const Residue* const* srcs, const std::size_t* piv, std::size_t k, std::size_t c0,
                   std::size_t c1) {
  if (nt == 0 || k == 0 || c0 >= c1) return;
  for (std::size_t g0 = 0; g0 < k; g0 += kPanel) {
    const std::size_t g1 = std::min(k, g0 + kPanel);
    const std::size_t gk = g1 - g0;
    std::vector<Residue> coef(nt * gk);
    std::vector<std::uint8_t> idx(nt * gk);
    std::vector<std::uint8_t> cnt(nt, 0);
    for (std::size_t i = 0; i < nt; ++i) {
      Residue* row = targets[i];
      std::uint8_t m = 0;
      for (std::size_t t = 0; t < gk; ++t) {
        Residue c = ctx.red(row[piv[g0 + t]]);
        if (c != 0) {
          coef[i * gk + m] = ctx.p - c;
          idx[i * gk + m] = static_cast<std::uint8_t>(t);
          ++m;
        }
      }
      cnt[i] = m;
      if (m != 0 && ctx.lazy) {
        if (adds == nullptr) continue;
        if (adds[i] + m > ctx.budget) {
          ctx.normalize(row + c0, c1 - c0);
          adds[i] = 0;
        }
        adds[i] += m;
      }
    }
    for (std::size_t cc = c0; cc < c1; cc += kChunk) {
      const std::size_t len = std::min(kChunk, c1 - cc);
      for (std::size_t i = 0; i < nt; ++i) {
        const std::size_t m = cnt[i];
        if (m == 0) continue;
        Residue* d = targets[i] + cc;
        const Residue* cf = &coef[i * gk];
        const std::uint8_t* ix = &idx[i * gk];
        std::size_t u = 0;
        if (ctx.lazy) {
          for (; u + 4 <= m; u += 4) {
            Ctx::axpy4(d, srcs[g0 + ix[u]] + cc, srcs[g0 + ix[u + 1]] + cc, srcs[g0 + ix[u + 2]] + cc,
                       srcs[g0 + ix[u + 3]] + cc, len, cf[u], cf[u + 1], cf[u + 2], cf[u + 3]);
          }
        }
        for (; u < m; ++u) ctx.axpy(d, srcs[g0 + ix[u]] + cc, len, cf[u]);
      }
    }
    if (adds == nullptr && ctx.lazy) {
      for (std::size_t i = 0; i < nt; ++i) {
        if (cnt[i] != 0) ctx.normalize(targets[i] + c0, c1 - c0);
      }
    }
  }
}

void swap_rows(Residue* a, std::size_t cols, std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  std::swap_ranges(a + r1 * cols, a + (r1 + 1) * cols, a + r2 * cols);
}

// Blocked Gauss-Jordan elimination. Columns are processed in panels of
// kPanel: pivots are chosen on a reduced copy of the panel window, the
// selected rows are fully reduced among themselves, and every other row is
// then updated with one pass over the remaining columns.
std::vector<std::size_t> eliminate(Residue* a, std::size_t rows, std::size_t cols, const PrimeField& field,
                                   std::size_t max_rank) {
  std::vector<std::size_t> pivots;
  if (rows == 0 || cols == 0 || max_rank == 0) return pivots;
  const Ctx ctx(field.modulus());
  const std::uint32_t p = ctx.p;
  std::vector<std::uint64_t> adds(rows, 0);
  std::vector<Residue> win;
  std::vector<std::uint32_t> wadds;
  std::vector<std::uint8_t> taken;
  std::vector<std::size_t> sel;
  std::vector<std::size_t> pos_of, row_at;
  std::vector<Residue*> targets;
  std::vector<std::uint64_t> target_adds;
  std::size_t r = 0;

  for (std::size_t c0 = 0; c0 < cols && r < rows && r < max_rank;) {
    const std::size_t c1 = std::min(cols, c0 + kPanel);
    const std::size_t w = c1 - c0;
    const std::size_t cand = rows - r;

    win.resize(cand * w);
    for (std::size_t i = 0; i < cand; ++i) {
      const Residue* src = a + (r + i) * cols + c0;
      Residue* dst = &win[i * w];
      for (std::size_t j = 0; j < w; ++j) dst[j] = ctx.red(src[j]);
    }
    wadds.assign(cand, 0);
    taken.assign(cand, 0);
    sel.clear();
    std::size_t first_pc = pivots.size();

    for (std::size_t j = 0; j < w && r + sel.size() < max_rank && sel.size() < cand; ++j) {
      std::size_t piv = cand;
      for (std::size_t i = 0; i < cand; ++i) {
        if (taken[i]) continue;
        Residue v = ctx.red(win[i * w + j]);
        win[i * w + j] = v;
        if (v != 0) {
          piv = i;
          break;
        }
      }
      if (piv == cand) continue;
      taken[piv] = 1;
      sel.push_back(piv);
      pivots.push_back(c0 + j);
      Residue* pr = &win[piv * w];
      for (std::size_t jj = j; jj < w; ++jj) pr[jj] = ctx.red(pr[jj]);
      const Residue inv = field.inv(pr[j]);
      for (std::size_t jj = j; jj < w; ++jj) pr[jj] = ctx.mul(pr[jj], inv);
      for (std::size_t i = piv + 1; i < cand; ++i) {
        if (taken[i]) continue;
        Residue* wr = &win[i * w];
        Residue c = ctx.red(wr[j]);
        if (c == 0) continue;
        c = p - c;
        if (ctx.lazy) {
          if (wadds[i] + 1 > ctx.budget) {
            ctx.normalize(wr + j, w - j);
            wadds[i] = 0;
          }
          ++wadds[i];
        }
        ctx.axpy(wr + j, pr + j, w - j, c);
      }
    }

    const std::size_t k = sel.size();
    if (k == 0) {
      c0 = c1;
      continue;
    }

    // Move the selected rows to positions r .. r+k-1.
    pos_of.resize(cand);
    row_at.resize(cand);
    for (std::size_t i = 0; i < cand; ++i) pos_of[i] = row_at[i] = i;
    for (std::size_t t = 0; t < k; ++t) {
      const std::size_t li = sel[t];
      const std::size_t cur = pos_of[li];
      if (cur != t) {
        swap_rows(a, cols, r + cur, r + t);
        std::swap(adds[r + cur], adds[r + t]);
        const std::size_t other = row_at[t];
        pos_of[other] = cur;
        row_at[cur] = other;
        pos_of[li] = t;
        row_at[t] = li;
      }
    }

    const std::size_t* pc = pivots.data() + first_pc;
    const std::size_t span = cols - c0;
    std::vector<Residue*> prow(k);
    for (std::size_t t = 0; t < k; ++t) prow[t] = a + (r + t) * cols;

    // Forward pass: row t loses its components along earlier panel pivots.
    std::vector<Residue> c(k);
    for (std::size_t t = 0; t < k; ++t) {
      Residue* row = prow[t];
      ctx.normalize(row + c0, span);
      for (std::size_t u = 0; u < t; ++u) {
        std::uint64_t v = row[pc[u]];
        for (std::size_t u2 = 0; u2 < u; ++u2) {
          v += std::uint64_t{p - c[u2]} * prow[u2][pc[u]] % p;
        }
        c[u] = static_cast<Residue>(v % p);
      }
      std::size_t m = 0;
      for (std::size_t u = 0; u < t; ++u) {
        if (c[u] == 0) continue;
        ctx.axpy(row + c0, prow[u] + c0, span, p - c[u]);
        if (ctx.lazy && ++m == ctx.budget) {
          ctx.normalize(row + c0, span);
          m = 0;
        }
      }
      ctx.normalize(row + c0, span);
      const Residue inv = field.inv(row[pc[t]]);
      for (std::size_t jj = c0; jj < cols; ++jj) row[jj] = ctx.mul(row[jj], inv);
      adds[r + t] = 0;
    }
    // Backward pass: clear entries above each pivot within the panel.
    for (std::size_t t = k; t-- > 0;) {
      ctx.normalize(prow[t] + c0, span);
      for (std::size_t u = 0; u < t; ++u) {
        Residue cu = ctx.red(prow[u][pc[t]]);
        if (cu == 0) continue;
        ctx.axpy(prow[u] + c0, prow[t] + c0, span, p - cu);
      }
    }

    targets.clear();
    target_adds.clear();
    std::vector<std::size_t> tindex;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i >= r && i < r + k) continue;
      targets.push_back(a + i * cols);
      tindex.push_back(i);
      target_adds.push_back(adds[i]);
    }
    apply_sources(ctx, targets.data(), targets.size(), target_adds.data(), prow.data(), pc, k, c0, cols);
    for (std::size_t q = 0; q < tindex.size(); ++q) adds[tindex[q]] = target_adds[q];

    r += k;
    c0 = c1;
  }
  ctx.normalize(a, rows * cols);
  return pivots;
}

}  // namespace

Vector SparseVec::dense(std::size_t dim) const {
  Vector v(dim, 0);
  for (std::size_t i = 0; i < index.size(); ++i) v[index[i]] = value[i];
  return v;
}

SparseVec SparseVec::from_dense(std::span<const Residue> v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) s.push(static_cast<std::uint32_t>(i), v[i]);
  }
  return s;
}

Matrix::Matrix(std::size_t rows, std::size_t cols, PrimeField field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, 0) {}

Matrix Matrix::identity(std::size_t n, PrimeField field) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1 % field.modulus();
  return m;
}

Matrix Matrix::from_rows(PrimeField field, const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols, field);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(Errc::kInvalidArgument, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.data_[r * cols + c] = field.reduce(rows[r][c]);
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = data_[r * cols_ + c];
  return v;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = data_[r * cols_ + c];
  }
  return t;
}

Vector Matrix::apply(std::span<const Residue> x) const {
  if (x.size() != cols_) throw Error(Errc::kInvalidArgument, "dimension mismatch in matrix-vector product");
  const std::uint64_t p = field_.modulus();
  Vector y(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    u128 acc = 0;
    const Residue* row = data_.data() + r * cols_;
    for (std::size_t c = 0; c < cols_; ++c) acc += std::uint64_t{row[c]} * x[c];
    y[r] = static_cast<Residue>(acc % p);
  }
  return y;
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Residue v) { return v == 0; });
}

void Matrix::truncate_rows(std::size_t n) {
  if (n >= rows_) return;
  rows_ = n;
  data_.resize(rows_ * cols_);
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.field_ != b.field_ || a.cols_ != b.rows_) {
    throw Error(Errc::kInvalidArgument, "incompatible matrices in product");
  }
  const std::uint64_t p = a.field_.modulus();
  Matrix out(a.rows_, b.cols_, a.field_);
  std::vector<u128> acc(b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const std::uint64_t x = a.data_[i * a.cols_ + k];
      if (x == 0) continue;
      const Residue* brow = b.data_.data() + k * b.cols_;
      for (std::size_t j = 0; j < b.cols_; ++j) acc[j] += x * brow[j];
    }
    for (std::size_t j = 0; j < b.cols_; ++j) out.data_[i * b.cols_ + j] = static_cast<Residue>(acc[j] % p);
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.field_ != b.field_ || a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw Error(Errc::kInvalidArgument, "incompatible matrices in sum");
  }
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = a.field_.add(a.data_[i], b.data_[i]);
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.field_ != b.field_ || a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw Error(Errc::kInvalidArgument, "incompatible matrices in difference");
  }
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = a.field_.sub(a.data_[i], b.data_[i]);
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<std::size_t> rref_in_place(Matrix& m, std::size_t max_rank) {
  return eliminate(m.data(), m.rows(), m.cols(), m.field(), max_rank);
}

RrefResult rref(Matrix m) {
  auto pivots = rref_in_place(m);
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(Matrix m) { return rref_in_place(m).size(); }

std::vector<Vector> kernel_basis(const Matrix& m) {
  auto [r, pivots] = rref(m);
  const PrimeField& f = m.field();
  std::vector<char> is_pivot(m.cols(), 0);
  for (auto c : pivots) is_pivot[c] = 1;
  std::vector<Vector> basis;
  for (std::size_t fc = 0; fc < m.cols(); ++fc) {
    if (is_pivot[fc]) continue;
    Vector v(m.cols(), 0);
    v[fc] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(r.at(i, fc));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, std::span<const Residue> rhs) {
  if (rhs.size() != m.rows()) throw Error(Errc::kInvalidArgument, "right-hand side length differs from row count");
  const std::size_t n = m.cols();
  Matrix aug(m.rows(), n + 1, m.field());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.row_mut(r)[c] = m.at(r, c);
    aug.row_mut(r)[n] = rhs[r] % m.field().modulus();
  }
  auto pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  Vector x(n, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, n);
  return x;
}

EchelonBasis::EchelonBasis(std::size_t cols, PrimeField field) : cols_(cols), field_(field) {}

std::size_t EchelonBasis::add_rows(Matrix& batch, std::size_t max_new) {
  if (batch.cols() != cols_) throw Error(Errc::kInvalidArgument, "batch width differs from basis width");
  if (batch.rows() == 0 || max_new == 0) return 0;
  const Ctx ctx(field_.modulus());
  const std::size_t k = rank();
  std::vector<const Residue*> src(k);
  for (std::size_t t = 0; t < k; ++t) src[t] = data_.data() + t * cols_;
  std::vector<Residue*> tgt(batch.rows());
  for (std::size_t i = 0; i < batch.rows(); ++i) tgt[i] = batch.data() + i * cols_;
  apply_sources(ctx, tgt.data(), tgt.size(), nullptr, src.data(), pivots_.data(), k, 0, cols_);

  auto fresh = rref_in_place(batch, max_new);
  if (fresh.empty()) return 0;

  std::vector<const Residue*> nsrc(fresh.size());
  for (std::size_t t = 0; t < fresh.size(); ++t) nsrc[t] = batch.data() + t * cols_;
  std::vector<Residue*> btgt(k);
  for (std::size_t t = 0; t < k; ++t) btgt[t] = data_.data() + t * cols_;
  apply_sources(ctx, btgt.data(), k, nullptr, nsrc.data(), fresh.data(), fresh.size(), 0, cols_);

  data_.insert(data_.end(), batch.data(), batch.data() + fresh.size() * cols_);
  pivots_.insert(pivots_.end(), fresh.begin(), fresh.end());
  return fresh.size();
}

RowSpace::RowSpace(std::size_t ambient_dim, PrimeField field)
    : ambient_(ambient_dim), field_(field), pivot_row_(ambient_dim, -1) {}

bool RowSpace::reduce(std::span<Residue> v) const {
  if (v.size() != ambient_) throw Error(Errc::kInvalidArgument, "vector length differs from ambient dimension");
  const std::uint64_t p = field_.modulus();
  bool zero = true;
  for (std::size_t t = 0; t < rows_.size(); ++t) {
    const Residue c = v[pivots_[t]];
    if (c == 0) continue;
    const Residue nc = static_cast<Residue>(p - c);
    const Vector& row = rows_[t];
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (row[j] != 0) v[j] = static_cast<Residue>((v[j] + std::uint64_t{nc} * row[j]) % p);
    }
  }
  for (Residue x : v) {
    if (x != 0) {
      zero = false;
      break;
    }
  }
  return zero;
}

bool RowSpace::contains(std::span<const Residue> v) const {
  Vector w(v.begin(), v.end());
  return reduce(w);
}

bool RowSpace::insert(Vector v) {
  if (reduce(v)) return false;
  std::size_t pc = 0;
  while (v[pc] == 0) ++pc;
  const Residue inv = field_.inv(v[pc]);
  for (auto& x : v) x = field_.mul(x, inv);
  const std::uint64_t p = field_.modulus();
  for (auto& row : rows_) {
    const Residue c = row[pc];
    if (c == 0) continue;
    const Residue nc = static_cast<Residue>(p - c);
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (v[j] != 0) row[j] = static_cast<Residue>((row[j] + std::uint64_t{nc} * v[j]) % p);
    }
  }
  pivot_row_[pc] = static_cast<std::int64_t>(rows_.size());
  pivots_.push_back(pc);
  rows_.push_back(std::move(v));
  return true;
}

std::vector<std::size_t> RowSpace::complement() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (pivot_row_[c] < 0) out.push_back(c);
  }
  return out;
}

}  // namespace curvlab
