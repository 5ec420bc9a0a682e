#include "curvlab/resolution.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "curvlab/error.hpp"

namespace curvlab {

namespace {

constexpr std::size_t kBatchRows = 512;
constexpr std::size_t kMaxDenseEntries = 600'000'000;
constexpr std::size_t kMaxExplicitDim = 4000;

// Kernel of one degree block of a stage map, kept in reduced echelon form.
struct Block {
  int degree = 0;
  std::vector<std::size_t> cols;  // column indices j * L + s, increasing
  Matrix reduced;                 // rank x cols.size()
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> free;  // positions into cols
};

struct StageResult {
  std::size_t rank = 0;
  std::size_t kernel_dim = 0;
  std::vector<int> new_degrees;
  std::vector<SparseVec> new_gens;  // empty unless materialised
};

void check_dense(std::size_t rows, std::size_t cols) {
  if (rows != 0 && cols > kMaxDenseEntries / rows) {
    throw Error(Errc::kBudgetExceeded, "a " + std::to_string(rows) + " x " + std::to_string(cols) +
                                           " elimination block exceeds the dense size limit");
  }
}

}  // namespace

bool FreeResolution::finite_pd() const noexcept {
  return std::find(betti.begin(), betti.end(), std::size_t{0}) != betti.end();
}

struct Resolver::Impl {
  ResolveOptions opts;
  AlgebraPtr alg;
  std::shared_ptr<const ModuleRep> module;  // possibly shuffled copy
  std::size_t len = 0;
  bool graded = false;
  std::mt19937_64 rng;

  FreeResolution res;
  std::size_t stage = 0;  // gens are the generators of F_stage
  std::vector<SparseVec> gens;
  std::vector<int> gen_deg;
  bool pending = false;  // betti[stage + 1] known but its generators were not kept
  std::vector<Matrix> module_monomials;

  Impl(const ModuleRep& m, ResolveOptions o) : opts(o), alg(m.algebra_ptr()), rng(o.shuffle_seed) {
    len = alg->length();
    graded = opts.use_grading && m.graded() && alg->is_homogeneous();
    ModuleRep work = graded ? m : m.ungraded();
    if (opts.shuffle_seed != 0 && work.dim() > 1) {
      std::vector<std::size_t> perm(work.dim());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      work = work.permuted(perm);
    }
    module = std::make_shared<const ModuleRep>(std::move(work));
    res.module = std::make_shared<const ModuleRep>(m);
    res.graded = graded;
    module_monomials = module->monomial_actions();

    // Stage 0: minimal generators of M are basis vectors spanning a complement of mM.
    for (std::size_t idx : minimal_generator_indices(*module)) {
      SparseVec g;
      g.push(static_cast<std::uint32_t>(idx), 1);
      gens.push_back(std::move(g));
      gen_deg.push_back(graded ? module->degrees()[idx] : 0);
    }
    shuffle_generators();
    res.betti.push_back(gens.size());
    res.syzygy_lengths.push_back(module->dim());
    res.generator_degrees.push_back(graded ? gen_deg : std::vector<int>{});
    check_budget(gens.size());
  }

  int adeg(std::size_t s) const { return graded ? static_cast<int>(alg->basis_degree(s)) : 0; }

  void check_budget(std::size_t b) const {
    if (b != 0 && len * b > opts.budget) {
      throw Error(Errc::kBudgetExceeded, "free module of rank " + std::to_string(b) + " has k-dimension " +
                                             std::to_string(len * b) + " above the budget " +
                                             std::to_string(opts.budget));
    }
  }

  // Reorders the generators of F_stage (degrees stay ascending so blocks
  // remain contiguous) and the recorded data that refers to them.
  void shuffle_generators() {
    if (opts.shuffle_seed == 0 || gens.size() < 2) return;
    std::vector<std::size_t> perm(gens.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return gen_deg[a] < gen_deg[b]; });
    std::vector<SparseVec> g2;
    std::vector<int> d2;
    for (auto i : perm) {
      g2.push_back(std::move(gens[i]));
      d2.push_back(gen_deg[i]);
    }
    gens = std::move(g2);
    gen_deg = std::move(d2);
    if (graded && res.generator_degrees.size() > stage) res.generator_degrees[stage] = gen_deg;
    if (stage >= 1 && res.boundaries.size() == stage) {
      auto& cols = res.boundaries[stage - 1].columns;
      std::vector<SparseVec> c2;
      for (auto i : perm) c2.push_back(std::move(cols[i]));
      cols = std::move(c2);
    }
  }

  // Target of the current stage map: M for stage 0, F_{stage-1} otherwise.
  std::size_t target_dim() const { return stage == 0 ? module->dim() : len * res.betti[stage - 1]; }

  int target_degree(std::size_t t) const {
    if (!graded) return 0;
    if (stage == 0) return module->degrees()[t];
    return res.generator_degrees[stage - 1][t / len] + adeg(t % len);
  }

  // Adds s * g_j into column q of phi, whose rows are indexed through row_pos.
  void add_image(Matrix& phi, std::size_t q, std::size_t j, std::size_t s,
                 const std::vector<std::int64_t>& row_pos) const {
    const PrimeField& f = alg->field();
    const SparseVec& g = gens[j];
    auto put = [&](std::size_t t, Residue v) {
      const std::int64_t r = row_pos[t];
      if (r < 0) throw Error(Errc::kMismatch, "inhomogeneous image in a graded stage");
      Residue& cell = phi.row_mut(static_cast<std::size_t>(r))[q];
      cell = f.add(cell, v);
    };
    if (stage == 0) {
      const Matrix& ms = module_monomials[s];
      for (std::size_t e = 0; e < g.nnz(); ++e) {
        const std::size_t i = g.index[e];
        for (std::size_t r = 0; r < ms.rows(); ++r) {
          const Residue v = ms.at(r, i);
          if (v != 0) put(r, f.mul(v, g.value[e]));
        }
      }
    } else {
      for (std::size_t e = 0; e < g.nnz(); ++e) {
        const std::size_t jj = g.index[e] / len, ss = g.index[e] % len;
        const SparseVec& prod = alg->product(s, ss);
        for (std::size_t u = 0; u < prod.nnz(); ++u) put(jj * len + prod.index[u], f.mul(prod.value[u], g.value[e]));
      }
    }
  }

  StageResult run_stage(bool materialize) {
    const PrimeField& f = alg->field();
    const std::uint64_t p = f.modulus();
    const std::size_t b = gens.size();
    const std::size_t tdim = target_dim();
    StageResult out;

    // Group columns (j, s) and target coordinates by degree.
    std::vector<int> degs;
    for (std::size_t j = 0; j < b; ++j) {
      for (std::size_t s = 0; s < len; ++s) degs.push_back(gen_deg[j] + adeg(s));
    }
    std::sort(degs.begin(), degs.end());
    degs.erase(std::unique(degs.begin(), degs.end()), degs.end());

    std::vector<std::int64_t> row_pos(tdim, -1);
    std::vector<std::int64_t> free_pos(b * len, -1);
    std::vector<int> tdeg(tdim);
    for (std::size_t t = 0; t < tdim; ++t) tdeg[t] = target_degree(t);

    Block prev;
    bool have_prev = false;
    for (int d : degs) {
      Block blk;
      blk.degree = d;
      for (std::size_t j = 0; j < b; ++j) {
        for (std::size_t s = 0; s < len; ++s) {
          if (gen_deg[j] + adeg(s) == d) blk.cols.push_back(j * len + s);
        }
      }
      std::vector<std::size_t> rows;
      for (std::size_t t = 0; t < tdim; ++t) {
        if (tdeg[t] == d) {
          row_pos[t] = static_cast<std::int64_t>(rows.size());
          rows.push_back(t);
        }
      }
      check_dense(rows.size(), blk.cols.size());
      Matrix phi(rows.size(), blk.cols.size(), f);
      for (std::size_t q = 0; q < blk.cols.size(); ++q) add_image(phi, q, blk.cols[q] / len, blk.cols[q] % len, row_pos);
      for (auto t : rows) row_pos[t] = -1;

      blk.pivots = rref_in_place(phi);
      phi.truncate_rows(blk.pivots.size());
      blk.reduced = std::move(phi);
      {
        std::vector<char> is_piv(blk.cols.size(), 0);
        for (auto c : blk.pivots) is_piv[c] = 1;
        for (std::size_t q = 0; q < blk.cols.size(); ++q) {
          if (!is_piv[q]) blk.free.push_back(q);
        }
      }
      out.rank += blk.pivots.size();
      const std::size_t nfree = blk.free.size();
      out.kernel_dim += nfree;
      if (nfree == 0) {
        prev = std::move(blk);
        have_prev = true;
        continue;
      }

      // mK in this degree, in coordinates given by the free columns.
      for (std::size_t i = 0; i < nfree; ++i) free_pos[blk.cols[blk.free[i]]] = static_cast<std::int64_t>(i);
      EchelonBasis eb(nfree, f);
      const Block* src = nullptr;
      if (!graded) {
        src = &blk;
      } else if (have_prev && prev.degree == d - 1) {
        src = &prev;
      }
      if (src != nullptr && !src->free.empty()) {
        const std::size_t nv = alg->nvars();
        const std::size_t sc = src->cols.size();
        // images[v * sc + q]: x_v applied to the basis vector of column q, restricted to free coordinates.
        std::vector<std::vector<std::pair<std::uint32_t, Residue>>> images(nv * sc);
        for (std::size_t v = 0; v < nv; ++v) {
          const Matrix& act = alg->action(v);
          for (std::size_t q = 0; q < sc; ++q) {
            const std::size_t j = src->cols[q] / len, s = src->cols[q] % len;
            for (std::size_t u = 0; u < len; ++u) {
              const Residue val = act.at(u, s);
              if (val == 0) continue;
              const std::int64_t fp = free_pos[j * len + u];
              if (fp >= 0) images[v * sc + q].push_back({static_cast<std::uint32_t>(fp), val});
            }
          }
        }
        std::vector<std::pair<std::size_t, Residue>> coefs;
        std::vector<std::uint64_t> acc(nfree);
        Matrix batch(kBatchRows, nfree, f);
        std::size_t filled = 0;
        auto flush = [&]() {
          if (filled == 0) return;
          batch.truncate_rows(filled);
          eb.add_rows(batch, nfree - eb.rank());
          batch = Matrix(kBatchRows, nfree, f);
          filled = 0;
        };
        for (std::size_t fi = 0; fi < src->free.size() && eb.rank() < nfree; ++fi) {
          const std::size_t fq = src->free[fi];
          coefs.clear();
          coefs.push_back({fq, 1});
          for (std::size_t r = 0; r < src->pivots.size(); ++r) {
            const Residue c = src->reduced.at(r, fq);
            if (c != 0) coefs.push_back({src->pivots[r], static_cast<Residue>(p - c)});
          }
          for (std::size_t v = 0; v < nv; ++v) {
            std::fill(acc.begin(), acc.end(), 0);
            bool any = false;
            for (const auto& [q, c] : coefs) {
              for (const auto& [fp, val] : images[v * sc + q]) {
                acc[fp] += std::uint64_t{c} * val;
                any = true;
              }
            }
            if (!any) continue;
            auto row = batch.row_mut(filled);
            bool nonzero = false;
            for (std::size_t i = 0; i < nfree; ++i) {
              row[i] = static_cast<Residue>(acc[i] % p);
              nonzero |= row[i] != 0;
            }
            if (!nonzero) continue;
            if (++filled == kBatchRows) flush();
          }
          if (filled >= kBatchRows / 2 && fi + 1 == src->free.size()) flush();
        }
        flush();
      }

      // Free columns outside the echelon pivots of mK give new generators.
      std::vector<char> in_mk(nfree, 0);
      for (auto c : eb.pivots()) in_mk[c] = 1;
      for (std::size_t i = 0; i < nfree; ++i) {
        if (in_mk[i]) continue;
        out.new_degrees.push_back(d);
        if (!materialize) continue;
        const std::size_t fq = blk.free[i];
        std::vector<std::pair<std::uint32_t, Residue>> entries;
        entries.push_back({static_cast<std::uint32_t>(blk.cols[fq]), 1});
        for (std::size_t r = 0; r < blk.pivots.size(); ++r) {
          const Residue c = blk.reduced.at(r, fq);
          if (c != 0) entries.push_back({static_cast<std::uint32_t>(blk.cols[blk.pivots[r]]), f.neg(c)});
        }
        std::sort(entries.begin(), entries.end());
        SparseVec g;
        for (auto& [idx, val] : entries) g.push(idx, val);
        out.new_gens.push_back(std::move(g));
      }
      for (std::size_t i = 0; i < nfree; ++i) free_pos[blk.cols[blk.free[i]]] = -1;
      prev = std::move(blk);
      have_prev = true;
    }
    return out;
  }

  void push_zero_stage() {
    const std::size_t t = res.betti.size() - 1;
    res.betti.push_back(0);
    res.syzygy_lengths.push_back(0);
    res.image_ranks.push_back(0);
    res.generator_degrees.push_back({});
    if (opts.keep_boundaries) {
      PresentationMatrix pm;
      pm.target_rank = res.betti[t];
      pm.algebra_length = len;
      res.boundaries.push_back(std::move(pm));
    }
  }

  void extend_to(std::size_t n) {
    while (res.betti.size() <= n) {
      if (res.betti.back() == 0) {
        push_zero_stage();
        continue;
      }
      if (pending) {
        // Recompute the last kernel, this time keeping the generators.
        advance(run_stage(true));
        pending = false;
        continue;
      }
      const bool materialize = opts.keep_boundaries || stage + 1 < n;
      StageResult r = run_stage(materialize);
      res.image_ranks.push_back(r.rank);
      res.syzygy_lengths.push_back(r.kernel_dim);
      res.betti.push_back(r.new_degrees.size());
      res.generator_degrees.push_back(graded ? r.new_degrees : std::vector<int>{});
      check_budget(r.new_degrees.size());
      if (materialize) {
        advance(std::move(r));
      } else {
        pending = true;
      }
    }
  }

  void advance(StageResult r) {
    if (opts.keep_boundaries) {
      PresentationMatrix pm;
      pm.target_rank = gens.size();
      pm.source_rank = r.new_gens.size();
      pm.algebra_length = len;
      pm.columns = r.new_gens;
      res.boundaries.push_back(std::move(pm));
    }
    gens = std::move(r.new_gens);
    gen_deg = std::move(r.new_degrees);
    ++stage;
    shuffle_generators();
  }
};

Resolver::Resolver(const ModuleRep& m, ResolveOptions opts) : impl_(std::make_unique<Impl>(m, opts)) {}
Resolver::~Resolver() = default;
Resolver::Resolver(Resolver&&) noexcept = default;
Resolver& Resolver::operator=(Resolver&&) noexcept = default;

const FreeResolution& Resolver::extend_to(std::size_t depth) {
  impl_->extend_to(depth);
  return impl_->res;
}

const FreeResolution& Resolver::result() const noexcept { return impl_->res; }
const ResolveOptions& Resolver::options() const noexcept { return impl_->opts; }

FreeResolution resolve(const ModuleRep& m, std::size_t steps, const ResolveOptions& opts) {
  Resolver r(m, opts);
  return r.extend_to(steps);
}

PresentationMatrix minimal_presentation(const ModuleRep& m) {
  ResolveOptions opts;
  opts.keep_boundaries = true;
  FreeResolution r = resolve(m, 1, opts);
  if (r.boundaries.empty()) {
    PresentationMatrix pm;
    pm.target_rank = r.betti[0];
    pm.algebra_length = m.algebra().length();
    return pm;
  }
  return r.boundaries[0];
}

namespace {

// A^b with generator i placed in degree shifts[i] (shifts empty: ungraded).
ModuleRep shifted_free(const AlgebraPtr& a, std::size_t b, const std::vector<int>& shifts) {
  const std::size_t len = a->length();
  const std::size_t dim = len * b;
  if (dim > kMaxExplicitDim) {
    throw Error(Errc::kBudgetExceeded, "free module of k-dimension " + std::to_string(dim) +
                                           " is too large for explicit action matrices");
  }
  if (dim == 0) return ModuleRep::zero(a);
  std::vector<Matrix> acts;
  for (std::size_t v = 0; v < a->nvars(); ++v) {
    Matrix m(dim, dim, a->field());
    const Matrix& act = a->action(v);
    for (std::size_t g = 0; g < b; ++g) {
      for (std::size_t r = 0; r < len; ++r) {
        for (std::size_t c = 0; c < len; ++c) m.row_mut(g * len + r)[g * len + c] = act.at(r, c);
      }
    }
    acts.push_back(std::move(m));
  }
  std::vector<int> degs;
  if (!shifts.empty()) {
    for (std::size_t g = 0; g < b; ++g) {
      for (std::size_t s = 0; s < len; ++s) degs.push_back(shifts[g] + static_cast<int>(a->basis_degree(s)));
    }
  }
  return ModuleRep(a, std::move(acts), std::move(degs));
}

// The k-matrix of F_{i+1} -> F_i from boundary i.
Matrix expand_boundary(const QuotientAlgebra& a, const PresentationMatrix& pm) {
  const std::size_t len = a.length();
  Matrix out(pm.target_rank * len, pm.source_rank * len, a.field());
  const PrimeField& f = a.field();
  for (std::size_t c = 0; c < pm.source_rank; ++c) {
    const SparseVec& col = pm.columns[c];
    for (std::size_t s = 0; s < len; ++s) {
      for (std::size_t e = 0; e < col.nnz(); ++e) {
        const std::size_t r = col.index[e] / len, ss = col.index[e] % len;
        const SparseVec& prod = a.product(s, ss);
        for (std::size_t u = 0; u < prod.nnz(); ++u) {
          Residue& cell = out.row_mut(r * len + prod.index[u])[c * len + s];
          cell = f.add(cell, f.mul(prod.value[u], col.value[e]));
        }
      }
    }
  }
  return out;
}

}  // namespace

ModuleRep syzygy_module(const FreeResolution& res, std::size_t i) {
  if (i == 0) return *res.module;
  if (i > res.boundaries.size()) throw Error(Errc::kInvalidArgument, "syzygy index beyond the stored boundaries");
  const AlgebraPtr& a = res.module->algebra_ptr();
  const PresentationMatrix& pm = res.boundaries[i - 1];
  const std::vector<int> shifts = res.graded ? res.generator_degrees[i - 1] : std::vector<int>{};
  ModuleRep ambient = shifted_free(a, pm.target_rank, shifts);
  std::vector<Vector> gens;
  for (const auto& col : pm.columns) gens.push_back(col.dense(ambient.dim()));
  ModuleRep out = submodule(ambient, submodule_closure(ambient, gens));
  out.set_provenance("syzygy " + std::to_string(i));
  return out;
}

ModuleRep syzygy(const ModuleRep& m, std::size_t i, const ResolveOptions& opts) {
  if (i == 0) return m;
  ResolveOptions o = opts;
  o.keep_boundaries = true;
  FreeResolution r = resolve(m, i, o);
  return syzygy_module(r, i);
}

std::optional<std::string> verify_resolution(const FreeResolution& res) {
  const QuotientAlgebra& a = res.module->algebra();
  const std::size_t len = a.length();
  for (std::size_t i = 0; i < res.boundaries.size(); ++i) {
    if (!res.boundaries[i].is_minimal()) return "boundary " + std::to_string(i) + " has a unit entry";
    if (res.boundaries[i].source_rank != res.betti[i + 1] || res.boundaries[i].target_rank != res.betti[i]) {
      return "boundary " + std::to_string(i) + " has the wrong shape";
    }
  }
  std::vector<std::size_t> ranks;
  for (std::size_t i = 0; i < res.boundaries.size(); ++i) {
    ranks.push_back(rank(expand_boundary(a, res.boundaries[i])));
  }
  for (std::size_t i = 0; i + 1 < res.boundaries.size(); ++i) {
    const Matrix d0 = expand_boundary(a, res.boundaries[i]);
    const Matrix d1 = expand_boundary(a, res.boundaries[i + 1]);
    if (!(d0 * d1).is_zero()) return "boundaries " + std::to_string(i) + " and " + std::to_string(i + 1) + " do not compose to zero";
    if (ranks[i] + ranks[i + 1] != len * res.betti[i + 1]) return "not exact at F_" + std::to_string(i + 1);
  }
  if (!ranks.empty() && ranks[0] + res.module->dim() != len * res.betti[0]) return "not exact at F_0";
  for (std::size_t i = 0; i < res.image_ranks.size(); ++i) {
    if (res.syzygy_lengths[i] + res.syzygy_lengths[i + 1] != len * res.betti[i]) {
      return "length identity fails at stage " + std::to_string(i);
    }
  }
  for (std::size_t i = 1; i <= res.boundaries.size() && i < res.betti.size(); ++i) {
    if (len * res.betti[i - 1] > 600) break;
    ModuleRep syz = syzygy_module(res, i);
    if (syz.dim() != res.syzygy_lengths[i]) return "syzygy " + std::to_string(i) + " has the wrong length";
    if (min_gens(syz) != res.betti[i]) return "syzygy " + std::to_string(i) + " is not minimally generated by the next stage";
  }
  return std::nullopt;
}

}  // namespace curvlab
