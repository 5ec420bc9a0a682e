#include "curvlab/homology.hpp"

#include <map>

#include "curvlab/error.hpp"

namespace curvlab {

namespace {

constexpr std::size_t kMaxDenseEntries = 600'000'000;

// Rank of the map induced by boundary pm on N-coefficients. For Tor the map is
// F_{i+1} (x) N -> F_i (x) N; for Ext it is Hom(F_i, N) -> Hom(F_{i+1}, N).
// Coordinates (generator, basis vector of N) are split by internal degree
// when both sides are graded.
std::size_t induced_rank(const PresentationMatrix& pm, const ModuleRep& n, const std::vector<Matrix>& nmono,
                         bool ext, const std::vector<int>& tdeg_gen, const std::vector<int>& sdeg_gen,
                         bool graded) {
  const std::size_t nd = n.dim();
  const std::size_t len = pm.algebra_length;
  if (nd == 0 || pm.source_rank == 0 || pm.target_rank == 0) return 0;
  const PrimeField& f = n.algebra().field();

  // For Tor: rows (r, w) in F_i, cols (c, u) in F_{i+1}. For Ext the roles swap.
  const std::size_t nrows = (ext ? pm.source_rank : pm.target_rank) * nd;
  const std::size_t ncols = (ext ? pm.target_rank : pm.source_rank) * nd;
  auto deg_of = [&](std::size_t gen, std::size_t u, bool is_target_gen) {
    if (!graded) return 0;
    const int g = is_target_gen ? tdeg_gen[gen] : sdeg_gen[gen];
    return ext ? n.degrees()[u] - g : n.degrees()[u] + g;
  };
  // Row coordinates belong to target generators for Tor and source generators for Ext.
  std::vector<int> rdeg(nrows), cdeg(ncols);
  for (std::size_t i = 0; i < nrows; ++i) rdeg[i] = deg_of(i / nd, i % nd, !ext);
  for (std::size_t i = 0; i < ncols; ++i) cdeg[i] = deg_of(i / nd, i % nd, ext);

  std::map<int, std::pair<std::size_t, std::size_t>> sizes;
  std::vector<std::size_t> rpos(nrows), cpos(ncols);
  for (std::size_t i = 0; i < nrows; ++i) rpos[i] = sizes[rdeg[i]].first++;
  for (std::size_t i = 0; i < ncols; ++i) cpos[i] = sizes[cdeg[i]].second++;
  std::map<int, Matrix> blocks;
  for (auto& [d, sz] : sizes) {
    if (sz.first == 0 || sz.second == 0) continue;
    if (sz.second > kMaxDenseEntries / sz.first) {
      throw Error(Errc::kBudgetExceeded, "homology block of " + std::to_string(sz.first) + " x " +
                                             std::to_string(sz.second) + " exceeds the dense size limit");
    }
    blocks.emplace(d, Matrix(sz.first, sz.second, f));
  }

  for (std::size_t c = 0; c < pm.source_rank; ++c) {
    const SparseVec& col = pm.columns[c];
    for (std::size_t e = 0; e < col.nnz(); ++e) {
      const std::size_t r = col.index[e] / len, s = col.index[e] % len;
      const Matrix& ns = nmono[s];
      for (std::size_t u = 0; u < nd; ++u) {
        for (std::size_t w = 0; w < nd; ++w) {
          const Residue v = ns.at(w, u);
          if (v == 0) continue;
          const std::size_t row = ext ? c * nd + w : r * nd + w;
          const std::size_t cc = ext ? r * nd + u : c * nd + u;
          if (rdeg[row] != cdeg[cc]) throw Error(Errc::kMismatch, "inhomogeneous entry in a graded complex");
          Matrix& blk = blocks.at(cdeg[cc]);
          Residue& cell = blk.row_mut(rpos[row])[cpos[cc]];
          cell = f.add(cell, f.mul(v, col.value[e]));
        }
      }
    }
  }
  std::size_t total = 0;
  for (auto& [d, blk] : blocks) total += rank(std::move(blk));
  return total;
}

void require_boundaries(const FreeResolution& res, std::size_t depth) {
  if (res.boundaries.size() < depth + 1) {
    throw Error(Errc::kInvalidArgument, "resolution must reach depth " + std::to_string(depth + 1) +
                                            " with boundaries");
  }
}

const std::vector<int>& gen_degrees(const FreeResolution& res, std::size_t i) {
  static const std::vector<int> none;
  return res.graded ? res.generator_degrees[i] : none;
}

ResolveOptions with_boundaries(ResolveOptions o) {
  o.keep_boundaries = true;
  return o;
}

}  // namespace

TorProfile tor_lengths(const FreeResolution& res, const ModuleRep& n, std::size_t depth) {
  require_boundaries(res, depth);
  if (res.module->algebra_ptr() != n.algebra_ptr()) throw Error(Errc::kInvalidArgument, "modules over different algebras");
  const bool graded = res.graded && n.graded();
  const auto nmono = n.monomial_actions();
  // ranks[i] = rank of F_{i+1} (x) N -> F_i (x) N
  std::vector<std::size_t> ranks;
  for (std::size_t i = 0; i <= depth; ++i) {
    ranks.push_back(induced_rank(res.boundaries[i], n, nmono, false, gen_degrees(res, i), gen_degrees(res, i + 1),
                                 graded));
  }
  TorProfile out;
  for (std::size_t i = 0; i <= depth; ++i) {
    const std::size_t c = res.betti[i] * n.dim();
    const std::size_t in = ranks[i];
    const std::size_t outr = i == 0 ? 0 : ranks[i - 1];
    out.lengths.push_back(c - in - outr);
  }
  out.vanishing_from = vanishing_scan(out.lengths, 1);
  return out;
}

TorProfile tor_lengths(const ModuleRep& m, const ModuleRep& n, std::size_t depth, const ResolveOptions& opts) {
  return tor_lengths(resolve(m, depth + 1, with_boundaries(opts)), n, depth);
}

std::vector<std::size_t> ext_lengths(const FreeResolution& res, const ModuleRep& n, std::size_t depth) {
  require_boundaries(res, depth);
  if (res.module->algebra_ptr() != n.algebra_ptr()) throw Error(Errc::kInvalidArgument, "modules over different algebras");
  const bool graded = res.graded && n.graded();
  const auto nmono = n.monomial_actions();
  // ranks[i] = rank of Hom(F_i, N) -> Hom(F_{i+1}, N)
  std::vector<std::size_t> ranks;
  for (std::size_t i = 0; i <= depth; ++i) {
    ranks.push_back(induced_rank(res.boundaries[i], n, nmono, true, gen_degrees(res, i), gen_degrees(res, i + 1),
                                 graded));
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i <= depth; ++i) {
    const std::size_t c = res.betti[i] * n.dim();
    out.push_back(c - ranks[i] - (i == 0 ? 0 : ranks[i - 1]));
  }
  return out;
}

std::vector<std::size_t> ext_lengths(const ModuleRep& m, const ModuleRep& n, std::size_t depth,
                                     const ResolveOptions& opts) {
  return ext_lengths(resolve(m, depth + 1, with_boundaries(opts)), n, depth);
}

BassSequence bass_sequence(const FreeResolution& res_k, const ModuleRep& n, std::size_t depth,
                           const ResolveOptions& opts) {
  BassSequence out;
  out.direct = ext_lengths(res_k, n, depth);
  ResolveOptions o = opts;
  o.keep_boundaries = false;
  FreeResolution dual = resolve(matlis_dual(n), depth, o);
  out.via_dual.assign(dual.betti.begin(), dual.betti.begin() + static_cast<std::ptrdiff_t>(depth + 1));
  if (out.direct != out.via_dual) {
    for (std::size_t i = 0; i <= depth; ++i) {
      if (out.direct[i] != out.via_dual[i]) {
        throw Error(Errc::kMismatch, "Bass number " + std::to_string(i) + ": Ext route gives " +
                                         std::to_string(out.direct[i]) + ", dual route gives " +
                                         std::to_string(out.via_dual[i]));
      }
    }
  }
  return out;
}

BassSequence bass_sequence(const ModuleRep& n, std::size_t depth, const ResolveOptions& opts) {
  FreeResolution rk = resolve(residue_field(n.algebra_ptr()), depth + 1, with_boundaries(opts));
  return bass_sequence(rk, n, depth, opts);
}

std::optional<std::size_t> vanishing_scan(const std::vector<std::size_t>& values, std::size_t window) {
  std::size_t w = values.size();
  while (w > 0 && values[w - 1] == 0) --w;
  if (w == values.size() || values.size() - w < window) return std::nullopt;
  return w;
}

}  // namespace curvlab
