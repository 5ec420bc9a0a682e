#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "curvlab/module.hpp"

namespace curvlab {

struct ResolveOptions {
  /// Split every stage by internal degree when the module is graded.
  bool use_grading = true;
  /// Nonzero: shuffle the module basis and the generator order of every
  /// stage with this seed. Betti numbers must not depend on it.
  std::uint64_t shuffle_seed = 0;
  /// Largest allowed k-dimension l(A) * beta_i of a free module in the resolution.
  std::size_t budget = 200000;
  /// Keep the boundary maps (needed for Tor, Ext and syzygy modules).
  bool keep_boundaries = true;
};

/// Prefix of a minimal free resolution F_N -> ... -> F_0 -> M.
struct FreeResolution {
  std::shared_ptr<const ModuleRep> module;
  std::vector<std::size_t> betti;
  /// l(Omega^i(M)) for i = 0..depth(), read off the kernel at stage i - 1.
  std::vector<std::size_t> syzygy_lengths;
  /// k-rank of F_i -> F_{i-1} (F_0 -> M for i = 0), i = 0..depth()-1.
  std::vector<std::size_t> image_ranks;
  /// boundaries[i] : F_{i+1} -> F_i, present for i < boundaries.size().
  std::vector<PresentationMatrix> boundaries;
  /// Internal degrees of the generators of each F_i (graded resolutions only).
  std::vector<std::vector<int>> generator_degrees;
  bool graded = false;

  std::size_t depth() const noexcept { return betti.empty() ? 0 : betti.size() - 1; }
  /// Some Betti number in the prefix vanishes.
  bool finite_pd() const noexcept;
};

/// Incremental resolver; extend_to can be called repeatedly with growing depth.
class Resolver {
 public:
  explicit Resolver(const ModuleRep& m, ResolveOptions opts = {});
  ~Resolver();
  Resolver(Resolver&&) noexcept;
  Resolver& operator=(Resolver&&) noexcept;

  /// Throws Errc::kBudgetExceeded when a free module outgrows the budget.
  const FreeResolution& extend_to(std::size_t depth);
  const FreeResolution& result() const noexcept;
  const ResolveOptions& options() const noexcept;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Minimal presentation A^{b1} -> A^{b0} -> M -> 0.
PresentationMatrix minimal_presentation(const ModuleRep& m);
FreeResolution resolve(const ModuleRep& m, std::size_t steps, const ResolveOptions& opts = {});
/// Omega^i(M) as a module; Omega^0 = M. Throws kBudgetExceeded when the
/// ambient free module is too large to hold explicit action matrices.
ModuleRep syzygy(const ModuleRep& m, std::size_t i, const ResolveOptions& opts = {});
/// Omega^i from an existing resolution with boundaries up to index i - 1.
ModuleRep syzygy_module(const FreeResolution& res, std::size_t i);

/// Recomputes exactness (with explicit k-matrices) and minimality. Meant for
/// small resolutions in tests; returns a description of the first defect.
std::optional<std::string> verify_resolution(const FreeResolution& res);

}  // namespace curvlab
