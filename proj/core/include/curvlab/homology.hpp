#pragma once

#include <optional>
#include <vector>

#include "curvlab/resolution.hpp"

namespace curvlab {

/// l(Tor_i(M, N)) for i = 0..depth.
struct TorProfile {
  std::vector<std::size_t> lengths;
  /// Least w with lengths[w..depth] all zero, if any.
  std::optional<std::size_t> vanishing_from;
};

/// Homology of F(M) (x) N; resolves M to depth + 1. Throws kBudgetExceeded.
TorProfile tor_lengths(const ModuleRep& m, const ModuleRep& n, std::size_t depth, const ResolveOptions& opts = {});
/// Same, reusing a resolution of M that already reaches depth + 1 with boundaries.
TorProfile tor_lengths(const FreeResolution& res_m, const ModuleRep& n, std::size_t depth);

/// l(Ext^i(M, N)) for i = 0..depth, from Hom(F(M), N).
std::vector<std::size_t> ext_lengths(const ModuleRep& m, const ModuleRep& n, std::size_t depth,
                                     const ResolveOptions& opts = {});
std::vector<std::size_t> ext_lengths(const FreeResolution& res_m, const ModuleRep& n, std::size_t depth);

struct BassSequence {
  /// l(Ext^n(k, N)) computed from a resolution of k.
  std::vector<std::size_t> direct;
  /// beta_n of the Matlis dual of N.
  std::vector<std::size_t> via_dual;
  const std::vector<std::size_t>& values() const noexcept { return direct; }
};

/// Computes both routes; throws Errc::kMismatch when they disagree.
BassSequence bass_sequence(const ModuleRep& n, std::size_t depth, const ResolveOptions& opts = {});
/// Variant reusing a resolution of k reaching depth + 1 with boundaries.
BassSequence bass_sequence(const FreeResolution& res_k, const ModuleRep& n, std::size_t depth,
                           const ResolveOptions& opts = {});

/// Least w such that values[w..] are all zero and that run has at least
/// `window` entries; nullopt otherwise.
std::optional<std::size_t> vanishing_scan(const std::vector<std::size_t>& values, std::size_t window);

}  // namespace curvlab
