#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "curvlab/audit.hpp"

namespace curvlab::tools {

/// Deterministic source of small random modules over an artinian algebra:
/// cyclic quotients by random forms and cokernels of random matrices with
/// entries in m. Most draws are graded; a few are not, and about one in ten
/// is the zero module.
class ModuleSampler {
 public:
  ModuleSampler(AlgebraPtr a, std::uint64_t seed);

  ModuleRep next();
  /// A nonzero draw.
  ModuleRep next_nonzero();

 private:
  std::uint64_t below(std::uint64_t n) { return rng_() % n; }
  Polynomial random_form(std::uint32_t degree);
  Polynomial random_element(bool graded);

  AlgebraPtr alg_;
  std::mt19937_64 rng_;
};

struct InvariantOptions {
  std::uint64_t seed = 0;
  std::size_t count = 50;
  std::size_t depth = 8;
  /// Inhomogeneous modules are resolved in one block; their depth is capped here.
  std::size_t ungraded_depth = 6;
  ResolveOptions resolve;
};

struct InvariantCase {
  std::size_t id = 0;
  std::string module;
  std::string partner;
  std::vector<CheckRecord> checks;
};

struct InvariantReport {
  RingSummary ring;
  std::vector<InvariantCase> cases;
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t vacuous = 0;
  std::size_t equalities = 0;
};

/// Case 0 is M = k; the others are sampled. Every case runs the first
/// inequality, the length identity, the tensor and Hom length bounds, Tor
/// symmetry against a sampled partner and the Matlis double-dual round trip.
InvariantReport invariant_suite(AlgebraPtr a, const InvariantOptions& opts);

std::string render_text(const InvariantReport& r);
/// Same shape as an audit report: checks are flattened and named "<check>#<case>".
AuditReport as_audit_report(const InvariantReport& r);

}  // namespace curvlab::tools
