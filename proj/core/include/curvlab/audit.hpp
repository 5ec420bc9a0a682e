#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curvlab/asymptotics.hpp"
#include "curvlab/homology.hpp"

namespace curvlab {

enum class Verdict { kPass, kFail, kVacuous, kSetupViolation, kFinitePd };
std::string verdict_name(Verdict v);

struct RingSummary {
  std::optional<std::size_t> e;       // absent for d >= 2
  std::optional<std::size_t> length;  // absent for d >= 1
  std::size_t embdim = 0;
  bool ci = false;
  std::size_t dim = 0;
};
RingSummary summarize(const QuotientAlgebra& a);

struct CheckRecord {
  std::string name;
  Verdict verdict = Verdict::kVacuous;
  /// "holds", "fails", "assumed", "not applicable", ...
  std::string hypothesis;
  std::size_t instances = 0;
  std::size_t equalities = 0;
  /// Smallest lhs - rhs over the checked instances (or the decisive comparison).
  std::optional<double> margin;
  /// The decisive comparison written with exact values, e.g. "2 > 1".
  std::string margin_exact;
  /// Set on FAIL: where and how the inequality broke.
  std::string violation;
  std::vector<std::string> caveats;
  /// Further named values (sequences, intervals, flags) for the report.
  std::vector<std::pair<std::string, std::string>> details;
};

struct AuditReport {
  RingSummary ring;
  std::vector<CheckRecord> checks;
};

struct AuditOptions {
  std::size_t depth = 12;
  std::size_t window = 4;
  Rational tolerance{1, 20};
  ResolveOptions resolve;
};

/// Runs the theorem checks for one algebra; resolutions of k are cached.
class Auditor {
 public:
  explicit Auditor(AlgebraPtr a, AuditOptions opts = {});

  const QuotientAlgebra& algebra() const noexcept { return *alg_; }
  const AuditOptions& options() const noexcept { return opts_; }
  RingSummary ring() const { return summary_; }

  /// Betti numbers and syzygy lengths of k up to depth.
  const FreeResolution& residue(std::size_t depth);
  /// Resolution of k with boundaries up to depth.
  const FreeResolution& residue_with_boundaries(std::size_t depth);

  /// beta_{i+1}(M) + beta_0(M) l(Omega^i k) >= beta_i(k) (beta_0(M) + beta_1(M)) for i < depth.
  CheckRecord first_inequality(const ModuleRep& m, std::size_t depth);
  CheckRecord first_inequality(const FreeResolution& res_m, std::size_t depth);
  /// l(Omega^i M) + l(Omega^{i+1} M) = l(A) beta_i(M) for i < depth.
  CheckRecord length_identity(const ModuleRep& m, std::size_t depth);
  CheckRecord length_identity(const FreeResolution& res_m, std::size_t depth);

  CheckRecord audit_first(const ModuleRep& m);
  CheckRecord audit_second_tor(const ModuleRep& m, const ModuleRep& n);
  CheckRecord audit_second_ext(const ModuleRep& m, const ModuleRep& n);
  CheckRecord audit_third(const ModuleRep& m, std::size_t i0);

 private:
  CheckRecord setup_violation(std::string name) const;
  CheckRecord second_common(std::string name, const std::vector<std::size_t>& profile,
                            const std::vector<std::size_t>& beta_m, const std::vector<std::size_t>& partner,
                            const char* partner_label);

  AlgebraPtr alg_;
  AuditOptions opts_;
  RingSummary summary_;
  std::optional<Resolver> k_plain_;
  std::optional<Resolver> k_full_;
};

CheckRecord check_first_inequality(const ModuleRep& m, std::size_t depth);
CheckRecord check_length_identity(const ModuleRep& m, std::size_t depth);

/// Reduction check for a one-dimensional standard graded A and a linear form x:
/// resolves k over B = A/(x), checks beta^B_n >= beta^B_{n-1} and, when a
/// reference for beta^A is given (or A is a complete intersection, whose
/// Poincare series (1+t)^n / (1-t^2)^c is used), beta^B_n + beta^B_{n-1} = beta^A_n.
/// Throws Errc::kNotRegular when x is not regular up to the default degree bound.
CheckRecord modx_check(const QuotientAlgebra& a, const Polynomial& x, std::size_t depth,
                       std::optional<std::vector<std::size_t>> reference = std::nullopt,
                       const ResolveOptions& opts = {});

/// Betti numbers of k over a complete intersection with the given embedding
/// dimension and number of relations, from (1+t)^n / (1-t^2)^c.
std::vector<std::size_t> complete_intersection_betti(std::size_t embdim, std::size_t relations, std::size_t depth);

/// Simplest rational (smallest denominator) in [lo, hi].
Rational simplest_between(Rational lo, Rational hi);

}  // namespace curvlab
