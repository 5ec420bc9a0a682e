#include "curvlab/audit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "curvlab/error.hpp"

namespace curvlab {

namespace {

std::string join(const std::vector<std::size_t>& v, std::size_t count = SIZE_MAX) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size() && i < count; ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

std::vector<std::size_t> prefix(const std::vector<std::size_t>& v, std::size_t depth) {
  if (v.size() < depth + 1) throw Error(Errc::kInvalidArgument, "sequence shorter than the requested depth");
  return {v.begin(), v.begin() + static_cast<std::ptrdiff_t>(depth + 1)};
}

std::string interval_string(const CurvatureInterval& c) {
  return "[" + to_string(c.lo) + ", " + to_string(c.hi) + "] (" + growth_name(c.growth) + ", ratios n=" +
         std::to_string(c.first) + ".." + std::to_string(c.last) + ")";
}

// x + 1 - tol < sqrt(e), decided exactly.
bool below_root_bound(const Rational& x, const Rational& tol, std::size_t e) {
  const Rational y = x + 1 - tol;
  if (y <= 0) return true;
  return y * y < Rational(static_cast<std::int64_t>(e));
}

double sqrt_bound(std::size_t e, const Rational& tol) {
  return std::sqrt(static_cast<double>(e)) - 1 + to_double(tol);
}

ResolveOptions plain(ResolveOptions o) {
  o.keep_boundaries = false;
  return o;
}

ResolveOptions full(ResolveOptions o) {
  o.keep_boundaries = true;
  return o;
}

bool has_zero(const std::vector<std::size_t>& v) { return std::find(v.begin(), v.end(), std::size_t{0}) != v.end(); }

}  // namespace

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "PASS";
    case Verdict::kFail: return "FAIL";
    case Verdict::kVacuous: return "VACUOUS";
    case Verdict::kSetupViolation: return "SETUP_VIOLATION";
    case Verdict::kFinitePd: return "FINITE_PD";
  }
  return "UNKNOWN";
}

RingSummary summarize(const QuotientAlgebra& a) {
  RingSummary s;
  s.dim = a.krull_dim();
  if (s.dim <= 1) s.e = multiplicity(a);
  if (s.dim == 0) s.length = a.length();
  s.embdim = a.embedding_dim();
  s.ci = is_complete_intersection(a);
  return s;
}

Auditor::Auditor(AlgebraPtr a, AuditOptions opts) : alg_(std::move(a)), opts_(opts), summary_(summarize(*alg_)) {
  if (!alg_->is_artinian()) throw Error(Errc::kNotArtinian, "theorem audits run over artinian algebras");
  if (opts_.depth < opts_.window + 2) throw Error(Errc::kInvalidArgument, "depth must be at least window + 2");
}

const FreeResolution& Auditor::residue(std::size_t depth) {
  if (k_full_ && k_full_->result().depth() >= depth) return k_full_->result();
  if (!k_plain_) k_plain_.emplace(residue_field(alg_), plain(opts_.resolve));
  return k_plain_->extend_to(depth);
}

const FreeResolution& Auditor::residue_with_boundaries(std::size_t depth) {
  if (!k_full_) k_full_.emplace(residue_field(alg_), full(opts_.resolve));
  return k_full_->extend_to(depth);
}

CheckRecord Auditor::setup_violation(std::string name) const {
  CheckRecord r;
  r.name = std::move(name);
  r.verdict = Verdict::kSetupViolation;
  r.hypothesis = "fails: the ring is a complete intersection";
  r.caveats.push_back("theorem checks require a ring that is not a complete intersection");
  return r;
}

CheckRecord Auditor::first_inequality(const FreeResolution& res, std::size_t depth) {
  CheckRecord r;
  r.name = "first-inequality";
  r.hypothesis = "unconditional";
  r.caveats.push_back("the second Betti index of the inequality is read as i+1");
  if (res.depth() < depth) throw Error(Errc::kInvalidArgument, "module resolution shorter than the audit depth");
  if (res.betti[0] == 0) {
    r.verdict = Verdict::kVacuous;
    r.caveats.push_back("zero module");
    return r;
  }
  const FreeResolution& rk = residue(depth);
  const auto b0 = static_cast<std::int64_t>(res.betti[0]);
  const auto b1 = static_cast<std::int64_t>(res.betti[1]);
  std::optional<std::int64_t> worst;
  for (std::size_t i = 0; i < depth; ++i) {
    const std::int64_t lhs =
        static_cast<std::int64_t>(res.betti[i + 1]) + b0 * static_cast<std::int64_t>(rk.syzygy_lengths[i]);
    const std::int64_t rhs = static_cast<std::int64_t>(rk.betti[i]) * (b0 + b1);
    ++r.instances;
    if (lhs == rhs) ++r.equalities;
    if (!worst || lhs - rhs < *worst) {
      worst = lhs - rhs;
      r.margin_exact = std::to_string(lhs) + (lhs >= rhs ? " >= " : " < ") + std::to_string(rhs) + " at i=" +
                       std::to_string(i);
    }
    if (lhs < rhs && r.violation.empty()) {
      r.violation = "i=" + std::to_string(i) + ": " + std::to_string(lhs) + " < " + std::to_string(rhs);
    }
  }
  r.margin = worst ? static_cast<double>(*worst) : 0.0;
  r.verdict = r.violation.empty() ? Verdict::kPass : Verdict::kFail;
  r.details.push_back({"betti(M)", join(res.betti, depth + 1)});
  r.details.push_back({"betti(k)", join(rk.betti, depth + 1)});
  r.details.push_back({"length(syzygy k)", join(rk.syzygy_lengths, depth + 1)});
  return r;
}

CheckRecord Auditor::first_inequality(const ModuleRep& m, std::size_t depth) {
  return first_inequality(resolve(m, depth, plain(opts_.resolve)), depth);
}

CheckRecord Auditor::length_identity(const FreeResolution& res, std::size_t depth) {
  CheckRecord r;
  r.name = "length-identity";
  r.hypothesis = "unconditional";
  if (res.depth() < depth) throw Error(Errc::kInvalidArgument, "module resolution shorter than the audit depth");
  if (res.betti[0] == 0) {
    r.verdict = Verdict::kVacuous;
    r.caveats.push_back("zero module");
    return r;
  }
  const std::size_t len = alg_->length();
  for (std::size_t i = 0; i < depth; ++i) {
    const std::size_t lhs = res.syzygy_lengths[i] + res.syzygy_lengths[i + 1];
    const std::size_t rhs = len * res.betti[i];
    ++r.instances;
    if (lhs == rhs) {
      ++r.equalities;
    } else if (r.violation.empty()) {
      r.violation = "i=" + std::to_string(i) + ": " + std::to_string(lhs) + " != " + std::to_string(rhs);
    }
  }
  r.margin = 0.0;
  r.margin_exact = r.violation.empty() ? "equal at all " + std::to_string(r.instances) + " indices" : r.violation;
  r.verdict = r.violation.empty() ? Verdict::kPass : Verdict::kFail;
  r.details.push_back({"length(syzygy M)", join(res.syzygy_lengths, depth + 1)});
  return r;
}

CheckRecord Auditor::length_identity(const ModuleRep& m, std::size_t depth) {
  return length_identity(resolve(m, depth, plain(opts_.resolve)), depth);
}

CheckRecord Auditor::audit_first(const ModuleRep& m) {
  if (summary_.ci) return setup_violation("first");
  const std::size_t depth = opts_.depth;
  const Rational& tol = opts_.tolerance;
  const std::size_t e = *summary_.e;
  CheckRecord r;
  r.name = "first";
  FreeResolution res = resolve(m, depth, plain(opts_.resolve));
  r.details.push_back({"betti(M)", join(res.betti)});
  if (res.finite_pd()) {
    r.verdict = Verdict::kFinitePd;
    r.hypothesis = "fails: a Betti number of M vanishes by depth " + std::to_string(depth);
    return r;
  }
  CheckRecord exact = first_inequality(res, depth);
  r.instances = exact.instances;
  r.equalities = exact.equalities;

  const auto betti_k = prefix(residue(depth).betti, depth);
  const CurvatureInterval ik = curvature_estimate(betti_k, opts_.window);
  const CurvatureInterval im = curvature_estimate(res.betti, opts_.window);
  r.details.push_back({"betti(k)", join(betti_k)});
  r.details.push_back({"interval(k)", interval_string(ik)});
  r.details.push_back({"interval(M)", interval_string(im)});
  r.caveats.push_back("existence of lim beta_n(k)^(1/n) is assumed, not verified");
  r.caveats.push_back("curvatures are window estimates at depth " + std::to_string(depth) + ", window " +
                      std::to_string(opts_.window));
  if (exact.verdict == Verdict::kFail) {
    r.verdict = Verdict::kFail;
    r.violation = "exact inequality: " + exact.violation;
    return r;
  }

  const Rational bound = Rational(static_cast<std::int64_t>(e), 2) - 1;
  if (bound + tol < ik.lo) {
    r.details.push_back({"infinite-pd consequence", "lo(k) exceeds e/2 - 1, so every module of infinite projective "
                                                    "dimension should share the curvature of k"});
  }
  if (!(im.hi < ik.lo)) {
    r.verdict = Verdict::kVacuous;
    r.hypothesis = "fails: no gap hi(M) < lo(k)";
    r.margin_exact = "hi(M) = " + to_string(im.hi) + " >= lo(k) = " + to_string(ik.lo);
    return r;
  }
  r.hypothesis = "holds: hi(M) = " + to_string(im.hi) + " < lo(k) = " + to_string(ik.lo) + "; limit for k assumed";
  const bool k_ok = ik.lo <= bound + tol;
  const bool m_ok = below_root_bound(im.hi, tol, e);
  const bool sharp = (ik.lo - bound <= tol) && (bound - ik.lo <= tol);
  r.details.push_back({"sharp", sharp ? "true" : "false"});
  r.margin = std::min(to_double(bound + tol - ik.lo), sqrt_bound(e, tol) - to_double(im.hi));
  r.margin_exact = "lo(k) = " + to_string(ik.lo) + (k_ok ? " <= " : " > ") + to_string(bound) + " + " +
                   to_string(tol) + "; hi(M) = " + to_string(im.hi) + (m_ok ? " < " : " >= ") + "sqrt(" +
                   std::to_string(e) + ") - 1 + " + to_string(tol);
  r.instances += 2;
  if (k_ok && m_ok) {
    r.verdict = Verdict::kPass;
  } else {
    r.verdict = Verdict::kFail;
    r.violation = r.margin_exact;
  }
  return r;
}

CheckRecord Auditor::second_common(std::string name, const std::vector<std::size_t>& profile,
                                   const std::vector<std::size_t>& beta_m, const std::vector<std::size_t>& partner,
                                   const char* partner_label) {
  const std::size_t depth = opts_.depth;
  const Rational& tol = opts_.tolerance;
  const std::size_t e = *summary_.e;
  CheckRecord r;
  r.name = std::move(name);
  r.details.push_back({"profile", join(profile)});
  r.details.push_back({"betti(M)", join(beta_m)});
  r.details.push_back({partner_label, join(partner)});
  r.caveats.push_back("vanishing is checked on a window up to depth " + std::to_string(depth));
  const auto w = vanishing_scan(profile, opts_.window);
  if (!w || *w == 0) {
    r.verdict = Verdict::kVacuous;
    r.hypothesis = w ? "not applicable: a module is zero" : "fails: no vanishing window up to depth " +
                                                                 std::to_string(depth);
    return r;
  }
  const std::size_t s = *w;
  r.hypothesis = "holds: vanishing from index " + std::to_string(*w) + " up to depth " + std::to_string(depth);
  r.details.push_back({"shift", std::to_string(s)});

  std::optional<double> worst;
  for (std::size_t j = 0; s + j + 2 <= depth; ++j) {
    for (std::size_t n = 0; s + n + j + 2 <= depth; ++n) {
      const std::int64_t pj = partner[j], pj1 = partner[j + 1];
      const std::int64_t bn = beta_m[s + n], bn1 = beta_m[s + n + 1];
      const std::int64_t lhs = static_cast<std::int64_t>(e) * pj * bn;
      const std::int64_t rhs = (pj + pj1) * (bn + bn1);
      ++r.instances;
      if (lhs == rhs) ++r.equalities;
      double slack = 0.0;
      if (pj > 0 && bn > 0) {
        slack = static_cast<double>(e) - (1.0 + static_cast<double>(pj1) / static_cast<double>(pj)) *
                                             (1.0 + static_cast<double>(bn1) / static_cast<double>(bn));
      }
      if (!worst || slack < *worst) {
        worst = slack;
        r.margin_exact = std::to_string(lhs) + (lhs >= rhs ? " >= " : " < ") +
                         std::to_string(rhs) + " at j=" + std::to_string(j) +
                         ", n=" + std::to_string(n);
      }
      if (lhs < rhs && r.violation.empty()) {
        r.violation = "j=" + std::to_string(j) + ", n=" + std::to_string(n) + ": " +
                      std::to_string(lhs) + " < " +
                      std::to_string(rhs);
      }
    }
  }
  r.margin = worst.value_or(0.0);
  if (!r.violation.empty()) {
    r.verdict = Verdict::kFail;
    return r;
  }
  r.verdict = Verdict::kPass;

  // Interval surrogates of the min/max curvature conclusions (both sides of infinite length).
  std::vector<std::size_t> tail_m(beta_m.begin() + static_cast<std::ptrdiff_t>(s), beta_m.end());
  if (has_zero(tail_m) || has_zero(partner) || tail_m.size() < opts_.window + 2) {
    r.details.push_back({"conclusion", "a side has finite length resolution; nothing further to check"});
    return r;
  }
  const CurvatureInterval im = curvature_estimate(tail_m, opts_.window);
  const CurvatureInterval in = curvature_estimate(partner, opts_.window);
  r.details.push_back({"interval(M)", interval_string(im)});
  r.details.push_back({std::string("interval(") + partner_label + ")", interval_string(in)});
  const bool min_ok = below_root_bound(std::min(im.hi, in.hi), tol, e);
  const Rational half = Rational(static_cast<std::int64_t>(e), 2) - 1;
  const bool max_ok = std::max(im.lo, in.lo) <= half + tol;
  r.details.push_back({"min-curvature bound", min_ok ? "holds" : "fails"});
  r.details.push_back({"max-curvature bound", max_ok ? "holds" : "fails"});
  if (!min_ok || !max_ok) {
    r.verdict = Verdict::kFail;
    r.violation = "curvature intervals exceed the bounds implied by vanishing";
  }
  return r;
}

CheckRecord Auditor::audit_second_tor(const ModuleRep& m, const ModuleRep& n) {
  if (summary_.ci) return setup_violation("second-tor");
  const std::size_t depth = opts_.depth;
  FreeResolution rm = resolve(m, depth + 1, full(opts_.resolve));
  TorProfile tor = tor_lengths(rm, n, depth);
  FreeResolution rn = resolve(n, depth, plain(opts_.resolve));
  return second_common("second-tor", tor.lengths, prefix(rm.betti, depth), rn.betti, "betti(N)");
}

CheckRecord Auditor::audit_second_ext(const ModuleRep& m, const ModuleRep& n) {
  if (summary_.ci) return setup_violation("second-ext");
  const std::size_t depth = opts_.depth;
  FreeResolution rm = resolve(m, depth + 1, full(opts_.resolve));
  const auto ext = ext_lengths(rm, n, depth);
  // Instances use Bass numbers up to index depth - 1.
  const BassSequence bass = bass_sequence(residue_with_boundaries(depth), n, depth - 1, opts_.resolve);
  return second_common("second-ext", ext, prefix(rm.betti, depth), bass.direct, "bass(N)");
}

CheckRecord Auditor::audit_third(const ModuleRep& m, std::size_t i0) {
  if (summary_.ci) return setup_violation("third");
  const std::size_t depth = opts_.depth;
  if (i0 + 1 > depth) throw Error(Errc::kInvalidArgument, "i0 must be below the depth");
  const Rational& tol = opts_.tolerance;
  const auto e = static_cast<std::int64_t>(*summary_.e);
  CheckRecord r;
  r.name = "third";
  FreeResolution res = resolve(m, depth, plain(opts_.resolve));
  r.details.push_back({"betti(M)", join(res.betti)});
  if (res.finite_pd()) {
    r.verdict = Verdict::kFinitePd;
    r.hypothesis = "fails: a Betti number of M vanishes by depth " + std::to_string(depth);
    return r;
  }
  const auto betti_k = prefix(residue(depth).betti, depth);
  const CurvatureInterval ik = curvature_estimate(betti_k, opts_.window);
  const CurvatureInterval im = curvature_estimate(res.betti, opts_.window);
  r.details.push_back({"betti(k)", join(betti_k)});
  r.details.push_back({"interval(k)", interval_string(ik)});
  r.details.push_back({"interval(M)", interval_string(im)});
  const auto roots = root_window(betti_k, opts_.window);
  r.details.push_back({"root window(k)", std::to_string(roots.first) + " .. " + std::to_string(roots.second)});
  r.caveats.push_back("curv(k) enters through its window interval widened by the tolerance " + to_string(tol));
  r.caveats.push_back("limsup and liminf are not separated by a finite window");

  const Rational lhs(static_cast<std::int64_t>(res.betti[i0 + 1]), static_cast<std::int64_t>(res.betti[i0]));
  auto rhs = [&](const Rational& c) { return Rational(e) / (1 + c) - 1; };
  const Rational c_pess = ik.lo - tol;
  const Rational c_opt = ik.hi + tol;
  const Rational c_nom = simplest_between(c_pess, c_opt);
  const bool pess = lhs > rhs(c_pess);
  const bool opt = lhs > rhs(c_opt);
  const bool nom = lhs > rhs(c_nom);
  r.instances = 1;
  r.margin = to_double(lhs - rhs(c_nom));
  r.margin_exact = to_string(lhs) + (nom ? " > " : " <= ") + to_string(rhs(c_nom));
  r.details.push_back({"curv(k) nominal", to_string(c_nom)});
  r.details.push_back({"hypothesis (pessimistic)", to_string(lhs) + (pess ? " > " : " <= ") + to_string(rhs(c_pess))});
  r.details.push_back({"hypothesis (optimistic)", to_string(lhs) + (opt ? " > " : " <= ") + to_string(rhs(c_opt))});
  if (!pess) {
    r.verdict = Verdict::kVacuous;
    r.hypothesis = opt ? "undecided: holds only under the optimistic reading" : "fails";
    return r;
  }
  r.hypothesis = "holds under the pessimistic reading";
  const bool concl = im.hi >= ik.lo - tol;
  r.details.push_back({"conclusion", "hi(M) = " + to_string(im.hi) + (concl ? " >= " : " < ") + to_string(ik.lo) +
                                         " - " + to_string(tol)});
  ++r.instances;
  if (concl) {
    r.verdict = Verdict::kPass;
  } else {
    r.verdict = Verdict::kFail;
    r.violation = "hi(M) = " + to_string(im.hi) + " < lo(k) - tol = " + to_string(ik.lo - tol);
  }
  return r;
}

CheckRecord check_first_inequality(const ModuleRep& m, std::size_t depth) {
  AuditOptions o;
  o.depth = std::max(depth, o.window + 2);
  Auditor a(m.algebra_ptr(), o);
  return a.first_inequality(m, depth);
}

CheckRecord check_length_identity(const ModuleRep& m, std::size_t depth) {
  AuditOptions o;
  o.depth = std::max(depth, o.window + 2);
  Auditor a(m.algebra_ptr(), o);
  return a.length_identity(m, depth);
}

std::vector<std::size_t> complete_intersection_betti(std::size_t embdim, std::size_t relations, std::size_t depth) {
  // (1+t)^n
  std::vector<std::size_t> num(depth + 1, 0);
  num[0] = 1;
  for (std::size_t k = 0; k < embdim; ++k) {
    for (std::size_t i = depth; i >= 1; --i) num[i] += num[i - 1];
  }
  // 1/(1-t^2)^c: coefficient of t^{2k} is C(k+c-1, c-1).
  std::vector<std::size_t> den(depth + 1, 0);
  for (std::size_t k = 0; 2 * k <= depth; ++k) {
    if (relations == 0) {
      den[0] = 1;
      break;
    }
    std::size_t c = 1;  // C(k + relations - 1, k)
    for (std::size_t i = 1; i <= k; ++i) c = c * (relations - 1 + i) / i;
    den[2 * k] = c;
  }
  std::vector<std::size_t> out(depth + 1, 0);
  for (std::size_t i = 0; i <= depth; ++i) {
    for (std::size_t j = 0; j <= i; ++j) out[i] += num[j] * den[i - j];
  }
  return out;
}

CheckRecord modx_check(const QuotientAlgebra& a, const Polynomial& x, std::size_t depth,
                       std::optional<std::vector<std::size_t>> reference, const ResolveOptions& opts) {
  if (a.krull_dim() == 0) throw Error(Errc::kZeroDimensional, "the ring is artinian; no regular element exists");
  if (a.krull_dim() > 1) throw Error(Errc::kUnsupportedDimension, "reduction is implemented for dimension one");
  if (x.is_zero() || !x.is_homogeneous() || x.degree() != 1) {
    throw Error(Errc::kInvalidArgument, "x must be a nonzero linear form");
  }
  const std::uint32_t bound = default_degree_bound(a);
  if (!is_regular_up_to(a, x, bound)) {
    throw Error(Errc::kNotRegular, x.to_string(a.vars()) + " is not regular up to degree " + std::to_string(bound));
  }
  CheckRecord r;
  r.name = "modx";
  r.hypothesis = "x regular up to degree " + std::to_string(bound);
  AlgebraPtr b = quotient_by_linear_form(a, x);
  ResolveOptions o = opts;
  o.keep_boundaries = false;
  FreeResolution rb = resolve(residue_field(b), depth, o);
  r.details.push_back({"length(B)", std::to_string(b->length())});
  r.details.push_back({"betti(B)", join(rb.betti)});

  for (std::size_t n = 1; n <= depth; ++n) {
    ++r.instances;
    if (rb.betti[n] == rb.betti[n - 1]) ++r.equalities;
    if (rb.betti[n] < rb.betti[n - 1] && r.violation.empty()) {
      r.violation = "monotonicity at n=" + std::to_string(n) + ": " + std::to_string(rb.betti[n]) + " < " +
                    std::to_string(rb.betti[n - 1]);
    }
  }
  if (!reference && is_complete_intersection(a)) {
    reference = complete_intersection_betti(a.embedding_dim(), minimal_generator_count(a), depth);
    r.details.push_back({"reference source", "complete intersection Poincare series"});
  }
  if (reference) {
    r.details.push_back({"reference betti(A)", join(*reference)});
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= depth && n < reference->size(); ++n) {
      ++r.instances;
      ++checked;
      const std::size_t lhs = rb.betti[n] + rb.betti[n - 1];
      if (lhs == (*reference)[n]) {
        ++r.equalities;
      } else if (r.violation.empty()) {
        r.violation = "recursion at n=" + std::to_string(n) + ": " + std::to_string(lhs) +
                      " != " + std::to_string((*reference)[n]);
      }
    }
    r.margin_exact = "recursion checked exactly for n=1.." + std::to_string(checked);
  } else {
    r.caveats.push_back("no reference Betti numbers for A; only monotonicity over B was checked");
    r.margin_exact = "monotone for n=1.." + std::to_string(depth);
  }
  r.margin = 0.0;
  r.verdict = r.violation.empty() ? Verdict::kPass : Verdict::kFail;
  return r;
}

Rational simplest_between(Rational lo, Rational hi) {
  if (hi < lo) std::swap(lo, hi);
  std::int64_t f = lo.numerator() / lo.denominator();
  if (Rational(f) > lo) --f;
  if (Rational(f) == lo) return lo;
  if (Rational(f + 1) <= hi) return Rational(f + 1);
  const Rational inner = simplest_between(1 / (hi - f), 1 / (lo - f));
  return Rational(f) + 1 / inner;
}

}  // namespace curvlab
