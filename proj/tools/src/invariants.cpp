#include "curvlab/tools/invariants.hpp"

#include <sstream>

#include "curvlab/error.hpp"
#include "curvlab/report.hpp"

namespace curvlab::tools {

namespace {

CheckRecord bound_check(std::string name, std::size_t lhs, std::size_t rhs, const std::string& what) {
  CheckRecord r;
  r.name = std::move(name);
  r.hypothesis = "unconditional";
  r.instances = 1;
  r.equalities = lhs == rhs ? 1 : 0;
  r.margin = static_cast<double>(lhs) - static_cast<double>(rhs);
  r.margin_exact = what + ": " + std::to_string(lhs) + (lhs >= rhs ? " >= " : " < ") + std::to_string(rhs);
  r.verdict = lhs >= rhs ? Verdict::kPass : Verdict::kFail;
  if (lhs < rhs) r.violation = r.margin_exact;
  return r;
}

std::string join(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

CheckRecord tor_symmetry(const FreeResolution& ru, const FreeResolution& rv, const ModuleRep& u, const ModuleRep& v,
                         std::size_t depth) {
  CheckRecord r;
  r.name = "tor-symmetry";
  r.hypothesis = "unconditional";
  const auto uv = tor_lengths(ru, v, depth).lengths;
  const auto vu = tor_lengths(rv, u, depth).lengths;
  for (std::size_t i = 0; i <= depth; ++i) {
    ++r.instances;
    if (uv[i] == vu[i]) {
      ++r.equalities;
    } else if (r.violation.empty()) {
      r.violation = "i=" + std::to_string(i) + ": " + std::to_string(uv[i]) + " != " + std::to_string(vu[i]);
    }
  }
  r.margin = 0.0;
  r.margin_exact = r.violation.empty() ? "equal for i=0.." + std::to_string(depth) : r.violation;
  r.details.push_back({"tor(U,V)", join(uv)});
  r.verdict = r.violation.empty() ? Verdict::kPass : Verdict::kFail;
  return r;
}

CheckRecord matlis_round_trip(const ModuleRep& u) {
  CheckRecord r;
  r.name = "matlis-round-trip";
  r.hypothesis = "unconditional";
  const ModuleRep d = matlis_dual(u);
  const ModuleRep dd = matlis_dual(d);
  auto expect = [&](bool ok, const std::string& what) {
    ++r.instances;
    if (ok) ++r.equalities;
    if (!ok && r.violation.empty()) r.violation = what;
  };
  expect(dd.actions() == u.actions(), "double dual differs from the module");
  expect(!u.graded() || dd.degrees() == u.degrees(), "double dual changes the grading");
  expect(d.dim() == u.dim(), "dual changes the length");
  const std::size_t mu = min_gens(u), soc = socle_dim(u);
  expect(min_gens(d) == soc, "mu(dual) != socle dimension");
  expect(socle_dim(d) == mu, "socle(dual) != mu");
  r.margin = 0.0;
  r.margin_exact = r.violation.empty() ? "double dual equal; mu <-> socle (" + std::to_string(mu) + ", " +
                                             std::to_string(soc) + ")"
                                       : r.violation;
  r.verdict = r.violation.empty() ? Verdict::kPass : Verdict::kFail;
  return r;
}

}  // namespace

ModuleSampler::ModuleSampler(AlgebraPtr a, std::uint64_t seed) : alg_(std::move(a)), rng_(seed) {
  if (!alg_->is_artinian()) throw Error(Errc::kNotArtinian, "modules are sampled over artinian algebras");
}

Polynomial ModuleSampler::random_form(std::uint32_t degree) {
  const QuotientAlgebra& a = *alg_;
  const std::uint32_t p = a.characteristic();
  Vector c(a.length(), 0);
  for (std::size_t i = 0; i < a.length(); ++i) {
    if (a.basis_degree(i) == degree) c[i] = static_cast<Residue>(below(p));
  }
  return a.element(c);
}

Polynomial ModuleSampler::random_element(bool graded) {
  const std::uint32_t top = std::max<std::uint32_t>(alg_->top_degree(), 1);
  if (graded) return random_form(1 + static_cast<std::uint32_t>(below(std::min<std::uint32_t>(top, 2))));
  Polynomial f = random_form(1);
  if (top >= 2) f = f + random_form(2);
  return f;
}

ModuleRep ModuleSampler::next() {
  const std::uint64_t kind = below(10);
  if (kind == 0) return ModuleRep::zero(alg_);
  // Inhomogeneous draws only make sense when A has elements of degree 2.
  const bool graded = !alg_->is_homogeneous() || alg_->top_degree() < 2 || below(10) != 0;
  if (kind <= 5) {
    std::vector<Polynomial> gens;
    const std::size_t n = 1 + below(2);
    for (std::size_t i = 0; i < n; ++i) gens.push_back(random_element(graded));
    try {
      ModuleRep m = cyclic_module(alg_, gens);
      if (!graded) m.set_provenance(m.provenance() + " [inhomogeneous]");
      return m;
    } catch (const Error& e) {
      if (e.code() != Errc::kUnitIdeal) throw;
      return ModuleRep::zero(alg_);
    }
  }
  const std::size_t b0 = 1 + below(2), b1 = 1 + below(2);
  std::vector<std::vector<Polynomial>> rows(b0);
  std::string desc = "coker [";
  for (std::size_t r = 0; r < b0; ++r) {
    desc += r ? "; " : "";
    for (std::size_t c = 0; c < b1; ++c) {
      Polynomial f = below(3) == 0 ? alg_->zero() : (graded ? random_form(1) : random_element(false));
      desc += (c ? ", " : "") + (f.is_zero() ? std::string("0") : f.to_string(alg_->vars()));
      rows[r].push_back(std::move(f));
    }
  }
  ModuleRep m = cokernel_module(alg_, PresentationMatrix::from_polynomials(*alg_, rows));
  m.set_provenance(desc + "]");
  return m;
}

ModuleRep ModuleSampler::next_nonzero() {
  for (;;) {
    ModuleRep m = next();
    if (m.dim() > 0) return m;
  }
}

InvariantReport invariant_suite(AlgebraPtr a, const InvariantOptions& opts) {
  AuditOptions ao;
  ao.depth = std::max(opts.depth, ao.window + 2);
  ao.resolve = opts.resolve;
  Auditor auditor(a, ao);
  InvariantReport out;
  out.ring = auditor.ring();
  ModuleSampler sampler(a, opts.seed);
  ResolveOptions ro = opts.resolve;
  ro.keep_boundaries = true;

  for (std::size_t id = 0; id < opts.count; ++id) {
    const ModuleRep u = id == 0 ? residue_field(a) : sampler.next();
    const ModuleRep v = sampler.next();
    InvariantCase c;
    c.id = id;
    c.module = u.provenance();
    c.partner = v.provenance();
    const bool small = u.graded() && v.graded();
    const std::size_t depth = small ? opts.depth : std::min(opts.depth, opts.ungraded_depth);

    const FreeResolution ru = resolve(u, depth + 1, ro);
    const FreeResolution rv = resolve(v, depth + 1, ro);
    c.checks.push_back(auditor.first_inequality(ru, depth));
    c.checks.push_back(auditor.length_identity(ru, depth));
    c.checks.push_back(bound_check("tensor-length", tensor(u, v).dim(), min_gens(u) * min_gens(v),
                                   "l(U (x) V) >= mu(U) mu(V)"));
    c.checks.push_back(bound_check("hom-length", hom_module(u, v).dim(), min_gens(u) * socle_dim(v),
                                   "l(Hom(U, V)) >= mu(U) r(V)"));
    c.checks.push_back(tor_symmetry(ru, rv, u, v, depth));
    c.checks.push_back(matlis_round_trip(u));
    if (!small) {
      for (auto& r : c.checks) r.caveats.push_back("inhomogeneous case, depth capped at " + std::to_string(depth));
    }
    for (const auto& r : c.checks) {
      switch (r.verdict) {
        case Verdict::kPass: ++out.pass; break;
        case Verdict::kFail: ++out.fail; break;
        default: ++out.vacuous; break;
      }
      out.equalities += r.name == "first-inequality" ? r.equalities : 0;
    }
    out.cases.push_back(std::move(c));
  }
  return out;
}

std::string render_text(const InvariantReport& r) {
  std::ostringstream os;
  os << "ring: " << render_text(r.ring);
  for (const auto& c : r.cases) {
    os << "case " << c.id << ": " << c.module << " | partner " << c.partner << "\n";
    for (const auto& chk : c.checks) {
      os << "  " << chk.name << ": " << verdict_name(chk.verdict);
      if (chk.equalities && chk.name == "first-inequality") os << " (equality at " << chk.equalities << " indices)";
      if (!chk.violation.empty()) os << " -- " << chk.violation;
      os << "\n";
    }
  }
  os << "summary: " << r.pass << " PASS, " << r.fail << " FAIL, " << r.vacuous << " VACUOUS; first-inequality equalities: "
     << r.equalities << "\n";
  return os.str();
}

AuditReport as_audit_report(const InvariantReport& r) {
  AuditReport out;
  out.ring = r.ring;
  for (const auto& c : r.cases) {
    for (CheckRecord chk : c.checks) {
      chk.name += "#" + std::to_string(c.id);
      chk.details.insert(chk.details.begin(), {"partner", c.partner});
      chk.details.insert(chk.details.begin(), {"module", c.module});
      out.checks.push_back(std::move(chk));
    }
  }
  return out;
}

}  // namespace curvlab::tools
