#include "curvlab/audit.hpp"
#include "curvlab/error.hpp"
#include "curvlab/report.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace curvlab;

TEST_CASE("ring summaries") {
  auto s = summarize(*fx::r3());
  CHECK(s.e == std::size_t{6});
  CHECK(s.length == std::size_t{6});
  CHECK(s.embdim == 3);
  CHECK_FALSE(s.ci);
  CHECK(summarize(*fx::r1()).ci);
  auto s4 = summarize(*fx::r4());
  CHECK(s4.dim == 1);
  CHECK(s4.e == std::size_t{2});
  CHECK_FALSE(s4.length);
}

TEST_CASE("first inequality and length identity on R3") {
  auto a = fx::r3();
  Auditor au(a, {});
  auto first = au.audit_first(fx::cyclic(a, {"a"}));
  CHECK(first.verdict == Verdict::kPass);
  // exact inequality is an equality at every index for this module
  CHECK(first.equalities + 2 == first.instances);  // two more for the curvature bounds
  auto k = au.first_inequality(residue_field(a), 8);
  CHECK(k.verdict == Verdict::kPass);
  auto id = au.length_identity(residue_field(a), 10);
  CHECK(id.verdict == Verdict::kPass);
  CHECK(id.instances == 10);
}

TEST_CASE("third audit decides the curvature gap") {
  auto a = fx::r3();
  AuditOptions o;
  o.depth = 10;
  Auditor au(a, o);
  auto bc = au.audit_third(fx::cyclic(a, {"b", "c"}), 0);
  CHECK(bc.verdict == Verdict::kPass);
  CHECK(bc.margin_exact == "2 > 1");
  auto pa = au.audit_third(fx::cyclic(a, {"a"}), 0);
  CHECK(pa.verdict == Verdict::kVacuous);
}

TEST_CASE("complete intersections are setup violations") {
  auto a = fx::r1();
  Auditor au(a, {});
  auto k = residue_field(a);
  CHECK(au.audit_first(k).verdict == Verdict::kSetupViolation);
  CHECK(au.audit_second_tor(k, k).verdict == Verdict::kSetupViolation);
  CHECK(au.audit_second_ext(k, k).verdict == Verdict::kSetupViolation);
  CHECK(au.audit_third(k, 0).verdict == Verdict::kSetupViolation);
}

TEST_CASE("second audits") {
  auto a = fx::r3();
  AuditOptions o;
  o.depth = 8;
  Auditor au(a, o);
  auto ma = fx::cyclic(a, {"a"});
  CHECK(au.audit_second_tor(ma, ma).verdict == Verdict::kVacuous);
  auto bc = fx::cyclic(a, {"b", "c"});
  auto r = au.audit_second_tor(ModuleRep::free(a, 1), bc);
  CHECK(r.verdict != Verdict::kFail);
}

TEST_CASE("modx on a one-dimensional ring") {
  auto a = fx::r4();
  auto x = a->parse("x");
  auto r = modx_check(*a, x, 12, std::vector<std::size_t>(13, 1));
  CHECK(r.verdict == Verdict::kFail);
  auto ci = modx_check(*a, x, 12);
  CHECK(ci.verdict == Verdict::kPass);
  CHECK_THROWS_AS(modx_check(*a, a->parse("y"), 6), Error);
  try {
    modx_check(*a, a->parse("y"), 6);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kNotRegular);
  }
  CHECK_THROWS_AS(modx_check(*fx::r3(), fx::r3()->parse("a"), 4), Error);
}

TEST_CASE("complete intersection Betti numbers") {
  CHECK(complete_intersection_betti(1, 1, 5) == std::vector<std::size_t>{1, 1, 1, 1, 1, 1});
  CHECK(complete_intersection_betti(2, 1, 4) == std::vector<std::size_t>{1, 2, 2, 2, 2});
  CHECK(complete_intersection_betti(2, 2, 4) == std::vector<std::size_t>{1, 2, 3, 4, 5});
  CHECK(complete_intersection_betti(2, 0, 4) == std::vector<std::size_t>{1, 2, 1, 0, 0});
}

TEST_CASE("simplest rational in an interval") {
  CHECK(simplest_between(Rational(2047, 1023), Rational(255, 127)) == Rational(255, 127));
  CHECK(simplest_between(Rational(41, 100), Rational(44, 100)) == Rational(3, 7));
  CHECK(simplest_between(Rational(1, 3), Rational(1, 3)) == Rational(1, 3));
  CHECK(simplest_between(Rational(0), Rational(1, 2)) == Rational(0));
}

TEST_CASE("report rendering is deterministic") {
  auto a = fx::r3();
  Auditor au(a, {});
  AuditReport rep{au.ring(), {au.audit_first(fx::cyclic(a, {"a"}))}};
  auto j1 = render_json(rep);
  auto j2 = render_json(rep);
  CHECK(j1 == j2);
  CHECK(j1.find("\"schema\": 1") != std::string::npos);
  CHECK(render_text(rep).find("PASS") != std::string::npos);
  CHECK(exit_status(rep) == 0);
  rep.checks[0].verdict = Verdict::kFail;
  CHECK(exit_status(rep) == 1);
}
