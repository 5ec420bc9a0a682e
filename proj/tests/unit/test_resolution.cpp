#include "curvlab/error.hpp"
#include "curvlab/resolution.hpp"
#include "curvlab/tools/invariants.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace curvlab;

namespace {

std::vector<std::size_t> ones(std::size_t n) { return std::vector<std::size_t>(n, 1); }

std::vector<std::size_t> powers(std::size_t base, std::size_t n) {
  std::vector<std::size_t> v{1};
  while (v.size() < n) v.push_back(v.back() * base);
  return v;
}

}  // namespace

TEST_CASE("minimal presentations") {
  auto r3 = fx::r3();
  auto free = minimal_presentation(ModuleRep::free(r3, 1));
  CHECK(free.target_rank == 1);
  CHECK(free.source_rank == 0);

  auto r1 = fx::r1();
  auto k = minimal_presentation(residue_field(r1));
  CHECK(k.target_rank == 1);
  REQUIRE(k.source_rank == 1);
  // the single relation is a multiple of x
  CHECK(k.is_minimal());
  CHECK(cokernel_module(r1, k).dim() == 1);

  auto pa = minimal_presentation(fx::cyclic(r3, {"a"}));
  CHECK(pa.target_rank == 1);
  CHECK(pa.source_rank == 1);
  CHECK(cokernel_module(r3, pa).dim() == 3);

  auto z = minimal_presentation(ModuleRep::zero(r3));
  CHECK(z.target_rank == 0);
}

TEST_CASE("betti numbers of the fixtures") {
  CHECK(resolve(residue_field(fx::r1()), 10).betti == ones(11));
  CHECK(resolve(residue_field(fx::r2()), 8).betti == powers(2, 9));
  CHECK(resolve(fx::cyclic(fx::r3(), {"a"}), 12).betti == ones(13));
  CHECK(resolve(fx::cyclic(fx::r3(), {"b", "c"}), 10).betti == powers(2, 11));
  auto k3 = resolve(residue_field(fx::r3()), 9);
  for (std::size_t n = 0; n <= 9; ++n) {
    CHECK(k3.betti[n] == (std::size_t{2} << n) - 1);
    CHECK(k3.syzygy_lengths[n] == (std::size_t{4} << n) - 3);
  }
}

TEST_CASE("free modules have finite projective dimension") {
  auto res = resolve(ModuleRep::free(fx::r3(), 2), 4);
  CHECK(res.betti == std::vector<std::size_t>{2, 0, 0, 0, 0});
  CHECK(res.finite_pd());
  auto z = resolve(ModuleRep::zero(fx::r3()), 3);
  CHECK(z.betti == std::vector<std::size_t>{0, 0, 0, 0});
}

TEST_CASE("syzygies") {
  auto r3 = fx::r3();
  auto m = fx::cyclic(r3, {"b", "c"});
  CHECK(syzygy(m, 0).dim() == m.dim());
  auto s1 = syzygy(fx::cyclic(r3, {"a"}), 1);
  CHECK(s1.dim() == 3);
  CHECK(min_gens(s1) == 1);
  for (auto a : {fx::r1(), fx::r2(), r3}) {
    CHECK(syzygy(residue_field(a), 1).dim() == a->length() - 1);
  }
  auto res = resolve(residue_field(r3), 5);
  for (std::size_t i = 0; i <= 5; ++i) {
    auto s = syzygy_module(res, i);
    CHECK(s.dim() == res.syzygy_lengths[i]);
    CHECK(min_gens(s) == res.betti[i]);
  }
}

TEST_CASE("resolutions verify on fixtures") {
  for (auto a : {fx::r1(), fx::r2(), fx::r3()}) {
    auto res = resolve(residue_field(a), 6);
    auto problem = verify_resolution(res);
    CHECK_MESSAGE(!problem, problem.value_or(""));
  }
  auto res = resolve(fx::cyclic(fx::r3(), {"b", "c"}), 6);
  CHECK_FALSE(verify_resolution(res));
}

TEST_CASE("betti numbers do not depend on grading or basis order (fuzz)") {
  for (auto a : {fx::r2(), fx::r3()}) {
    tools::ModuleSampler s(a, 23);
    for (int i = 0; i < 15; ++i) {
      const ModuleRep m = s.next_nonzero();
      const std::size_t depth = 5;
      const auto base = resolve(m, depth);
      CHECK_FALSE(verify_resolution(base));
      ResolveOptions shuffled;
      shuffled.shuffle_seed = 1000 + i;
      const auto sh = resolve(m, depth, shuffled);
      CHECK(sh.betti == base.betti);
      CHECK_FALSE(verify_resolution(sh));
      ResolveOptions plain;
      plain.use_grading = false;
      const auto un = resolve(m, depth, plain);
      CHECK(un.betti == base.betti);
      CHECK(un.syzygy_lengths == base.syzygy_lengths);
      CHECK_FALSE(verify_resolution(un));
      for (std::size_t n = 0; n < depth; ++n) {
        CHECK(base.syzygy_lengths[n] + base.syzygy_lengths[n + 1] == a->length() * base.betti[n]);
      }
    }
  }
}

TEST_CASE("incremental extension matches a direct resolution") {
  Resolver r(residue_field(fx::r3()), ResolveOptions{});
  r.extend_to(3);
  r.extend_to(7);
  CHECK(r.result().betti == resolve(residue_field(fx::r3()), 7).betti);
  ResolveOptions lean;
  lean.keep_boundaries = false;
  Resolver l(residue_field(fx::r3()), lean);
  l.extend_to(4);
  l.extend_to(8);
  CHECK(l.result().betti == resolve(residue_field(fx::r3()), 8).betti);
}

TEST_CASE("budget cap is an error") {
  ResolveOptions o;
  o.budget = 100;
  try {
    resolve(residue_field(fx::r3()), 12, o);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kBudgetExceeded);
  }
}
