#include "curvlab/error.hpp"
#include "curvlab/module.hpp"
#include "curvlab/tools/invariants.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace curvlab;

TEST_CASE("cyclic modules") {
  auto a = fx::r3();
  CHECK(cyclic_module(a, std::vector<std::string>{"0"}).dim() == 6);
  CHECK(fx::cyclic(a, {"a"}).dim() == 3);
  auto bc = fx::cyclic(a, {"b", "c"});
  CHECK(bc.dim() == 2);
  CHECK(min_gens(bc) == 1);
  CHECK_THROWS_AS(fx::cyclic(a, {"1 + a"}), Error);
  try {
    fx::cyclic(a, {"1"});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kUnitIdeal);
  }
}

TEST_CASE("cokernel modules") {
  auto a = fx::r3();
  auto free1 = cokernel_module(a, PresentationMatrix::from_strings(*a, {{"0"}}));
  CHECK(free1.dim() == 6);
  auto ca = cokernel_module(a, PresentationMatrix::from_strings(*a, {{"a"}}));
  auto cy = fx::cyclic(a, {"a"});
  CHECK(ca.dim() == cy.dim());
  CHECK(min_gens(ca) == min_gens(cy));
  CHECK(socle_dim(ca) == socle_dim(cy));

  auto r2 = fx::r2();
  // one generator, relations x and y in separate columns
  auto k = cokernel_module(r2, PresentationMatrix::from_strings(*r2, {{"x", "y"}}));
  CHECK(k.dim() == 1);
  // a 2x1 column (x; y): m kills (x, y), so A^2 / A(x, y) has length 6 - 1 = 5
  auto two = cokernel_module(r2, PresentationMatrix::from_strings(*r2, {{"x"}, {"y"}}));
  CHECK(two.dim() == 5);
  CHECK(min_gens(two) == 2);
  CHECK(PresentationMatrix::from_strings(*r2, {{"x"}, {"y"}}).is_minimal());
  CHECK_FALSE(PresentationMatrix::from_strings(*r2, {{"1 + x"}}).is_minimal());
}

TEST_CASE("generators and socle") {
  auto r2 = fx::r2();
  CHECK(min_gens(ModuleRep::free(r2, 1)) == 1);
  CHECK(min_gens(residue_field(r2)) == 1);
  const ModuleRep a1 = ModuleRep::free(r2, 1);
  CHECK(min_gens(submodule(a1, maximal_ideal_image(a1))) == 2);
  CHECK(socle_dim(residue_field(r2)) == 1);
  CHECK(socle_dim(ModuleRep::free(r2, 1)) == 2);
  CHECK(socle_dim(ModuleRep::free(fx::r1(), 1)) == 1);
  CHECK(min_gens(ModuleRep::zero(r2)) == 0);
  CHECK(socle_dim(ModuleRep::zero(r2)) == 0);
}

TEST_CASE("tensor products") {
  auto a = fx::r3();
  auto m = fx::cyclic(a, {"b", "c"});
  auto t = tensor(m, ModuleRep::free(a, 1));
  CHECK(t.dim() == m.dim());
  CHECK(min_gens(t) == min_gens(m));
  CHECK(socle_dim(t) == socle_dim(m));
  CHECK(tensor(residue_field(a), residue_field(a)).dim() == 1);
  CHECK(tensor(fx::cyclic(a, {"a"}), fx::cyclic(a, {"a"})).dim() == 3);
  CHECK(tensor(m, fx::cyclic(a, {"a"})).dim() == tensor(fx::cyclic(a, {"a"}), m).dim());
  CHECK(tensor(m, ModuleRep::zero(a)).dim() == 0);
}

TEST_CASE("Hom modules") {
  auto a = fx::r3();
  auto m = fx::cyclic(a, {"a"});
  CHECK(hom_module(ModuleRep::free(a, 1), m).dim() == m.dim());
  CHECK(hom_module(residue_field(a), residue_field(a)).dim() == 1);
  auto r2 = fx::r2();
  CHECK(hom_module(residue_field(r2), ModuleRep::free(r2, 1)).dim() == 2);
  CHECK(hom_module(ModuleRep::zero(r2), residue_field(r2)).dim() == 0);
}

TEST_CASE("Matlis duals") {
  auto r2 = fx::r2();
  CHECK(matlis_dual(residue_field(r2)).dim() == 1);
  auto d = matlis_dual(ModuleRep::free(r2, 1));
  CHECK(min_gens(d) == 2);
  CHECK(socle_dim(d) == 1);
  CHECK(matlis_dual(fx::cyclic(fx::r3(), {"a"})).dim() == 3);
  CHECK_THROWS_AS(matlis_dual(ModuleRep::free(fx::r4(), 1)), Error);
}

TEST_CASE("constructed modules satisfy the defining relations; length bounds hold (fuzz)") {
  for (auto a : {fx::r1(), fx::r2(), fx::r3()}) {
    tools::ModuleSampler s(a, 17);
    for (int i = 0; i < 30; ++i) {
      const ModuleRep u = s.next(), v = s.next();
      CHECK(u.satisfies_relations());
      const ModuleRep t = tensor(u, v), h = hom_module(u, v), d = matlis_dual(u);
      CHECK(t.satisfies_relations());
      CHECK(h.satisfies_relations());
      CHECK(d.satisfies_relations());
      CHECK(t.dim() >= min_gens(u) * min_gens(v));
      CHECK(h.dim() >= min_gens(u) * socle_dim(v));
      CHECK(t.dim() == tensor(v, u).dim());
      CHECK(matlis_dual(d).dim() == u.dim());
      CHECK(min_gens(d) == socle_dim(u));
      CHECK(socle_dim(d) == min_gens(u));
      CHECK(direct_sum(u, v).dim() == u.dim() + v.dim());
      CHECK(min_gens(direct_sum(u, v)) == min_gens(u) + min_gens(v));
    }
  }
}
