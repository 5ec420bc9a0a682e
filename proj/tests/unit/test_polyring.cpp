#include <random>

#include "curvlab/error.hpp"
#include "curvlab/groebner.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace curvlab;

namespace {

const PrimeField F(101);

std::vector<Polynomial> polys(const std::vector<std::string>& vars, const std::vector<std::string>& src,
                              MonomialOrder order = MonomialOrder::kGrevlex) {
  std::vector<Polynomial> out;
  for (const auto& s : src) out.push_back(parse_polynomial(s, vars, F, order));
  return out;
}

oracle::Poly to_oracle(const Polynomial& f) {
  oracle::Poly out;
  for (const auto& t : f.terms()) out[t.mono.exp] = t.coeff;
  return out;
}

const std::vector<std::string> kR3Vars{"a", "b", "c"};
const std::vector<std::string> kR3Ideal{"a^2", "b*c", "c^2", "b^2 - a*c"};

}  // namespace

TEST_CASE("polynomial grammar") {
  const std::vector<std::string> v{"x", "y"};
  auto f = parse_polynomial("3x^2*y - 2 y + 7", v, F);
  CHECK(f.terms().size() == 3);
  CHECK(f.degree() == 3);
  CHECK(f.to_string(v) == "3*x^2*y - 2*y + 7");
  CHECK(parse_polynomial("x*y - y*x", v, F).is_zero());
  CHECK(parse_polynomial("102*x", v, F) == parse_polynomial("x", v, F));
  CHECK(parse_polynomial(" - x ", v, F) == parse_polynomial("100x", v, F));
  CHECK_THROWS_AS(parse_polynomial("z", v, F), Error);
  CHECK_THROWS_AS(parse_polynomial("x^", v, F), Error);
  CHECK_THROWS_AS(parse_polynomial("x + + y", v, F), Error);
}

TEST_CASE("monomial orders") {
  Monomial x2({2, 0, 0}), xy({1, 1, 0}), z3({0, 0, 3}), y({0, 1, 0});
  CHECK(compare(z3, x2, MonomialOrder::kGrevlex) > 0);
  CHECK(compare(z3, x2, MonomialOrder::kLex) < 0);
  CHECK(compare(x2, xy, MonomialOrder::kGrevlex) > 0);
  CHECK(compare(xy, y, MonomialOrder::kGrevlex) > 0);
  CHECK(parse_order("lex") == MonomialOrder::kLex);
  CHECK_THROWS_AS(parse_order("deglex"), Error);
}

TEST_CASE("normal form examples") {
  const std::vector<std::string> v{"x"};
  auto g = buchberger(polys(v, {"x^2"}));
  CHECK(normal_form(parse_polynomial("x^2", v, F), g).is_zero());
  CHECK(normal_form(parse_polynomial("1", v, F), g) == parse_polynomial("1", v, F));

  auto r3 = buchberger(polys(kR3Vars, kR3Ideal));
  CHECK(normal_form(parse_polynomial("b^2", kR3Vars, F), r3) == parse_polynomial("a*c", kR3Vars, F));
}

TEST_CASE("buchberger examples") {
  const std::vector<std::string> v{"x", "y"};
  auto m = buchberger(polys(v, {"x^2", "x*y", "y^2"}));
  CHECK(m.generators.size() == 3);
  CHECK(is_groebner_basis(m));

  auto r3 = buchberger(polys(kR3Vars, kR3Ideal));
  CHECK(is_groebner_basis(r3));
  for (const auto& g : r3.generators) CHECK(g.leading().coeff == 1);
  CHECK(standard_monomials(r3, 10).size() == 6);

  CHECK_THROWS_AS(buchberger(polys(v, {"x^2 - y", "y^2"}), 1), Error);
  try {
    buchberger(polys(v, {"x^2 - y", "y^2"}), 1);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kGuardExceeded);
  }
}

TEST_CASE("reduced basis: no non-leading term divisible by a leading monomial") {
  const std::vector<std::string> v{"x", "y", "z"};
  auto g = buchberger(polys(v, {"x^2 - y*z", "y^2 - x*z", "z^2 - x*y"}));
  const auto lead = g.leading_monomials();
  for (const auto& p : g.generators) {
    for (std::size_t t = 1; t < p.terms().size(); ++t) {
      for (const auto& l : lead) CHECK_FALSE(l.divides(p.terms()[t].mono));
    }
  }
}

TEST_CASE("standard monomials and dimension of monomial ideals") {
  const std::vector<std::string> v{"x", "y"};
  auto g = buchberger(polys(v, {"x^2", "x*y", "y^2"}));
  CHECK(standard_monomials(g, 5).size() == 3);
  auto one = buchberger(polys({"x"}, {"x"}));
  CHECK(standard_monomials(one, 5).size() == 1);

  auto r3 = standard_monomials(buchberger(polys(kR3Vars, kR3Ideal)), 10);
  std::set<std::string> names;
  for (const auto& m : r3) names.insert(monomial_to_string(m, kR3Vars));
  CHECK(names == std::set<std::string>{"1", "a", "b", "c", "a*b", "a*c"});

  CHECK(monomial_ideal_dimension({Monomial({2, 0}), Monomial({1, 1}), Monomial({0, 2})}, 2) == 0);
  CHECK(monomial_ideal_dimension({Monomial({0, 2})}, 2) == 1);
  CHECK(monomial_ideal_dimension({}, 4) == 4);
  CHECK(monomial_ideal_dimension({Monomial({1, 1, 0})}, 3) == 2);
}

TEST_CASE("normal form is idempotent and kills ideal multiples (random)") {
  std::mt19937_64 rng(3);
  const std::vector<std::string> v{"x", "y", "z"};
  const std::vector<std::vector<std::string>> ideals{
      {"x^2", "y^2", "z^2"}, {"x^2 - y*z", "y^2 - x*z", "z^2 - x*y"}, {"x*y", "y*z", "x^3 - z^3", "y^3"}};
  for (const auto& src : ideals) {
    const auto gens = polys(v, src);
    const auto g = buchberger(gens);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<Term> terms;
      for (int t = 0; t < 5; ++t) {
        terms.push_back({Monomial({static_cast<std::uint32_t>(rng() % 4), static_cast<std::uint32_t>(rng() % 4),
                                   static_cast<std::uint32_t>(rng() % 4)}),
                         static_cast<Residue>(rng() % 101)});
      }
      const auto f = Polynomial::from_terms(3, F, MonomialOrder::kGrevlex, terms);
      const auto nf = normal_form(f, g);
      CHECK(normal_form(nf, g) == nf);
      for (const auto& gi : gens) CHECK(normal_form(f * gi, g).is_zero());
      for (const auto& t : nf.terms()) {
        for (const auto& l : g.leading_monomials()) CHECK_FALSE(l.divides(t.mono));
      }
    }
  }
}

TEST_CASE("standard monomial count matches brute-force linear algebra") {
  struct Case {
    std::vector<std::string> vars;
    std::vector<std::string> ideal;
  };
  const std::vector<Case> cases{{{"x"}, {"x^2"}},
                                {{"x", "y"}, {"x^2", "x*y", "y^2"}},
                                {kR3Vars, kR3Ideal},
                                {{"x", "y", "z"}, {"x^2 - y*z", "y^2", "z^2"}},
                                {{"x", "y", "z"}, {"x^2", "y^3", "z^2", "x*y*z"}},
                                {{"x", "y"}, {"x^3 - y^3", "x*y"}}};
  for (const auto& c : cases) {
    const auto gens = polys(c.vars, c.ideal);
    const auto g = buchberger(gens);
    const auto sm = standard_monomials(g, 20);
    std::uint32_t top = 0;
    for (const auto& m : sm) top = std::max(top, m.degree());
    std::vector<oracle::Poly> og;
    for (const auto& p : gens) og.push_back(to_oracle(p));
    CHECK(oracle::truncated_quotient_dim(c.vars.size(), og, top + 1, 101) == sm.size());
  }
}
