#include <functional>

#include "curvlab/algebra.hpp"
#include "curvlab/error.hpp"
#include "curvlab/ring_file.hpp"
#include "curvlab/tools/presets.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace curvlab;

namespace {

AlgebraPtr ring(const std::vector<std::string>& vars, const std::vector<std::string>& ideal) {
  return build_algebra(101, vars, ideal);
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::kParse;
}

}  // namespace

TEST_CASE("build_algebra examples") {
  auto r1 = ring({"x"}, {"x^2"});
  CHECK(r1->length() == 2);
  CHECK(r1->krull_dim() == 0);
  CHECK(multiplicity(*r1) == 2);
  CHECK(r1->embedding_dim() == 1);

  auto r2 = ring({"x", "y"}, {"x^2", "x*y", "y^2"});
  CHECK(r2->length() == 3);
  CHECK(multiplicity(*r2) == 3);
  CHECK(r2->embedding_dim() == 2);

  auto r3 = ring({"a", "b", "c"}, {"a^2", "b*c", "c^2", "b^2 - a*c"});
  CHECK(r3->length() == 6);
  CHECK(r3->krull_dim() == 0);
  CHECK(multiplicity(*r3) == 6);
  CHECK(r3->embedding_dim() == 3);
  CHECK(r3->hilbert_function(4).values == std::vector<std::size_t>{1, 3, 2, 0, 0});
}

TEST_CASE("presentation errors") {
  CHECK(code_of([] { ring({"x", "y"}, {"x - y^2"}); }) == Errc::kNotInMSquared);
  CHECK(code_of([] { ring({"x"}, {"1 + x^2"}); }) == Errc::kNotInMSquared);
  CHECK(code_of([] { build_algebra(100, {"x"}, {"x^2"}); }) == Errc::kInvalidArgument);
  CHECK(code_of([] { multiplicity(*ring({"x", "y", "z"}, {"x*y"})); }) == Errc::kUnsupportedDimension);
}

TEST_CASE("multiplicity in dimension one") {
  auto r4 = ring({"x", "y"}, {"y^2"});
  CHECK(r4->krull_dim() == 1);
  CHECK(multiplicity(*r4) == 2);
  auto hf = r4->hilbert_function(6);
  CHECK(hf.stabilized);
  CHECK(hf.values.back() == 2);
}

TEST_CASE("complete intersection detection") {
  CHECK(is_complete_intersection(*ring({"x"}, {"x^2"})));
  CHECK_FALSE(is_complete_intersection(*ring({"x", "y"}, {"x^2", "x*y", "y^2"})));
  CHECK_FALSE(is_complete_intersection(*ring({"a", "b", "c"}, {"a^2", "b*c", "c^2", "b^2 - a*c"})));
  CHECK(minimal_generator_count(*ring({"a", "b", "c"}, {"a^2", "b*c", "c^2", "b^2 - a*c"})) == 4);
  // redundant generators do not count
  CHECK(is_complete_intersection(*ring({"x", "y"}, {"x^2", "y^2", "x^2 + y^2", "x^3"})));
  CHECK(is_complete_intersection(*ring({"x", "y"}, {"y^2"})));
}

TEST_CASE("powers of variables are complete intersections") {
  const std::vector<std::string> names{"x", "y", "z"};
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::uint32_t code = 0; code < 27; ++code) {
      std::vector<std::string> vars, ideal;
      std::uint32_t c = code;
      bool skip = false;
      for (std::size_t i = 0; i < n; ++i) {
        const std::uint32_t e = 2 + c % 3;
        c /= 3;
        if (e > 3) skip = true;
        vars.push_back(names[i]);
        ideal.push_back(names[i] + "^" + std::to_string(e));
      }
      if (skip) continue;
      auto a = ring(vars, ideal);
      CHECK(is_complete_intersection(*a));
    }
  }
}

TEST_CASE("multiplication table agrees with normal forms and is associative") {
  for (const auto& spec : {tools::ex1_ring(2), tools::ex1_ring(3), tools::msquare_ring(),
                           RingSpec{101, {"x", "y", "z"}, "grevlex", {"x^2 - y*z", "y^2", "z^2"}}}) {
    auto a = build_ring(spec);
    const std::size_t L = a->length();
    for (std::size_t v = 0; v < a->nvars(); ++v) {
      for (std::size_t j = 0; j < L; ++j) {
        Monomial xv = Monomial::variable(a->nvars(), v);
        const Polynomial prod = Polynomial::monomial(xv * a->basis()[j], 1, a->field(), a->order());
        CHECK(a->action(v).column(j) == a->coordinates(prod));
      }
    }
    for (std::size_t v = 0; v < a->nvars(); ++v) {
      for (std::size_t w = 0; w < a->nvars(); ++w) {
        CHECK(a->action(v) * a->action(w) == a->action(w) * a->action(v));
      }
    }
  }
}

TEST_CASE("semigroup model of the ex1 family") {
  for (unsigned h = 2; h <= 5; ++h) {
    auto a = build_ring(tools::ex1_ring(h));
    const auto expected = oracle::semigroup_basis(h);
    REQUIRE(a->length() == expected.size());
    CHECK(a->length() == 2 * h + 2);
    CHECK(multiplicity(*a) == 2 * h + 2);
    CHECK_FALSE(is_complete_intersection(*a));
    // variable y_i is t^{h+1+i}; a basis monomial maps to the sum of its exponents
    std::vector<std::uint32_t> weight(a->length());
    std::map<std::uint32_t, std::size_t> by_weight;
    for (std::size_t i = 0; i < a->length(); ++i) {
      std::uint32_t w = 0;
      for (std::size_t v = 0; v < a->nvars(); ++v) w += a->basis()[i].exp[v] * (h + 1 + static_cast<std::uint32_t>(v));
      weight[i] = w;
      by_weight[w] = i;
    }
    std::set<std::uint32_t> got(weight.begin(), weight.end());
    CHECK(got == expected);
    for (std::size_t i = 0; i < a->length(); ++i) {
      for (std::size_t j = 0; j < a->length(); ++j) {
        const SparseVec& p = a->product(i, j);
        const std::uint32_t s = weight[i] + weight[j];
        if (expected.count(s)) {
          REQUIRE(p.nnz() == 1);
          CHECK(p.index[0] == by_weight.at(s));
          CHECK(p.value[0] == 1);
        } else {
          CHECK(p.nnz() == 0);
        }
      }
    }
  }
}

TEST_CASE("regular linear forms") {
  auto r4 = ring({"x", "y"}, {"y^2"});
  CHECK(is_regular_up_to(*r4, r4->parse("x"), 8));
  CHECK_FALSE(is_regular_up_to(*r4, r4->parse("y"), 8));
  auto x = find_linear_regular_element(*r4, default_degree_bound(*r4), 20, 0);
  REQUIRE(x);
  CHECK(is_regular_up_to(*r4, *x, default_degree_bound(*r4)));

  auto cross = ring({"x", "y"}, {"x*y"});
  CHECK_FALSE(is_regular_up_to(*cross, cross->parse("x"), 6));
  CHECK_FALSE(is_regular_up_to(*cross, cross->parse("y"), 6));
  CHECK(is_regular_up_to(*cross, cross->parse("x + y"), 6));
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto f = find_linear_regular_element(*cross, 6, 20, seed);
    REQUIRE(f);
    CHECK(f->terms().size() == 2);
  }

  CHECK(code_of([] {
          auto r2 = ring({"x", "y"}, {"x^2", "x*y", "y^2"});
          find_linear_regular_element(*r2, 4, 5);
        }) == Errc::kZeroDimensional);
}

TEST_CASE("quotient by a linear form") {
  auto r4 = ring({"x", "y"}, {"y^2"});
  auto b = quotient_by_linear_form(*r4, r4->parse("x"));
  CHECK(b->krull_dim() == 0);
  CHECK(b->length() == 2);
  CHECK(b->length() == multiplicity(*r4));

  auto r1 = ring({"x"}, {"x^2"});
  CHECK(quotient_by_linear_form(*r1, r1->parse("x"))->length() == 1);

  auto r3 = ring({"a", "b", "c"}, {"a^2", "b*c", "c^2", "b^2 - a*c"});
  auto q = quotient_by_linear_form(*r3, r3->parse("a"));
  CHECK(q->length() == 3);

  // Hilbert function of the quotient is the first difference
  auto cross = ring({"x", "y"}, {"x*y"});
  const auto f = cross->parse("x + y");
  auto bq = quotient_by_linear_form(*cross, f);
  const auto ha = cross->hilbert_function(6).values;
  const auto hb = bq->hilbert_function(6).values;
  auto at = [](const std::vector<std::size_t>& v, std::size_t t) -> std::size_t { return t < v.size() ? v[t] : 0; };
  for (std::size_t t = 0; t < 6; ++t) CHECK(at(hb, t) == at(ha, t) - (t ? at(ha, t - 1) : 0));
}
