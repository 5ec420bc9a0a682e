#pragma once

#include "curvlab/module.hpp"

namespace fx {

inline curvlab::AlgebraPtr r1() { return curvlab::build_algebra(101, {"x"}, {"x^2"}); }
inline curvlab::AlgebraPtr r2() { return curvlab::build_algebra(101, {"x", "y"}, {"x^2", "x*y", "y^2"}); }
inline curvlab::AlgebraPtr r3() {
  return curvlab::build_algebra(101, {"a", "b", "c"}, {"a^2", "b*c", "c^2", "b^2 - a*c"});
}
inline curvlab::AlgebraPtr r4() { return curvlab::build_algebra(101, {"x", "y"}, {"y^2"}); }

inline curvlab::ModuleRep cyclic(const curvlab::AlgebraPtr& a, std::vector<std::string> gens) {
  return curvlab::cyclic_module(a, gens);
}

}  // namespace fx
