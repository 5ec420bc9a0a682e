#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace curvlab::tools {

struct JobConfig {
  std::string command;   // ring, resolve, betti, curv, tor, ext, injcurv, audit, preset
  std::string audit;     // first, second-tor, second-ext, third, modx, invariants
  std::string ring_file;
  std::string module_file;
  std::string module2_file;
  std::size_t steps = 12;
  bool steps_given = false;
  std::size_t window = 4;
  std::uint64_t seed = 0;
  std::size_t budget = 200000;
  bool json = false;
  std::size_t i0 = 0;
  std::string x;
  std::string reference;
  std::size_t count = 50;
  std::string preset;
  unsigned h = 2;
  std::uint32_t characteristic = 101;
  std::string dir = ".";
};

/// Exit codes: 0 success (including PASS, VACUOUS, SETUP_VIOLATION, FINITE_PD),
/// 1 a check failed, 2 usage/parse/precondition errors, 3 budget or guard exceeded.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int execute(const JobConfig& job, std::ostream& out);

}  // namespace curvlab::tools
