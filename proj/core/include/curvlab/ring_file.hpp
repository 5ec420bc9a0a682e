#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "curvlab/module.hpp"

namespace curvlab {

// Description files use a small TOML subset: one table, `key = value` lines,
// integers, double-quoted strings and (possibly nested, multi-line) arrays.
// Unknown keys, duplicate keys and missing required keys are parse errors.

struct RingSpec {
  std::uint32_t characteristic = 101;
  std::vector<std::string> vars;
  std::string order = "grevlex";
  std::vector<std::string> ideal;
};

struct ModuleSpec {
  std::string kind = "cyclic";  // "cyclic" or "cokernel"
  std::vector<std::string> ideal;
  /// Rows are indexed by generators, columns by relations.
  std::vector<std::vector<std::string>> matrix;
};

RingSpec parse_ring_spec(std::string_view text);
ModuleSpec parse_module_spec(std::string_view text);
RingSpec read_ring_file(const std::filesystem::path& path);
ModuleSpec read_module_file(const std::filesystem::path& path);

std::string format_ring_spec(const RingSpec& spec);
std::string format_module_spec(const ModuleSpec& spec);
void write_text_file(const std::filesystem::path& path, const std::string& text);

AlgebraPtr build_ring(const RingSpec& spec);
ModuleRep build_module(AlgebraPtr a, const ModuleSpec& spec);

}  // namespace curvlab
