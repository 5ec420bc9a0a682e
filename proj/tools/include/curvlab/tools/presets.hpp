#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "curvlab/ring_file.hpp"

namespace curvlab::tools {

struct PresetParams {
  unsigned h = 2;
  std::uint32_t characteristic = 101;
};

struct PresetFile {
  std::string filename;
  std::string contents;
};

/// A = k[y_0..y_h]/J with J generated by y_0^2, y_i y_j - y_0 y_{i+j} (i + j <= h)
/// and y_i y_j (i + j > h), 1 <= i <= j. This is the monomial curve
/// k[t^{h+1}, ..., t^{2h+1}] cut by the square of its lowest generator;
/// length 2h + 2. Variables are named a, b, c, ...
RingSpec ex1_ring(unsigned h, std::uint32_t characteristic = 101);
RingSpec msquare_ring(std::uint32_t characteristic = 101);      // k[x,y]/(x^2, xy, y^2)
RingSpec hypersurface_ring(std::uint32_t characteristic = 101); // k[x]/(x^2)
RingSpec modx_ring(std::uint32_t characteristic = 101);         // k[x,y]/(y^2)

std::vector<PresetFile> preset_files(const std::string& name, const PresetParams& params);
std::vector<std::string> preset_names();

}  // namespace curvlab::tools
