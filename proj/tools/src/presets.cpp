#include "curvlab/tools/presets.hpp"

#include "curvlab/error.hpp"

namespace curvlab::tools {

namespace {

std::string var_name(unsigned i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "y" + std::to_string(i);
}

ModuleSpec cyclic(std::vector<std::string> ideal) {
  ModuleSpec m;
  m.kind = "cyclic";
  m.ideal = std::move(ideal);
  return m;
}

}  // namespace

RingSpec ex1_ring(unsigned h, std::uint32_t characteristic) {
  if (h < 2) throw Error(Errc::kInvalidArgument, "ex1 needs h >= 2");
  RingSpec spec;
  spec.characteristic = characteristic;
  for (unsigned i = 0; i <= h; ++i) spec.vars.push_back(var_name(i));
  const auto& y = spec.vars;
  spec.ideal.push_back(y[0] + "^2");
  for (unsigned i = 1; i <= h; ++i) {
    for (unsigned j = i; j <= h; ++j) {
      const std::string prod = i == j ? y[i] + "^2" : y[i] + "*" + y[j];
      if (i + j <= h) {
        spec.ideal.push_back(prod + " - " + y[0] + "*" + y[i + j]);
      } else {
        spec.ideal.push_back(prod);
      }
    }
  }
  return spec;
}

RingSpec msquare_ring(std::uint32_t characteristic) {
  return {characteristic, {"x", "y"}, "grevlex", {"x^2", "x*y", "y^2"}};
}

RingSpec hypersurface_ring(std::uint32_t characteristic) {
  return {characteristic, {"x"}, "grevlex", {"x^2"}};
}

RingSpec modx_ring(std::uint32_t characteristic) {
  return {characteristic, {"x", "y"}, "grevlex", {"y^2"}};
}

std::vector<std::string> preset_names() { return {"ex1", "msquare", "hypersurface", "modx"}; }

std::vector<PresetFile> preset_files(const std::string& name, const PresetParams& p) {
  if (name == "ex1") {
    const RingSpec ring = ex1_ring(p.h, p.characteristic);
    const std::string stem = p.h == 2 ? "" : "ex1-h" + std::to_string(p.h) + "-";
    const std::string ring_file = p.h == 2 ? "r3.toml" : "ex1-h" + std::to_string(p.h) + ".toml";
    return {{ring_file, format_ring_spec(ring)},
            {stem + "mod-a.toml", format_module_spec(cyclic({ring.vars[0]}))},
            {stem + "mod-bc.toml", format_module_spec(cyclic({ring.vars[1], ring.vars[2]}))}};
  }
  if (name == "msquare") return {{"r2.toml", format_ring_spec(msquare_ring(p.characteristic))}};
  if (name == "hypersurface") return {{"r1.toml", format_ring_spec(hypersurface_ring(p.characteristic))}};
  if (name == "modx") return {{"r4.toml", format_ring_spec(modx_ring(p.characteristic))}};
  throw Error(Errc::kUnknownPreset, "unknown preset '" + name + "' (ex1, msquare, hypersurface, modx)");
}

}  // namespace curvlab::tools
