#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "curvlab/error.hpp"
#include "curvlab/ring_file.hpp"
#include "curvlab/tools/cli.hpp"
#include "curvlab/tools/presets.hpp"
#include "doctest.h"

using namespace curvlab;
namespace fs = std::filesystem;

namespace {

Errc parse_code(std::string_view text) {
  try {
    parse_ring_spec(text);
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::kInvalidArgument;
}

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("curvlab-test-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "curvlab");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = tools::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("ring files parse") {
  auto s = parse_ring_spec(R"(# comment
[ring]
char = 7
vars = ["x", "y"]
ideal = [
  "x^2",  # trailing comment
  "y^2",
]
)");
  CHECK(s.characteristic == 7);
  CHECK(s.vars == std::vector<std::string>{"x", "y"});
  CHECK(s.order == "grevlex");
  CHECK(s.ideal.size() == 2);
  CHECK(parse_ring_spec(format_ring_spec(s)).ideal == s.ideal);

  auto m = parse_module_spec("[module]\nkind = \"cokernel\"\nmatrix = [[\"x\", \"0\"], [\"y\", \"x\"]]\n");
  CHECK(m.kind == "cokernel");
  CHECK(m.matrix.size() == 2);
  CHECK(parse_module_spec(format_module_spec(m)).matrix == m.matrix);
}

TEST_CASE("ring files are strict") {
  CHECK(parse_code("[ring]\nvars = [\"x\"]\nideal = [\"x^2\"]\ncolour = 3\n") == Errc::kParse);
  CHECK(parse_code("[ring]\nvars = [\"x\"]\nvars = [\"x\"]\nideal = [\"x^2\"]\n") == Errc::kParse);
  CHECK(parse_code("[ring]\nideal = [\"x^2\"]\n") == Errc::kParse);
  CHECK(parse_code("vars = [\"x\"]\nideal = [\"x^2\"]\n") == Errc::kParse);
  CHECK(parse_code("[ring]\nvars = [\"x\"\nideal = [\"x^2\"]\n") == Errc::kParse);
  CHECK_THROWS_AS(parse_module_spec("[module]\nkind = \"weird\"\nideal = []\n"), Error);
}

TEST_CASE("presets") {
  auto names = tools::preset_names();
  CHECK(names.size() >= 4);
  auto files = tools::preset_files("ex1", {});
  REQUIRE(files.size() == 3);
  CHECK(files[0].filename == "r3.toml");
  auto a = build_ring(parse_ring_spec(files[0].contents));
  CHECK(a->length() == 6);
  auto h3 = build_ring(tools::ex1_ring(3));
  CHECK(h3->length() == 8);
  CHECK_THROWS_AS(tools::preset_files("nope", {}), Error);
}

TEST_CASE("command line runs and exit codes") {
  TempDir tmp;
  auto dir = tmp.path.string();
  CHECK(cli({"preset", "ex1", "--dir", dir}).code == 0);
  CHECK(cli({"preset", "modx", "--dir", dir}).code == 0);
  CHECK(cli({"preset", "hypersurface", "--dir", dir}).code == 0);
  const auto r3 = dir + "/r3.toml", ma = dir + "/mod-a.toml", mbc = dir + "/mod-bc.toml";

  auto ring = cli({"ring", r3});
  CHECK(ring.code == 0);
  CHECK(ring.out.find("embdim") != std::string::npos);

  auto first = cli({"audit", "first", r3, "--module", ma});
  CHECK(first.code == 0);
  CHECK(first.out.find("PASS") != std::string::npos);

  auto j1 = cli({"audit", "first", r3, "--module", ma, "--json"});
  auto j2 = cli({"audit", "first", r3, "--module", ma, "--json"});
  CHECK(j1.out == j2.out);

  auto third = cli({"audit", "third", r3, "--module", mbc, "--steps", "10"});
  CHECK(third.code == 0);
  CHECK(third.out.find("2 > 1") != std::string::npos);

  CHECK(cli({"audit", "modx", dir + "/r4.toml", "--x", "x"}).code == 0);
  CHECK(cli({"audit", "modx", dir + "/r4.toml", "--x", "y"}).code == 2);
  CHECK(cli({"audit", "first", dir + "/r1.toml"}).code == 0);

  CHECK(cli({"curv", r3, "--steps", "4", "--window", "4"}).code == 2);
  CHECK(cli({"ring", dir + "/missing.toml"}).code == 2);
  CHECK(cli({"bogus"}).code == 2);
  CHECK(cli({"resolve", r3, "--steps", "30", "--budget", "10"}).code == 3);

  {
    std::ofstream bad(dir + "/bad.toml");
    bad << "[ring]\nvars = [\"x\"]\nideal = [\"x^2\"]\nextra = 1\n";
  }
  auto bad = cli({"ring", dir + "/bad.toml"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("error:") == 0);
}
