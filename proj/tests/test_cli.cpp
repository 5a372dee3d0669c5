#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "gaf/cli.hpp"
#include "gaf/gaf_io.hpp"
#include "json.hpp"
#include "support.hpp"

using namespace gaf;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("gaf_cli_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("validate and invariants on the tripod of tori") {
  const auto d0 = write_temp("d0.gaf", print_gaf(gaf::testing::delta0()));
  auto r = run({"validate", d0});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == "valid\n");

  r = run({"invariants", d0, "--json"});
  REQUIRE(r.code == cli::kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["chi"] == -3);
  CHECK(j["betti"] == nlohmann::json::array({1, 6, 2}));
  CHECK(j["torsion"].empty());
  CHECK(j["automorphisms"] == "6");

  r = run({"present", d0});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.rfind("< w1.a1, w1.b1", 0) == 0);
}

TEST_CASE("validate reports violations with exit 1") {
  auto thin = gaf::testing::delta0();
  thin.edges.pop_back();
  thin.chambers.pop_back();
  const auto path = write_temp("thin.gaf", print_gaf(thin));
  auto r = run({"validate", path});
  CHECK(r.code == cli::kExitNo);
  CHECK(r.out.find("axis-degree") != std::string::npos);
  r = run({"validate", path, "--json"});
  CHECK(r.code == cli::kExitNo);
  CHECK(nlohmann::json::parse(r.out)["valid"] == false);
  // Commands that need a valid diagram refuse it as an input error.
  r = run({"canon", path});
  CHECK(r.code == cli::kExitError);
  CHECK(r.out.empty());
}

TEST_CASE("iso exit codes and witness") {
  const auto a = write_temp("a.gaf", print_gaf(gaf::testing::delta0()));
  const auto b = write_temp("b.gaf", print_gaf(gaf::testing::relabel(gaf::testing::delta0(), 3)));
  const auto c = write_temp("c.gaf", print_gaf(gaf::testing::nonorientable_tripod()));
  auto r = run({"iso", a, b, "--witness"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("axis v -> ") != std::string::npos);
  CHECK(run({"iso", a, c}).code == cli::kExitNo);
}

TEST_CASE("enum and random") {
  auto r = run({"enum", "--axes", "1", "--chambers", "3", "--max-rank", "3", "--orientable-only"});
  CHECK(r.code == cli::kExitOk);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1);
  r = run({"enum", "--axes", "1", "--chambers", "3", "--max-rank", "3"});
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 10);

  r = run({"random", "--seed", "9", "--axes", "2", "--chambers", "4", "--max-rank", "3"});
  CHECK(r.code == cli::kExitOk);
  CHECK(validate(parse_gaf(r.out)).valid);
  CHECK(run({"random", "--seed", "9", "--axes", "2", "--chambers", "4", "--max-rank", "3"}).out == r.out);
  CHECK(run({"random", "--seed", "9", "--axes", "9", "--chambers", "3", "--max-rank", "2"}).code == cli::kExitError);
}

TEST_CASE("cover output") {
  const auto d0 = write_temp("d0c.gaf", print_gaf(gaf::testing::delta0()));
  auto r = run({"cover", d0, "--root", "v", "--depth", "3", "--fanout", "2"});
  CHECK(r.code == cli::kExitOk);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 7);
  r = run({"cover", d0, "--root", "v", "--depth", "2", "--fanout", "1", "--dot"});
  CHECK(r.out.rfind("graph cover", 0) == 0);
  CHECK(run({"cover", d0, "--root", "nope", "--depth", "2", "--fanout", "1"}).code == cli::kExitError);
}

TEST_CASE("errors exit 2 with nothing on stdout") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"bogus"},
           {"validate"},
           {"validate", "/nonexistent/file.gaf"},
           {"enum", "--axes", "x"},
       }) {
    const auto r = run(args);
    CHECK(r.code == cli::kExitError);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
  }
  const auto bad = write_temp("bad.gaf", "axis v\nedge v w1\n");
  const auto r = run({"validate", bad});
  CHECK(r.code == cli::kExitError);
  CHECK(r.err.find("parse error: ") == 0);
  CHECK(r.err.find(":2:") != std::string::npos);
}
