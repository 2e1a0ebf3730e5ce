#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "wpvol/serialize.hpp"

using namespace wpvol;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "wpvol");
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("wpvol_test_" + name);
}

}  // namespace

TEST_CASE("volume prints exact polynomials") {
  const Result r = run({"volume", "1", "1"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == "π²/6 + L²/24\n");
  CHECK(run({"volume", "1", "1", "--internal-convention"}).out == "π²/12 + L²/48\n");
  CHECK(run({"volume", "0", "4"}).out == "2π² + L₁²/2 + L₂²/2 + L₃²/2 + L₄²/2\n");
  CHECK(run({"volume", "1", "1", "--format", "latex"}).out == "\\frac{1}{6}\\pi^{2} + \\frac{1}{24}L^{2}\n");
}

TEST_CASE("volume JSON and evaluation") {
  const Result j = run({"volume", "0", "4", "--format", "json"});
  REQUIRE(j.code == cli::kExitOk);
  const Json parsed = Json::parse(j.out);
  CHECK(parsed["g"] == 0);
  CHECK(parsed["n"] == 4);
  CHECK(parsed["terms"].size() == 5);

  const Result e = run({"volume", "1", "1", "--eval", "2"});
  REQUIRE(e.code == cli::kExitOk);
  CHECK(e.out.rfind("π²/6 + 1/6\n", 0) == 0);
  const Result ej = run({"volume", "1", "1", "--eval", "1/2", "--format", "json"});
  CHECK(Json::parse(ej.out)["text"] == "π²/6 + 1/96");
}

TEST_CASE("volume input errors exit with 2") {
  CHECK(run({"volume", "0", "2"}).code == cli::kExitUsage);
  const Result closed = run({"volume", "2", "0"});
  CHECK(closed.code == cli::kExitUsage);
  CHECK(closed.err.find("compact") != std::string::npos);
  CHECK(run({"volume", "0", "4", "--eval", "1,2"}).code == cli::kExitUsage);
  CHECK(run({"volume", "1", "1", "--eval", "-1"}).code == cli::kExitUsage);
  CHECK(run({"volume", "1", "1", "--eval", "x"}).code == cli::kExitUsage);
  CHECK(run({"volume", "1"}).code == cli::kExitUsage);
  CHECK(run({"volume", "1", "1", "--format", "xml"}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"--help"}).code == cli::kExitOk);
}

TEST_CASE("intersect") {
  const Result r = run({"intersect", "2", "4"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("= 1/1152") != std::string::npos);
  const Result k = run({"intersect", "0", "0,0,0,0,0", "--kappa", "2", "--format", "json"});
  REQUIRE(k.code == cli::kExitOk);
  const Json j = Json::parse(k.out);
  CHECK(j["kappa_normalized"] == "5");
  CHECK(j["omega_normalized"][0]["pi_power"] == 2);
  CHECK(j["omega_normalized"][0]["coeff"] == "20");
  const Result zero = run({"intersect", "1", "2"});
  CHECK(zero.code == cli::kExitOk);
  CHECK(zero.out.find("= 0") != std::string::npos);
  CHECK(zero.err.find("note") != std::string::npos);
  CHECK(run({"intersect", "1", "1,x"}).code == cli::kExitUsage);
  CHECK(run({"intersect", "1", "-1"}).code == cli::kExitUsage);
}

TEST_CASE("verify emits JSON lines and a summary") {
  const Result r = run({"verify", "dilaton", "--max-dim", "3"});
  CHECK(r.code == cli::kExitOk);
  std::istringstream lines(r.out);
  std::string line;
  std::size_t count = 0;
  Json last;
  while (std::getline(lines, line)) {
    last = Json::parse(line);
    ++count;
  }
  CHECK(count > 1);
  CHECK(last["pass"] == true);
  CHECK(last["summary"]["dilaton"]["failed"] == 0);

  const Result quiet = run({"verify", "all", "--max-dim", "4", "--failures-only"});
  CHECK(quiet.code == cli::kExitOk);
  const Json summary = Json::parse(quiet.out);
  CHECK(summary["summary"].size() == 6);
  CHECK(run({"verify", "nonsense"}).code == cli::kExitUsage);
}

TEST_CASE("verify exits 1 when a cached table is wrong") {
  // A cache whose V_{0,5} passes the structural checks but is scaled by 2.
  VolumeTable t;
  build_up_to(t, 2);
  Json j = cache_to_json(t);
  for (Json& term : j["entries"]["0,5"]["terms"]) {
    term["coeff"] = (rat_from_json(term["coeff"]) * Rat(2)).str();
  }
  const auto path = temp_path("bad_cache.json");
  std::ofstream(path) << j.dump();
  const Result r = run({"--cache", path.string(), "verify", "string", "--max-dim", "2", "--failures-only"});
  CHECK(r.code == cli::kExitVerifyFailed);
  std::filesystem::remove(path);
}

TEST_CASE("compact") {
  CHECK(run({"compact", "2"}).out == "43π⁶/2160\n");
  CHECK(run({"compact", "3", "--format", "latex"}).out == "\\frac{176557}{1209600}\\pi^{12}\n");
  CHECK(run({"compact", "1"}).code == cli::kExitUsage);
}

TEST_CASE("table export and cache reuse") {
  const auto out = temp_path("table.json");
  const auto cache = temp_path("cache.json");
  std::filesystem::remove(cache);
  CHECK(run({"table", "--max-dim", "3", "--out", out.string()}).code == cli::kExitOk);
  std::ifstream in(out);
  const Json exported = Json::parse(in);
  CHECK(exported["entries"].size() == signatures_up_to(3).size());

  const Result first = run({"--cache", cache.string(), "--threads", "2", "volume", "2", "1"});
  CHECK(first.code == cli::kExitOk);
  CHECK(std::filesystem::exists(cache));
  const Result second = run({"--cache", cache.string(), "volume", "2", "1"});
  CHECK(second.out == first.out);
  CHECK(second.err.find("loaded") != std::string::npos);
  CHECK(second.err.find("saved") == std::string::npos);

  std::ofstream(cache) << "{not json";
  CHECK(run({"--cache", cache.string(), "volume", "1", "1"}).code == cli::kExitUsage);
  std::filesystem::remove(cache);
  std::filesystem::remove(out);
}

TEST_CASE("diag-zograf prints ratios without a verdict") {
  const Result r = run({"diag-zograf", "--gmax", "2"});
  CHECK(r.code == cli::kExitOk);
  std::istringstream lines(r.out);
  std::string line;
  while (std::getline(lines, line)) {
    const Json j = Json::parse(line);
    CHECK(j["ratio"].get<double>() > 0.0);
    CHECK_FALSE(j.contains("pass"));
  }
}
