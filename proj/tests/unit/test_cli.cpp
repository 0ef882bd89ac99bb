#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fpure/cli.hpp"
#include "fpure/groebner.hpp"
#include "json.hpp"

using namespace fpure;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("fpure-test-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

const std::vector<std::string> kCone = {"fpt", "-p", "3", "-v", "x,y,z,w", "-i",
                                        "x^2-w^2*(y^2+z^2)", "--emax", "2", "--json"};

}  // namespace

TEST_CASE("fnv1a64 reference values") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
}

TEST_CASE("theta on the cone polynomial") {
  Run r = run({"theta", "-p", "3", "-v", "x,y,z,w", "-i", "x^2-w^2*(y^2+z^2)", "-e", "2"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("theta=6") != std::string::npos);
  CHECK(r.out.find("theta=24") != std::string::npos);
}

TEST_CASE("fpt json report") {
  Run r = run(kCone);
  REQUIRE(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["reports"].size() == 2);
  CHECK(j["reports"][0]["theta"] == 6);
  CHECK(j["reports"][1]["theta"] == 24);
}

TEST_CASE("exit codes") {
  CHECK(run({"fpt", "-p", "5", "-v", "x,y,z", "-i", "x^3+y^3+z^3"}).code == kExitSentinel);
  CHECK(run({"theta", "-p", "3", "-v", "x", "-i", "x+"}).code == kExitInput);
  CHECK(run({"theta", "-p", "4", "-v", "x", "-i", "x"}).code == kExitInput);
  CHECK(run({"theta", "-p", "3", "-v", "x", "-i", "x", "-e", "0"}).code == kExitInput);
  CHECK(run({"frobnicate"}).code == kExitInput);
  std::uint64_t before = pair_budget();
  Run b = run({"fedder", "-p", "7", "-v", "x,y,z", "-i", "x^3+y*z", "-i", "y^3-x*z", "-i",
               "z^3+x*y^2", "--budget", "1"});
  CHECK(b.code == kExitBudget);
  CHECK(pair_budget() == before);
}

TEST_CASE("errors are json on stderr with --json") {
  Run r = run({"theta", "-p", "3", "-v", "x", "-i", "x+", "--json"});
  CHECK(r.code == kExitInput);
  CHECK(r.out.empty());
  auto j = nlohmann::json::parse(r.err);
  CHECK(j["exit"] == 2);
  CHECK(j["error"]["kind"] == "parse");
  Run n = run({"fpt", "-p", "5", "-v", "x,y,z", "-i", "x^3+y^3+z^3", "--json"});
  CHECK(nlohmann::json::parse(n.err)["error"]["kind"] == "not_fpure");
}

TEST_CASE("input files with explicit flags taking precedence") {
  TempDir dir;
  fs::path file = dir.path / "job.txt";
  std::ofstream(file) << "# cone\np = 3\nvars = x,y,z,w\ngens = \"x^2-w^2*(y^2+z^2)\"\ne = 1\n";
  Run r = run({"theta", "--file", file.string()});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("theta=6") != std::string::npos);
  Run o = run({"theta", "--file", file.string(), "-e", "2"});
  CHECK(o.out.find("theta=24") != std::string::npos);
  std::ofstream(dir.path / "bad.txt") << "p = three\n";
  CHECK(run({"theta", "--file", (dir.path / "bad.txt").string()}).code == kExitInput);
}

TEST_CASE("cache replays byte for byte and recovers from corruption") {
  TempDir dir;
  std::vector<std::string> args = kCone;
  args.push_back("--cache-dir");
  args.push_back(dir.path.string());
  Run first = run(args);
  REQUIRE(first.code == kExitOk);
  std::vector<fs::path> entries;
  for (const auto& e : fs::directory_iterator(dir.path)) entries.push_back(e.path());
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].extension() == ".json");

  Run second = run(args);
  CHECK(second.code == first.code);
  CHECK(second.out == first.out);
  CHECK(second.err == first.err);

  std::ofstream(entries[0], std::ios::trunc) << "{not json";
  Run third = run(args);
  CHECK(third.code == kExitOk);
  CHECK(third.out == first.out);
  CHECK(third.err.find("corrupted") != std::string::npos);
  Run fourth = run(args);
  CHECK(fourth.err == first.err);

  std::vector<std::string> other = args;
  other[8] = "1";
  run(other);
  std::size_t count = 0;
  for (const auto& e : fs::directory_iterator(dir.path)) count += e.path().extension() == ".json";
  CHECK(count == 2);
}

TEST_CASE("check suites run from the command line") {
  Run r = run({"check", "--suite", "main-formula", "--json"});
  CHECK(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.is_object());
}
