#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "isodouble/io.hpp"

using namespace isodouble;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args, int expected_code) {
  args.push_back("--format");
  args.push_back("json");
  const auto r = run(args);
  REQUIRE(r.code == expected_code);
  return Json::parse(r.out);
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("isodouble_cli_" + std::to_string(std::random_device{}()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("clifford build prints l and q") {
  auto j = run_json({"clifford", "build", "--m", "4", "--plus", "2", "--minus", "0"}, 0);
  CHECK(j["result"]["l"] == 8);
  CHECK(j["result"]["q"] == 2);
  CHECK(j["result"]["trace_index"] == 2);
  CHECK(j["result"]["parity_ok"] == true);
  CHECK(j["result"].contains("system"));
  CHECK(j["config"]["parameters"]["m"] == 4);
  CHECK(j["config"]["seed"] == 42);

  j = run_json({"clifford", "build", "--m", "4", "--plus", "1", "--minus", "1"}, 0);
  CHECK(j["result"]["q"] == 0);

  const auto h = run({"clifford", "build", "--m", "4", "--plus", "2", "--minus", "0"});
  CHECK(h.code == 0);
  CHECK(h.out.rfind("l=8 q=2", 0) == 0);
}

TEST_CASE("clifford build --out and verify") {
  TempDir dir;
  const auto path = dir.file("m4l8.json");
  auto r = run({"clifford", "build", "--m", "4", "--plus", "2", "--minus", "0", "--out", path});
  REQUIRE(r.code == 0);
  CHECK(read_clifford_system(path).q == 2);

  auto j = run_json({"clifford", "verify", path}, 0);
  CHECK(j["result"]["verification"]["pass"] == true);

  // Injected fault: zero the first nonzero entry of P_2.
  Json doc = Json::parse(slurp(path));
  auto& row = doc["matrices"][2][0];
  for (auto& v : row)
    if (v != 0) {
      v = 0;
      break;
    }
  std::ofstream(dir.file("corrupted.json")) << doc.dump();
  j = run_json({"clifford", "verify", dir.file("corrupted.json")}, 1);
  CHECK(j["result"]["verification"]["pass"] == false);

  // Wrong recorded index.
  doc = Json::parse(slurp(path));
  doc["q"] = 0;
  doc["a"] = 1;
  doc["b"] = 1;
  std::ofstream(dir.file("wrong_q.json")) << doc.dump();
  j = run_json({"clifford", "verify", dir.file("wrong_q.json")}, 1);
  CHECK(j["result"]["verification"]["pass"] == false);
}

TEST_CASE("malformed input files never crash") {
  TempDir dir;
  const auto path = dir.file("sys.json");
  REQUIRE(run({"clifford", "build", "--m", "4", "--plus", "1", "--minus", "1", "--out", path}).code == 0);
  const std::string good = slurp(path);
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<std::size_t> pos(0, good.size() - 1);
  std::uniform_int_distribution<int> byte(0, 255);
  for (int trial = 0; trial < 60; ++trial) {
    std::string bad = good;
    const int edits = 1 + trial % 4;
    for (int e = 0; e < edits; ++e) bad[pos(rng)] = static_cast<char>(byte(rng));
    if (trial % 5 == 0) bad.resize(pos(rng));
    std::ofstream(dir.file("bad.json"), std::ios::binary) << bad;
    for (const auto& cmd :
         {std::vector<std::string>{"clifford", "verify", dir.file("bad.json")},
          std::vector<std::string>{"fkm", "check", "--system", dir.file("bad.json"), "--samples", "5"},
          std::vector<std::string>{"fkm", "spectrum", "--system", dir.file("bad.json"), "--level",
                                   "0.1"}}) {
      const auto r = run(cmd);
      CHECK((r.code == 0 || r.code == 1));
    }
  }
  CHECK(run({"clifford", "verify", dir.file("does_not_exist.json")}).code == 1);
}

TEST_CASE("fkm check and spectrum") {
  TempDir dir;
  const auto path = dir.file("m4l8.json");
  REQUIRE(run({"clifford", "build", "--m", "4", "--plus", "2", "--minus", "0", "--out", path}).code == 0);
  auto j = run_json({"fkm", "check", "--system", path, "--samples", "1000"}, 0);
  CHECK(j["result"]["verification"]["pass"] == true);
  CHECK(j["result"]["verification"]["samples"] == 1000);

  j = run_json({"fkm", "spectrum", "--system", path, "--level", "0"}, 0);
  const auto& clusters = j["result"]["points"][0]["spectrum"]["clusters"];
  REQUIRE(clusters.size() == 4);
  CHECK(clusters[3]["multiplicity"] == 4);
  CHECK(clusters[2]["multiplicity"] == 3);
  CHECK(clusters[1]["multiplicity"] == 4);
  CHECK(clusters[0]["multiplicity"] == 3);

  j = run_json({"fkm", "spectrum", "--level", "1.0"}, 1);
  CHECK(j["error"]["type"] == "singular_level");
  j = run_json({"fkm", "spectrum", "--system", path, "--level", "-1"}, 1);
  CHECK(j["error"]["type"] == "singular_level");
}

TEST_CASE("fkm check on a non-admissible system fails cleanly") {
  TempDir dir;
  const auto path = dir.file("m3l4.json");
  REQUIRE(run({"clifford", "build", "--m", "3", "--plus", "1", "--minus", "0", "--out", path}).code == 0);
  auto j = run_json({"fkm", "check", "--system", path}, 1);
  CHECK(j["error"]["type"] == "domain");
}

TEST_CASE("double certify") {
  auto j = run_json({"double", "certify", "--g", "4", "--mplus", "4", "--mminus", "3", "--rbar", "0.4",
                     "--rinf", "0.02", "--kmax", "4", "--step", "1e-4"},
                    0);
  CHECK(j["result"]["certificate"]["pass"] == true);
  CHECK(j["result"]["certificate"]["min_R"].get<double>() > 0.0);

  j = run_json({"double", "certify", "--g", "4", "--mplus", "4", "--mminus", "3", "--rbar", "0.5",
                "--kmax", "0.5"},
               1);
  CHECK(j["error"]["type"] == "infeasible_geometry");
  CHECK(j["error"]["minimal_r_bar"].get<double>() > 2.0);

  TempDir dir;
  const auto csv = dir.file("curve.csv");
  REQUIRE(run({"double", "certify", "--g", "3", "--mplus", "1", "--mminus", "1", "--rbar", "0.45",
               "--rinf", "0.02", "--kmax", "4", "--step", "1e-3", "--csv", csv})
              .code == 1);  // curve residual above 1e-8 at this step
  CHECK(slurp(csv).rfind("s,r,t,theta,k\n", 0) == 0);
}

TEST_CASE("topology commands") {
  auto j = run_json({"topology", "distinguish", "--m", "4", "--l", "8", "--q1", "0", "--q2", "2"}, 0);
  CHECK(j["result"]["verdict"] == "distinct");
  j = run_json({"topology", "distinguish", "--m", "16", "--l", "128", "--q1", "0", "--q2", "2"}, 1);
  CHECK(j["result"]["verdict"] == "inapplicable");
  CHECK(j["result"]["reason"].get<std::string>().find("p = m/2+1 not prime") != std::string::npos);

  j = run_json({"topology", "table", "--g", "3"}, 0);
  CHECK(j["result"]["count"] == 4);
  CHECK(j["result"]["rows"].size() == 4);

  j = run_json({"topology", "cohomology", "--g", "4", "--mplus", "4", "--mminus", "3", "--side", "plus"}, 0);
  CHECK(j["result"]["double"]["poincare_dual"] == true);
  CHECK(j["result"]["M_plus"]["ranks"] == Json::array({1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1}));
  CHECK(j["result"]["cell_structure"] == Json::array({0, 4, 7, 11}));
  CHECK(j["result"]["ring_source"] == "default");

  j = run_json({"topology", "cohomology", "--g", "4", "--mplus", "4", "--mminus", "3", "--ring", "Z2"}, 0);
  CHECK(j["result"]["ring"] == "Z2");

  j = run_json({"topology", "record", "--m", "8", "--l", "16", "--q", "1"}, 0);
  CHECK(j["result"]["pontrjagin_top"] == "6");

  TempDir dir;
  REQUIRE(run({"topology", "table", "--csv", dir.file("t.csv")}).code == 0);
  CHECK(slurp(dir.file("t.csv")).rfind("g,(m+,m-),(U,K),K0,K+,K-\n", 0) == 0);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"clifford"}).code == 2);
  CHECK(run({"clifford", "build", "--m", "4"}).code == 2);
  CHECK(run({"clifford", "build", "--m", "four", "--plus", "1", "--minus", "0"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"topology", "table", "--format", "xml"}).code == 2);
  CHECK(run({"fkm", "spectrum", "--level", "0.2"}).code == 2);
  const auto r = run({"clifford", "build"});
  CHECK(r.code == 2);
  CHECK(r.err.find("Usage") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("determinism: identical flags give identical JSON") {
  TempDir dir;
  const auto path = dir.file("m4l8.json");
  REQUIRE(run({"clifford", "build", "--m", "4", "--plus", "1", "--minus", "1", "--out", path}).code == 0);
  const std::vector<std::vector<std::string>> cmds = {
      {"fkm", "check", "--system", path, "--samples", "100", "--seed", "5", "--format", "json"},
      {"fkm", "spectrum", "--system", path, "--level", "0.4", "--points", "2", "--format", "json"},
      {"topology", "table", "--format", "json"}};
  for (const auto& c : cmds) {
    const auto a = run(c), b = run(c);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
  const auto s1 = run({"fkm", "check", "--system", path, "--samples", "10", "--seed", "1", "--format", "json"});
  const auto s2 = run({"fkm", "check", "--system", path, "--samples", "10", "--seed", "2", "--format", "json"});
  CHECK(s1.out != s2.out);
}

TEST_CASE("environment overrides are echoed") {
  setenv("ISODOUBLE_SEED", "1234", 1);
  setenv("ISODOUBLE_TOLERANCE", "1e-7", 1);
  auto j = run_json({"topology", "table"}, 0);
  CHECK(j["config"]["seed"] == 1234);
  TempDir dir;
  const auto path = dir.file("m4l8.json");
  REQUIRE(run({"clifford", "build", "--m", "4", "--plus", "1", "--minus", "1", "--out", path}).code == 0);
  j = run_json({"fkm", "check", "--system", path, "--samples", "10"}, 0);
  CHECK(j["config"]["tolerance"] == 1e-7);
  CHECK(j["result"]["verification"]["tolerance"] == 1e-7);
  j = run_json({"fkm", "check", "--system", path, "--samples", "10", "--seed", "9"}, 0);
  CHECK(j["config"]["seed"] == 9);
  setenv("ISODOUBLE_SEED", "banana", 1);
  CHECK(run({"topology", "table"}).code == 2);
  unsetenv("ISODOUBLE_SEED");
  unsetenv("ISODOUBLE_TOLERANCE");
}

TEST_CASE("--out sends the report to a file") {
  TempDir dir;
  const auto out = dir.file("report.json");
  const auto r = run({"topology", "distinguish", "--m", "4", "--l", "8", "--q1", "0", "--q2", "2",
                      "--format", "json", "--out", out});
  CHECK(r.code == 0);
  CHECK(Json::parse(slurp(out))["result"]["verdict"] == "distinct");
}
