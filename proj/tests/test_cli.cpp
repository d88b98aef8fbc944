// Copyright 2026 The metric-forge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "metric_forge/cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
  json record() const { return json::parse(out); }
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = mforge::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / "metric_forge_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  const fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST_CASE("gen then c2 solve on hypercube(3)") {
  const std::string graph = (scratch() / "q3.graph").string();
  const auto gen = run({"gen", "hypercube", "3", "--seed", "1", "--out", graph});
  REQUIRE(gen.code == mforge::cli::kOk);
  CHECK(gen.record()["result"]["n"] == 8);
  const auto solve = run({"c2", "solve", graph, "--seed", "1"});
  REQUIRE(solve.code == mforge::cli::kOk);
  const json rec = solve.record();
  CHECK(rec["schema"] == 1);
  CHECK(rec["subcommand"] == "c2 solve");
  CHECK(rec["seed"] == 1);
  CHECK(rec.contains("input_digest"));
  CHECK(rec.contains("wall_time_s"));
  CHECK(rec["result"]["value"].get<double>() == doctest::Approx(1.732).epsilon(1e-3));
}

TEST_CASE("embed frechet reports distortion one") {
  const std::string csv = write_file("m.csv", "0,1,2\n1,0,1.5\n2,1.5,0\n");
  const auto r = run({"embed", "frechet", csv, "--seed", "2"});
  REQUIRE(r.code == mforge::cli::kOk);
  CHECK(r.record()["result"]["report"]["distortion"].get<double>() == 1.0);
  CHECK(r.record()["result"].contains("artifact"));
}

TEST_CASE("flowcut exact on K13 all pairs") {
  const std::string inst =
      write_file("k13.inst", "4 3\n1 2 1\n1 3 1\n1 4 1\n6\n1 2 1\n1 3 1\n1 4 1\n2 3 1\n2 4 1\n3 4 1\n");
  const auto r = run({"flowcut", "exact", inst, "--seed", "1"});
  REQUIRE(r.code == mforge::cli::kOk);
  CHECK(r.record()["result"]["gamma"].get<double>() == doctest::Approx(0.3333).epsilon(1e-3));
  const auto solve = run({"flowcut", "solve", inst, "--seed", "1"});
  REQUIRE(solve.code == mforge::cli::kOk);
  const json res = solve.record()["result"];
  CHECK(res["phi"].get<double>() == doctest::Approx(1.0 / 3.0));
  CHECK(res["duality_gap"].get<double>() <= 1e-6);
  CHECK(res["cut_subset"].is_array());
}

TEST_CASE("bandwidth and hst subcommands") {
  const std::string graph = write_file("c6.graph", "6 6\n1 2 1\n2 3 1\n3 4 1\n4 5 1\n5 6 1\n6 1 1\n");
  const auto feige = run({"bandwidth", "feige", graph, "--seed", "3", "--oracle", "--trials", "3"});
  REQUIRE(feige.code == mforge::cli::kOk);
  const json res = feige.record()["result"];
  CHECK(res["oracle_bw"] == 2);
  CHECK(res["achieved_bw"].get<int>() >= 2);
  CHECK(res["labeling"].size() == 6);
  CHECK(res["beta"].get<double>() == 3.0);
  const auto hst = run({"hst", "sample", graph, "--seed", "3"});
  REQUIRE(hst.code == mforge::cli::kOk);
  CHECK(hst.record()["result"]["dominating"] == true);
}

TEST_CASE("same seed reproduces the record") {
  const std::string graph = write_file("c8.graph", "8 8\n1 2 1\n2 3 1\n3 4 1\n4 5 1\n5 6 1\n6 7 1\n7 8 1\n8 1 1\n");
  auto strip = [](json j) {
    j.erase("wall_time_s");
    return j.dump();
  };
  const auto a = run({"embed", "bourgain", graph, "--seed", "99", "--trials", "4"});
  const auto b = run({"embed", "bourgain", graph, "--seed", "99", "--trials", "4", "--jobs", "2"});
  REQUIRE(a.code == 0);
  CHECK(strip(a.record()) == strip(b.record()));
  const auto c = run({"embed", "bourgain", graph, "--seed", "100"});
  CHECK(strip(a.record()) != strip(c.record()));
}

TEST_CASE("seed comes from the environment when not given") {
  const std::string graph = write_file("p3.graph", "3 2\n1 2 1\n2 3 1\n");
  setenv("METRIC_FORGE_SEED", "1234", 1);
  const auto r = run({"hst", "sample", graph});
  unsetenv("METRIC_FORGE_SEED");
  REQUIRE(r.code == 0);
  CHECK(r.record()["seed"] == 1234);
  const auto d = run({"hst", "sample", graph});
  CHECK(d.record().contains("seed"));
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == mforge::cli::kUsageError);
  CHECK(run({"frobnicate"}).code == mforge::cli::kUsageError);
  CHECK(run({"c2", "solve"}).code == mforge::cli::kUsageError);
  CHECK(run({"embed", "bourgain", "x", "--trials", "0"}).code == mforge::cli::kUsageError);
  const std::string bad = write_file("bad.csv", "0,1,5\n1,0,1\n5,1,0\n");
  const auto r = run({"c2", "solve", bad, "--seed", "1"});
  CHECK(r.code == mforge::cli::kComputationError);
  CHECK(r.record()["error"] == "TriangleViolation");
  const auto missing = run({"metric", (scratch() / "nope.graph").string(), "--seed", "1"});
  CHECK(missing.code == mforge::cli::kComputationError);
  CHECK(missing.record()["error"] == "ParseError");
}

TEST_CASE("report aggregates records into a table") {
  const std::string graph = write_file("k4.graph", "4 6\n1 2 1\n1 3 1\n1 4 1\n2 3 1\n2 4 1\n3 4 1\n");
  const auto beta = run({"bandwidth", "exact", graph, "--seed", "5"});
  const std::string rec1 = write_file("rec1.json", beta.out);
  const auto c2 = run({"c2", "solve", graph, "--seed", "5"});
  const std::string rec2 = write_file("rec2.json", c2.out);
  const auto rep = run({"report", rec1, rec2});
  REQUIRE(rep.code == 0);
  std::istringstream lines(rep.out);
  std::string header;
  std::string l1;
  std::string l2;
  std::getline(lines, header);
  std::getline(lines, l1);
  std::getline(lines, l2);
  CHECK(header.rfind("file,subcommand,seed", 0) == 0);
  CHECK(l1.find("bandwidth exact") != std::string::npos);
  CHECK(l2.find("c2 solve") != std::string::npos);
}

TEST_CASE("input digest depends on content") {
  const std::string a = write_file("da", "abc");
  const std::string b = write_file("db", "abd");
  CHECK(mforge::cli::input_digest({a}) != mforge::cli::input_digest({b}));
  CHECK(mforge::cli::input_digest({a}) == mforge::cli::input_digest({a}));
}
