// Copyright 2026 The pathsum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "pathsum/circuit.hpp"
#include "pathsum/cli.hpp"

using namespace pathsum;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("pathsum-cli-" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = path_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

}  // namespace

TEST_CASE("amp") {
  TempDir dir;
  const auto h = dir.write("h.txt", "qubits 1\nh 0\n");
  const auto x = dir.write("x.txt", "qubits 1\nx 0\n");
  auto r = run({"amp", "--circuit", h, "--in", "0", "--out", "0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("amplitude: 1 * 2^(-1/2)") != std::string::npos);
  CHECK(r.out.find("decimal: 0.707106781186548") != std::string::npos);

  r = run({"amp", "--circuit", x, "--in", "0", "--out", "0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("amplitude: 0\n") != std::string::npos);

  r = run({"amp", "--circuit", h, "--in", "1", "--out", "1", "--json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["amplitude"]["num"] == "-1");
  CHECK(j["amplitude"]["half_exp"] == -1);
  CHECK(j["amplitude"]["exact"] == "-1 * 2^(-1/2)");

  const auto bad = dir.write("bad.txt", "qubits 1\nh 0\nfoo 0\n");
  r = run({"amp", "--circuit", bad, "--in", "0", "--out", "0"});
  CHECK(r.code == 2);
  CHECK(r.err == "error: " + bad + ":3:1: unknown gate 'foo'\n");

  CHECK(run({"amp", "--circuit", dir.path("missing.txt"), "--in", "0", "--out", "0"}).code == 2);
  CHECK(run({"amp", "--circuit", h, "--in", "01", "--out", "0"}).code == 2);
  CHECK(run({"amp", "--circuit", h, "--in", "2", "--out", "0"}).code == 2);
  CHECK(run({"amp", "--circuit", h}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("eval guard exit code") {
  TempDir dir;
  const auto c = dir.write("c.txt", "qubits 3\nh 0\nh 1\nh 2\nz 0 1 2\nh 0\nh 1\nh 2\n");
  CHECK(run({"amp", "--circuit", c, "--in", "000", "--out", "000"}).code == 0);
  const auto r = run({"amp", "--circuit", c, "--in", "000", "--out", "000", "--max-eval-vars", "2"});
  CHECK(r.code == 3);
  CHECK(r.err.find("inefficient instance") != std::string::npos);
}

TEST_CASE("measure") {
  TempDir dir;
  const auto h = dir.write("h.txt", "qubits 1\nh 0\n");
  const auto x = dir.write("x.txt", "qubits 1\nx 0\n");
  auto r = run({"measure", "--circuit", h, "--in", "0", "--qubit", "0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("probability: 1/2\n") != std::string::npos);
  CHECK(r.out.find("decimal: 0.5\n") != std::string::npos);
  r = run({"measure", "--circuit", x, "--in", "0", "--qubit", "0"});
  CHECK(r.out.find("probability: 1\n") != std::string::npos);
  CHECK(run({"measure", "--circuit", x, "--in", "0", "--qubit", "1"}).code == 2);
  r = run({"measure", "--circuit", h, "--in", "0", "--qubit", "0", "--json"});
  CHECK(nlohmann::json::parse(r.out)["probability"]["rational"] == "1/2");
}

TEST_CASE("hidden shift generation and solving") {
  TempDir dir;
  const auto two = dir.path("two.txt");
  auto r = run({"hidden-shift-gen", "--n", "2", "--shift", "10", "--g", "", "-o", two});
  CHECK(r.code == 0);
  CHECK(r.out.find("gates: 10\n") != std::string::npos);
  std::ifstream in(two);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(parse_circuit(text.str()) == hidden_shift_circuit(HiddenShiftSpec{2, {}, parse_bits("10"), {}}));

  r = run({"hidden-shift-solve", "--circuit", two});
  CHECK(r.code == 0);
  CHECK(r.out.find("shift: 10\n") != std::string::npos);

  r = run({"hidden-shift-gen", "--n", "6", "--shift", "000000", "--g", "0,1,2", "--json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["ccz"] == 2);

  r = run({"hidden-shift-gen", "--n", "6", "--shift", "010011", "--g", "0,1,2;1"});
  CHECK(r.code == 0);
  CHECK(r.err.find("ccz: 2") != std::string::npos);
  CHECK(parse_circuit(r.out).num_qubits == 6);

  CHECK(run({"hidden-shift-gen", "--n", "4", "--shift", "010"}).code == 2);
  CHECK(run({"hidden-shift-gen", "--n", "3", "--shift", "010"}).code == 2);
  CHECK(run({"hidden-shift-gen", "--n", "4", "--shift", "0100", "--g", "0,1,2"}).code == 2);
  CHECK(run({"hidden-shift-gen", "--n", "4", "--shift", "0100", "--pi", "0,0"}).code == 2);

  const auto h = dir.write("h.txt", "qubits 1\nh 0\n");
  r = run({"hidden-shift-solve", "--circuit", h});
  CHECK(r.code == 4);

  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 2 * (1 + rng() % 6);
    const auto spec = random_hidden_shift_spec(n, n >= 8 ? rng() % 3 : 0, true, rng());
    std::string g, pi;
    for (const auto& m : spec.g) {
      if (!g.empty()) g += ';';
      for (std::size_t i = 0; i < m.size(); ++i) g += (i ? "," : "") + std::to_string(m[i]);
    }
    for (std::size_t i = 0; i < spec.pi.size(); ++i) pi += (i ? "," : "") + std::to_string(spec.pi[i]);
    const auto file = dir.path("hs" + std::to_string(trial) + ".txt");
    REQUIRE(run({"hidden-shift-gen", "--n", std::to_string(n), "--shift", bits_to_string(spec.shift), "--g", g,
                 "--pi", pi, "-o", file})
                .code == 0);
    r = run({"hidden-shift-solve", "--circuit", file, "--json"});
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["shift"] == bits_to_string(spec.shift));
  }
}

TEST_CASE("normalize") {
  TempDir dir;
  const auto hs = dir.path("hs.txt");
  REQUIRE(run({"hidden-shift-gen", "--n", "4", "--shift", "1101", "--g", "0,1", "-o", hs}).code == 0);
  auto r = run({"normalize", "--circuit", hs, "--in", "0000", "--json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["normal_form"]["num_vars"] == 0);
  CHECK(j["normal_form"]["outputs"] == nlohmann::json::parse("[[[]],[[]],[],[[]]]"));

  const auto id = dir.write("id.txt", "qubits 2\n");
  r = run({"normalize", "--circuit", id});
  CHECK(r.out == "{\"scalar\":{\"zero\":false,\"half_exp\":0},\"num_vars\":2,\"phase\":[],"
                 "\"outputs\":[[[0]],[[1]]],\"inputs\":[[[0]],[[1]]]}\n");

  const auto a = run({"normalize", "--circuit", hs, "--strategy", "random", "--seed", "7", "--trace"});
  const auto b = run({"normalize", "--circuit", hs, "--strategy", "random", "--seed", "7", "--trace"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("HH pivot=") != std::string::npos);
  CHECK(run({"normalize", "--circuit", hs, "--strategy", "greedy"}).code == 2);
  CHECK(run({"normalize", "--circuit", hs, "--in", "01"}).code == 2);
}

TEST_CASE("check-confluence") {
  auto r = run({"check-confluence", "--trials", "40", "--max-vars", "8", "--seed", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("passed: 40\n") != std::string::npos);
  CHECK(r.out == run({"check-confluence", "--trials", "40", "--max-vars", "8", "--seed", "3"}).out);

  r = run({"check-confluence", "--trials", "10", "--max-vars", "12", "--seed", "3", "--json"});
  CHECK(r.code == 0);
  CHECK(r.err.find("warning") != std::string::npos);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["mode"] == "eval-equality");
  CHECK(j["failed"] == 0);
}
