// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <fstream>
#include <sstream>

#include "eqdecomp/cli.hpp"
#include "eqdecomp/json_io.hpp"
#include "helpers.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "eqdecomp");
  std::ostringstream out, err;
  const int code = eqdecomp::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

void write(const std::filesystem::path& path, const std::string& text) { std::ofstream(path) << text; }

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cli fixtures and core verbs") {
  const auto dir = testing::scratch_dir("cli");
  const std::string d = dir.string();
  REQUIRE(run({"fixtures", "figure1", "--out", d}).code == 0);
  const std::string fig = d + "/figure1.txt";
  const std::string phi = d + "/figure1-phi.txt";
  write(dir / "id.txt", "()\n");

  auto r = run({"check-auto", fig, phi});
  CHECK(r.code == 0);
  CHECK(r.out == "true\n");
  CHECK(run({"check-auto", fig, (dir / "id.txt").string()}).out == "true\n");
  write(dir / "swap.txt", "(1 2)\n");
  r = run({"check-auto", fig, (dir / "swap.txt").string()});
  CHECK(r.code == 0);
  CHECK(r.out == "false\n");

  r = run({"orbits", phi});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "kind: Uniform(4)"));

  r = run({"decompose", fig, phi, "--kind", "adjacency"});
  REQUIRE(r.code == 0);
  const auto dec = eqdecomp::decomposition_from_json(nlohmann::json::parse(r.out));
  CHECK(dec.divisor_block == eqdecomp::DenseMatrix::from_rows({{0, 2}, {2, 3}}));

  r = run({"partition", fig, phi, "--kind", "laplacian"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "equitable: true"));

  r = run({"spectrum", fig});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "simple eigenvalues: 2"));

  r = run({"build", fig, "--kind", "distance"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "distance matrix (8x8)"));
}

TEST_CASE("cli verify re-reads a saved decomposition") {
  const auto dir = testing::scratch_dir("cli-verify");
  const std::string d = dir.string();
  REQUIRE(run({"fixtures", "trigraph", "--out", d}).code == 0);
  const std::string g = d + "/trigraph.txt";
  const std::string phi = d + "/trigraph-phi.txt";
  const std::string saved = d + "/dec.json";

  auto r = run({"decompose", g, phi, "--json", saved});
  REQUIRE(r.code == 0);
  CHECK(contains(r.out, "k=3 r=3 p=1"));

  r = run({"verify", g, phi, "--decomposition", saved});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "similarity residual"));
  CHECK(contains(r.out, "spectrum match: pass"));

  // tamper with the saved block: verification must fail with exit 1
  auto j = nlohmann::json::parse(std::ifstream(saved));
  j["divisorBlock"][0][1] = nlohmann::json::array({"4", "0"});
  std::ofstream(saved) << j.dump();
  r = run({"verify", g, phi, "--decomposition", saved});
  CHECK(r.code == 1);
  CHECK(contains(r.out, "FAIL"));
}

TEST_CASE("cli bounds and certify") {
  const auto dir = testing::scratch_dir("cli-bounds");
  const std::string d = dir.string();
  REQUIRE(run({"fixtures", "ksun", "7", "--out", d}).code == 0);
  auto r = run({"bounds", d + "/ksun-7-phi.txt", "--n", "14"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "UniformOdd: at most 2 simple eigenvalues"));

  REQUIRE(run({"fixtures", "network", "--out", d}).code == 0);
  r = run({"certify", d + "/network.txt", d + "/network-perms", "--kind", "laplacian"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "algebraic connectivity <= 0.52264765"));
  r = run({"certify", d + "/network.txt", d + "/network-perms", "--json", "-"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["partial"]["values"].size() == 10);
}

TEST_CASE("cli fixtures to stdout and export") {
  auto r = run({"fixtures", "tree", "8", "3"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "n=8 undirected"));
  CHECK(contains(r.out, "# automorphism: (4 5 6 7 8)"));

  r = run({"fixtures", "planted", "--seed", "5", "--n", "13", "--k", "3", "--p", "1", "--weighted"});
  CHECK(r.code == 0);
  CHECK(r.out == run({"fixtures", "planted", "--seed", "5", "--n", "13", "--k", "3", "--p", "1", "--weighted"}).out);

  const auto dir = testing::scratch_dir("cli-export");
  r = run({"fixtures", "export-all", dir.string()});
  CHECK(r.code == 0);
  CHECK(std::filesystem::exists(dir / "ladder-3.txt"));
  CHECK(std::filesystem::exists(dir / "network-perms" / "phi3.txt"));
}

TEST_CASE("cli exit codes") {
  const auto dir = testing::scratch_dir("cli-errors");
  const std::string d = dir.string();
  REQUIRE(run({"fixtures", "figure1", "--out", d}).code == 0);
  const std::string fig = d + "/figure1.txt";
  write(dir / "general.txt", "(1 2)(3 4 5)\n");
  write(dir / "swap.txt", "(1 2)\n");

  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"spectrum", fig, "--kind", "hessian"}).code == 2);
  CHECK(run({"spectrum", fig, "--bogus"}).code == 2);
  CHECK(run({"fixtures", "ksun"}).code == 2);
  CHECK(run({"fixtures", "moebius"}).code == 2);

  auto r = run({"decompose", fig, d + "/general.txt"});
  CHECK(r.code == 1);
  CHECK(contains(r.err, "power_to_basic"));
  r = run({"decompose", fig, d + "/swap.txt"});
  CHECK(r.code == 1);
  CHECK(contains(r.err, "not compatible"));
  r = run({"partition", fig, d + "/swap.txt"});
  CHECK(r.code == 1);
  CHECK(contains(r.err, "equitable"));
  CHECK(run({"spectrum", d + "/missing.txt"}).code == 1);
  CHECK(run({"fixtures", "ksun", "2"}).code == 1);

  r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "decompose"));
}
