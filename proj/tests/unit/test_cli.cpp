#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "../support/golden_cases.hpp"
#include "conekit/models.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace testing_support;
using conekit::cli::Environment;
using nlohmann::json;

namespace {

// Last non-empty line of stderr holds the manifest.
json manifest_of(const std::string& err) {
  auto end = err.find_last_not_of('\n');
  auto start = err.rfind('\n', end);
  return json::parse(err.substr(start == std::string::npos ? 0 : start + 1, end - (start == std::string::npos ? 0 : start + 1) + 1));
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("conekit-test-" + name);
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("golden outputs are reproduced byte for byte") {
    auto cases = golden_cases();
    REQUIRE(cases.size() >= 10);
    for (const auto& c : cases) {
      CAPTURE(c.name);
      auto first = run_cli(c.args);
      auto second = run_cli(c.args);
      CHECK(first.code == 0);
      CHECK(first.out == read_text(golden_dir() + "/" + c.name + ".out"));
      CHECK(first.out == second.out);
      auto m1 = manifest_of(first.err), m2 = manifest_of(second.err);
      m1.erase("wall_time_ms");
      m2.erase("wall_time_ms");
      CHECK(m1 == m2);
    }
  }

  TEST_CASE("manifest fields") {
    auto path = temp_path("manifest.json");
    auto r = run_cli({"t1", "--model", "genus5", "--range", "-2..2", "--manifest", path.string()});
    REQUIRE(r.code == 0);
    CHECK(r.err.empty());
    auto m = json::parse(read_text(path.string()));
    std::filesystem::remove(path);
    CHECK(m["schema"] == "conekit/1");
    CHECK(m["tool_version"] == "conekit 0.1.0");
    CHECK(m["subcommand"] == "t1");
    CHECK(m["input_sha256"] == conekit::cli::sha256_hex(conekit::models::genus5(1)));
    CHECK(m["seed"] == 1);
    CHECK(m["field"] == "GF(32003)");
    CHECK(m["bounds"]["range"] == json::array({-2, 2}));
    CHECK(m["exit_code"] == 0);
    CHECK(m["wall_time_ms"].is_number());
  }

  TEST_CASE("SHA-256 test vector") {
    CHECK(conekit::cli::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  }

  TEST_CASE("input files and built-in models agree") {
    auto path = temp_path("quartic.txt");
    {
      std::ofstream f(path);
      f << conekit::models::fermat_quartic();
    }
    auto from_file = run_cli({"t1", "--input", path.string()});
    auto from_model = run_cli({"t1", "--model", "quartic"});
    std::filesystem::remove(path);
    CHECK(from_file.code == 0);
    CHECK(from_file.out == from_model.out);
  }

  TEST_CASE("seed environment variable overrides the option") {
    Environment env;
    env.seed_override = "3";
    auto r = run_cli({"model", "genus6", "--seed", "1"}, env);
    CHECK(r.code == 0);
    CHECK(r.out == read_text(golden_dir() + "/model_genus6_seed3.out"));
    CHECK(manifest_of(r.err)["seed"] == 3);
    env.seed_override = "three";
    CHECK(run_cli({"model", "genus6"}, env).code == 1);
  }

  TEST_CASE("timings only on request") {
    auto plain = json::parse(run_cli({"classify", "elliptic", "--degree", "3"}).out);
    CHECK_FALSE(plain.contains("timings"));
    auto timed = json::parse(run_cli({"classify", "elliptic", "--degree", "3", "--timings"}).out);
    CHECK(timed["timings"]["total_ms"].is_number());
  }

  TEST_CASE("domain errors exit with 1 and print nothing on stdout") {
    const std::vector<std::vector<std::string>> bad = {
        {"t1", "--model", "nope"},
        {"t1"},
        {"t1", "--model", "quartic", "--range", "4..-4"},
        {"t1", "--model", "segre", "--method", "hyp"},
        {"t1", "--model", "quartic", "--input", "x.txt"},
        {"pfaff", "--model", "pfaffian", "--deform", "lambda=1", "--mode", "projective"},
        {"classify", "k3", "--genus", "1"},
        {"betti", "--model", "genus4", "--input", "/nonexistent/file"},
        {"hilbert", "--model", "quartic", "--range", "-1..3"},
    };
    for (const auto& args : bad) {
      CAPTURE(args.front());
      auto r = run_cli(args);
      CHECK(r.code == 1);
      CHECK(r.out.empty());
      CHECK(r.err.rfind("error: ", 0) == 0);
      CHECK(manifest_of(r.err)["exit_code"] == 1);
    }
  }

  TEST_CASE("parse errors report the position") {
    auto path = temp_path("broken.txt");
    {
      std::ofstream f(path);
      f << "ring x y\nideal\nx^2 + * y\nend\n";
    }
    auto r = run_cli({"gb", "--input", path.string()});
    std::filesystem::remove(path);
    CHECK(r.code == 1);
    CHECK(r.err.find("at 3:7") != std::string::npos);
  }

  TEST_CASE("resource caps exit with 2") {
    auto gb = run_cli({"gb", "--model", "genus6", "--max-pairs", "5"});
    CHECK(gb.code == 2);
    CHECK(gb.out.empty());
    CHECK(manifest_of(gb.err)["exit_code"] == 2);
    CHECK(run_cli({"t1", "--model", "genus6", "--max-size", "100"}).code == 2);
  }

  TEST_CASE("strand cap marks Betti cells unknown") {
    auto r = run_cli({"betti", "--model", "genus5", "--max-strand", "30"});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["table"]["rows"][3][3] == "unknown");
    CHECK(j["table"]["rows"][0][0] == 1);
  }

  TEST_CASE("usage, help and version") {
    CHECK(run_cli({}).code == 1);
    CHECK(run_cli({"frobnicate"}).code == 1);
    CHECK(run_cli({"t1", "--bogus"}).code == 1);
    auto help = run_cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("t1") != std::string::npos);
    auto version = run_cli({"--version"});
    CHECK(version.code == 0);
    CHECK(version.out.find("conekit 0.1.0") != std::string::npos);
  }

  TEST_CASE("smoothness sampling from the command line") {
    auto r = run_cli({"pfaff", "--model", "pfaffian-concrete", "--deform", "lambda=0", "h1=x1^2", "--mode",
                      "projective", "--sample", "3"});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["deformation"]["jacobian_rank_at_origin"].get<int>() <= 2);
    CHECK(j["deformation"]["sample"]["status"] == "singular-witness");
  }
}
