#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bohr/cli.hpp"
#include "bohr/error.hpp"

using namespace bohr;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "bohr-lab");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("bohr_cli_test_" + name);
}

}  // namespace

TEST_CASE("config text") {
  CliConfig c;
  apply_config_text(c, "# comment\nseed = 7\nworkers=3\nK=128\nrho_w=0.99\ntol_verify=1e-8\n");
  CHECK(c.seed == 7);
  CHECK(c.workers == 3);
  CHECK(c.order == 128);
  CHECK(c.sample_radius == 0.99);
  CHECK(c.tol_verify == 1e-8);
  CHECK_THROWS_AS(apply_config_text(c, "colour=blue\n"), Error);
  CHECK_THROWS_AS(apply_config_text(c, "seed=abc\n"), Error);
}

TEST_CASE("radius subcommands") {
  auto r = run({"radius", "classical", "--gamma", "0"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("0.333333333333333") != std::string::npos);

  r = run({"radius", "improved", "--gamma", "0.2", "--m", "2"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("beta = 0.136") != std::string::npos);

  r = run({"radius", "improved", "--gamma", "0.7", "--m", "2"});
  CHECK(r.out.find("does not apply") != std::string::npos);

  r = run({"radius", "rogosinski", "--gamma", "0", "--variant", "lemma"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("0.267949192") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"radius", "classical", "--gamma", "1.5"}).code == kExitUsage);
  CHECK(run({"nonsense"}).code == kExitUsage);
  CHECK(run({"radius", "classical"}).code == kExitUsage);
  CHECK(run({"verify", "--theorem", "improved", "--m", "2", "--gamma", "0.75"}).code ==
        kExitUsage);
  CHECK(run({"--tol-root", "0", "radius", "rogosinski", "--gamma", "0.5"}).code == kExitUsage);
}

TEST_CASE("verify writes csv and json") {
  const auto csv = scratch("v.csv");
  const auto json = scratch("v.json");
  auto r = run({"verify", "--theorem", "classical", "--gamma", "0.25", "--samples", "5",
                "--out", csv.string()});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("violations: 0") != std::string::npos);
  CHECK(r.err.find("runtime") != std::string::npos);
  CHECK(slurp(csv).starts_with("sample_index,kind,seed,r,value,upper_slack,pass\n"));

  r = run({"verify", "--theorem", "classical", "--gamma", "0.25", "--samples", "5", "--out",
           json.string(), "--workers", "2"});
  CHECK(r.code == kExitOk);
  CHECK(slurp(json).find("\"schema_version\"") != std::string::npos);
  std::filesystem::remove(csv);
  std::filesystem::remove(json);
}

TEST_CASE("a sweep with violations exits with 1") {
  auto r = run({"verify", "--theorem", "rogosinski", "--gamma", "0", "--variant", "lemma",
                "--samples", "60"});
  CHECK(r.code == kExitViolation);
}

TEST_CASE("flags override the config file") {
  const auto cfg = scratch("cfg.txt");
  std::ofstream(cfg) << "seed=5\n";
  const auto a = scratch("a.csv");
  const auto b = scratch("b.csv");
  const auto c = scratch("c.csv");
  run({"--config", cfg.string(), "verify", "--theorem", "classical", "--gamma", "0", "--samples",
       "3", "--out", a.string()});
  run({"--seed", "5", "verify", "--theorem", "classical", "--gamma", "0", "--samples", "3",
       "--out", b.string()});
  run({"--config", cfg.string(), "--seed", "6", "verify", "--theorem", "classical", "--gamma",
       "0", "--samples", "3", "--out", c.string()});
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a) != slurp(c));
  for (const auto& p : {cfg, a, b, c}) std::filesystem::remove(p);
}

TEST_CASE("gamma-star, sharpness and scan") {
  auto r = run({"gamma-star", "--m-min", "2", "--m-max", "4"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.starts_with("m,gamma_star\n2,0.56155"));

  r = run({"sharpness", "--theorem", "classical", "--gamma", "0", "--a", "0.99", "--r", "0.35"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("exceeds 1: yes") != std::string::npos);

  const auto spec = scratch("spec.txt");
  const auto svg = scratch("scan.svg");
  std::ofstream(spec) << "kind=extremal\na=0.9\n";
  r = run({"scan", "--theorem", "classical", "--gamma", "0", "--spec", spec.string(), "--out",
           svg.string()});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("scanned radius: 0.357142857") != std::string::npos);
  CHECK(slurp(svg).find("</svg>") != std::string::npos);
  std::filesystem::remove(spec);
  std::filesystem::remove(svg);
}

TEST_CASE("installed executable runs") {
  const auto out = scratch("exe.txt");
  const std::string cmd = std::string("\"") + BOHR_LAB_EXE +
                          "\" radius classical --gamma 0.5 > \"" + out.string() + "\"";
  CHECK(std::system(cmd.c_str()) == 0);
  CHECK(slurp(out).find("0.428571428571429") != std::string::npos);
  std::filesystem::remove(out);
}
