#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "commvar/suites.hpp"

using namespace commvar;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(COMMVAR_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("commvar_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("config parsing") {
  const auto cfg = SuiteConfig::from_json(Json::parse(R"({"algebra": "A2", "seed": 5, "long": true, "criteria": [1, 3]})"));
  CHECK(cfg.algebra == "A2");
  CHECK(cfg.seed == 5);
  CHECK(cfg.long_run);
  CHECK(cfg.criteria == std::vector<unsigned>{1, 3});
  CHECK(SuiteConfig::from_json(cfg.to_json()).to_json() == cfg.to_json());
  CHECK_THROWS_AS(SuiteConfig::from_json(Json::parse(R"({"algebraa": "A2"})")), ConfigError);
  CHECK_THROWS_AS(SuiteConfig::from_json(Json::parse(R"({"algebra": "B2"})")), ConfigError);
  CHECK_THROWS_AS(SuiteConfig::from_json(Json::parse(R"({"algebra": "A9"})")), ConfigError);
  CHECK_THROWS_AS(SuiteConfig::from_json(Json::parse(R"({"criteria": [11]})")), ConfigError);
  CHECK_THROWS_AS(SuiteConfig::from_json(Json::parse(R"({"seed": "x"})")), ConfigError);
  CHECK(suite_names().size() == 8);
}

TEST_CASE("run_parallel keeps task order") {
  std::vector<std::function<ReportDoc()>> tasks;
  for (int i = 0; i < 7; ++i)
    tasks.push_back([i] {
      ReportDoc d;
      d.suite = "t";
      d.case_id = std::to_string(i);
      d.claim = "c";
      return d;
    });
  const auto out = run_parallel(tasks, 3);
  REQUIRE(out.size() == 7);
  for (int i = 0; i < 7; ++i) CHECK(out[i].case_id == std::to_string(i));
}

TEST_CASE("exit codes") {
  const auto ok = run_cli("comb --max-l 8");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("overall: pass") != std::string::npos);
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("comb --no-such-flag").code == 2);
  CHECK(run_cli("no-such-suite").code == 2);
  CHECK(run_cli("algebra-info --algebra B2").code == 2);
  CHECK(run_cli("algebra-info --algebra A7").code == 2);
  CHECK(run_cli("verify-all --criteria 0").code == 2);

  const auto cfg = scratch("bad.json");
  std::ofstream(cfg) << R"({"algebra": "A1", "colour": "red"})";
  CHECK(run_cli("comb --config " + cfg.string()).code == 2);
  CHECK(run_cli("comb --config " + scratch("missing.json").string()).code == 2);
}

TEST_CASE("config file and flag precedence") {
  const auto cfg = scratch("good.json");
  std::ofstream(cfg) << R"({"algebra": "A2", "max_l_rc": 5, "max_l_psi": 5})";
  const auto r = run_cli("comb --config " + cfg.string() + " --report -");
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j[0]["witness"]["max_l"] == 5);
  const auto r2 = run_cli("comb --config " + cfg.string() + " --max-l 7 --report -");
  REQUIRE(r2.code == 0);
  CHECK(Json::parse(r2.out)[0]["witness"]["max_l"] == 7);
}

TEST_CASE("poisson report for sl3") {
  const auto r = run_cli("poisson --algebra A2 --report -");
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  bool found = false;
  for (const auto& d : j)
    if (d["case"] == "mf-commutativity/A2") {
      found = true;
      CHECK(d["status"] == "pass");
      CHECK(d["witness"]["pair_count"] == 10);
      CHECK(d["schema"] == "commvar-report/1");
    }
  CHECK(found);
}

TEST_CASE("reports are byte-deterministic") {
  const auto a = scratch("a.json"), b = scratch("b.json");
  REQUIRE(run_cli("charmod --algebra A2 --samples 50 --report " + a.string()).code == 0);
  REQUIRE(run_cli("charmod --algebra A2 --samples 50 --report " + b.string()).code == 0);
  CHECK(!slurp(a).empty());
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a).find("\"seconds\"") == std::string::npos);

  const auto c = scratch("c.json"), d = scratch("d.json");
  REQUIRE(run_cli("verify-all --criteria 1 2 3 --max-l 8 --jobs 1 --report " + c.string()).code == 0);
  REQUIRE(run_cli("verify-all --criteria 1 2 3 --max-l 8 --jobs 3 --report " + d.string()).code == 0);
  CHECK(slurp(c) == slurp(d));

  const auto t = run_cli("comb --max-l 6 --timing --report -");
  REQUIRE(t.code == 0);
  CHECK(t.out.find("\"seconds\"") != std::string::npos);
  fs::remove_all(a.parent_path());
}
