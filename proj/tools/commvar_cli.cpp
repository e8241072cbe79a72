// commvar: run verification suites and write JSON reports.
//
//   commvar <subcommand> [--algebra A2] [--seed N] [--report out.json] ...
//
// Exit status: 0 no failure, 1 some check failed, 2 usage or config error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "commvar/suites.hpp"

using commvar::ConfigError;
using commvar::Json;
using commvar::SuiteConfig;

namespace {

struct Flags {
  std::string algebra;
  std::uint64_t seed = 0;
  long height_bound = 0;
  unsigned max_degree = 0;
  unsigned max_l = 0;
  unsigned samples = 0;
  unsigned jobs = 0;
  std::vector<unsigned> criteria;
  std::string report;
  std::string config;
  bool long_run = false;
  bool timing = false;
};

struct Given {
  CLI::Option* algebra;
  CLI::Option* seed;
  CLI::Option* height_bound;
  CLI::Option* max_degree;
  CLI::Option* max_l;
  CLI::Option* samples;
  CLI::Option* jobs;
  CLI::Option* criteria;
};

Given add_common(CLI::App* sub, Flags& f) {
  Given g{};
  g.algebra = sub->add_option("--algebra", f.algebra, "Simple algebra: A1, A2 or A3");
  g.seed = sub->add_option("--seed", f.seed, "Sampling seed (default 0xC0FFEE)");
  g.height_bound = sub->add_option("--height-bound", f.height_bound, "Height bound of sampled rationals (default 7)");
  g.max_degree = sub->add_option("--max-degree", f.max_degree, "Total degree bound for complex slices (default 6)");
  g.max_l = sub->add_option("--max-l", f.max_l, "Upper bound l for the combinatorics scans");
  g.samples = sub->add_option("--samples", f.samples, "Sample count for the dim V scan (default 1000)");
  g.jobs = sub->add_option("--jobs", f.jobs, "Concurrent criteria in verify-all (default 1)");
  g.criteria = sub->add_option("--criteria", f.criteria, "Acceptance criteria to run (verify-all)");
  sub->add_option("--report", f.report, "Write the JSON report array here ('-' for stdout)");
  sub->add_option("--config", f.config, "JSON config file; flags override it");
  sub->add_flag("--long", f.long_run, "Also run the sl3 complex slices");
  sub->add_flag("--timing", f.timing, "Record seconds per report");
  return g;
}

SuiteConfig resolve(const Flags& f, const Given& g) {
  SuiteConfig cfg;
  if (!f.config.empty()) {
    std::ifstream in(f.config);
    if (!in) throw ConfigError("cannot open config file " + f.config);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    cfg = SuiteConfig::from_json(j);
  }
  if (g.algebra->count()) cfg.algebra = f.algebra;
  if (g.seed->count()) cfg.seed = f.seed;
  if (g.height_bound->count()) cfg.height_bound = f.height_bound;
  if (g.max_degree->count()) cfg.max_total_degree = f.max_degree;
  if (g.max_l->count()) cfg.max_l_rc = cfg.max_l_psi = f.max_l;
  if (g.samples->count()) cfg.samples = f.samples;
  if (g.jobs->count()) cfg.jobs = f.jobs;
  if (g.criteria->count()) cfg.criteria = f.criteria;
  if (f.long_run) cfg.long_run = true;
  if (f.timing) cfg.timing = true;
  cfg.validate();
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification suites for commuting varieties, characteristic modules and Koszul complexes"};
  app.require_subcommand(1);
  Flags flags;
  std::vector<std::pair<CLI::App*, Given>> subs;
  const std::map<std::string, std::string> help = {
      {"algebra-info", "Structure data and construction checks"},
      {"invariants", "Invariant generators, polarizations, epsilon maps"},
      {"poisson", "Poisson commutativity of the shifted invariants"},
      {"charmod", "V_{x,y}, Omega witnesses, orthogonality and the module C"},
      {"scheme", "Groebner basis of I_g, dimension, radicality evidence, bicone"},
      {"complexes", "Slice cohomology of the Koszul-type complexes"},
      {"comb", "r, c, p_k, psi, phi scans"},
      {"verify-all", "Run the acceptance criteria"},
  };
  for (const auto& name : commvar::suite_names()) {
    CLI::App* sub = app.add_subcommand(name, help.at(name));
    subs.emplace_back(sub, add_common(sub, flags));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  for (const auto& [sub, given] : subs) {
    if (!sub->parsed()) continue;
    SuiteConfig cfg;
    try {
      cfg = resolve(flags, given);
    } catch (const ConfigError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
    const auto docs = commvar::run_suite(sub->get_name(), cfg);
    const std::string json = commvar::report_array(docs).dump(2) + "\n";
    if (flags.report == "-") {
      std::cout << json;
    } else {
      for (const auto& d : docs)
        std::cout << commvar::to_string(d.status) << "  " << d.suite << "/" << d.case_id << "\n";
      if (!flags.report.empty()) {
        std::ofstream out(flags.report, std::ios::binary);
        if (!out) {
          std::cerr << "error: cannot write " << flags.report << "\n";
          return 2;
        }
        out << json;
      }
    }
    const auto overall = commvar::combine(docs);
    if (flags.report != "-") std::cout << "overall: " << commvar::to_string(overall) << "\n";
    return overall == commvar::Status::Fail ? 1 : 0;
  }
  return 2;
}
