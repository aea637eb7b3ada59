// Command line front end. Links only the public C API.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "crbuilding.h"

namespace {

long long env_cap(const char* name, long long fallback) {
  const char* v = std::getenv(name);
  if (!v) return fallback;
  char* end = nullptr;
  long long out = std::strtoll(v, &end, 10);
  if (end == v || *end != '\0' || out <= 0) {
    std::cerr << "warning: ignoring invalid " << name << "='" << v << "'\n";
    return fallback;
  }
  return out;
}

int run_file(const std::string& path, const std::string& out_path, const crb_options& opts,
             bool require_corpus) {
  char err[512];
  crb_scenario* sc = nullptr;
  crb_status st = crb_scenario_parse_file(path.c_str(), &sc, err, sizeof err);
  if (st != CRB_OK) {
    std::cerr << "error: " << err << "\n";
    return 2;
  }
  if (require_corpus && std::string(crb_scenario_analysis(sc)) != "corpus") {
    std::cerr << "error: scenario '" << crb_scenario_id(sc) << "' does not declare analysis = corpus\n";
    crb_scenario_free(sc);
    return 2;
  }

  crb_report* rep = nullptr;
  st = crb_run(sc, &opts, &rep, err, sizeof err);
  if (st != CRB_OK) {
    std::cerr << "error running '" << crb_scenario_id(sc) << "': " << err << "\n";
    crb_scenario_free(sc);
    return 2;
  }

  if (out_path.empty()) {
    std::cout << crb_report_json(rep);
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      crb_report_free(rep);
      crb_scenario_free(sc);
      return 2;
    }
    out << crb_report_json(rep);
  }

  int consistent = crb_report_consistent(rep);
  std::cerr << "scenario " << crb_scenario_id(sc) << " [" << crb_scenario_analysis(sc) << "]: "
            << (consistent ? "completed, all cross-checks held" : "completed with CROSS-CHECK FAILURES")
            << "\n";
  crb_report_free(rep);
  crb_scenario_free(sc);
  return consistent ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string("crbuilding ") + crb_version() +
               " - spherical buildings of GL_n(F_q) and complete reducibility"};
  app.require_subcommand(1);

  crb_options opts;
  crb_options_init(&opts);
  opts.cap_order = env_cap("CRB_CAP_ORDER", opts.cap_order);
  opts.cap_subspaces = env_cap("CRB_CAP_SUBSPACES", opts.cap_subspaces);

  std::string scenario_path, out_path;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("scenario", scenario_path, "scenario file")->required();
    cmd->add_option("--out", out_path, "write the JSON report here instead of stdout");
    cmd->add_option("--cap-order", opts.cap_order, "group closure/enumeration cap");
    cmd->add_option("--cap-subspaces", opts.cap_subspaces, "building simplex cap");
    cmd->add_option("--seed", opts.seed, "seed for randomized spot checks (never affects verdicts)");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "run the analysis a scenario file declares");
  add_common(analyze);
  CLI::App* corpus = app.add_subcommand("corpus", "run an exhaustive subgroup corpus scenario");
  add_common(corpus);

  CLI11_PARSE(app, argc, argv);

  if (app.got_subcommand(analyze)) return run_file(scenario_path, out_path, opts, false);
  return run_file(scenario_path, out_path, opts, true);
}
