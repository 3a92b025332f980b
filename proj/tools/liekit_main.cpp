// liekit: run check suites against catalog groups and representations.
//
//   liekit run --group gl:2 --suite structure --seed 1 --json out.json
//   liekit list
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 bad input,
// 3 numerical breakdown.

#include "liekit/errors.hpp"
#include "liekit/suites.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>

namespace {

int run(const liekit::SuiteOptions &opt, const std::string &json_path, bool record_time) {
  const auto t0 = std::chrono::steady_clock::now();
  liekit::CheckReport report = liekit::run_suite(opt);
  const std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - t0;
  if (record_time) report.wall_time_ms = dt.count();

  std::cout << liekit::to_table(report);
  if (!record_time) std::printf("wall time %.1f ms\n", dt.count());
  if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << json_path << "\n";
      return 2;
    }
    out << liekit::to_json(report);
  }
  return report.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Numeric checks for Lie group charts and their representations"};
  app.require_subcommand(1);

  liekit::SuiteOptions opt;
  std::string rep, fd_step = "auto", json_path;
  std::uint64_t seed = 42;
  std::size_t samples = 20;
  bool record_time = false;

  auto *run_cmd = app.add_subcommand("run", "run a check suite");
  run_cmd->add_option("--group", opt.group, "catalog group, e.g. gl:2")->required();
  run_cmd->add_option("--rep", rep, "catalog representation");
  run_cmd->add_option("--suite", opt.suite, "shift|structure|flows|rep|pde|all")
      ->capture_default_str();
  run_cmd->add_option("--seed", seed)->capture_default_str();
  run_cmd->add_option("--samples", samples)->capture_default_str()->check(CLI::PositiveNumber);
  run_cmd->add_option("--fd-step", fd_step, "auto or a positive real")->capture_default_str();
  run_cmd->add_option("--tol-scale", opt.tol_scale)->capture_default_str();
  run_cmd->add_option("--json", json_path, "write the report here");
  run_cmd->add_flag("--record-time", record_time, "store wall time in the report");

  auto *list_cmd = app.add_subcommand("list", "print the catalog and suite names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (list_cmd->parsed()) {
    std::cout << "groups: translation:N (N<=9), multiplicative, affine, gl:N (N<=3)\n";
    std::cout << "reps:  ";
    for (const auto &r : liekit::catalog_rep_names()) std::cout << " " << r;
    std::cout << "\nsuites:";
    for (const auto &s : liekit::suite_names()) std::cout << " " << s;
    std::cout << "\n";
    return 0;
  }

  try {
    if (!rep.empty()) opt.rep = rep;
    opt.cfg.rng_seed = seed;
    opt.cfg.sample_count = samples;
    if (fd_step != "auto") {
      std::size_t used = 0;
      opt.cfg.h = std::stod(fd_step, &used);
      if (used != fd_step.size()) throw liekit::InvalidArgument("bad --fd-step " + fd_step);
    }
    return run(opt, json_path, record_time);
  } catch (const liekit::NumericalError &e) {
    std::cerr << "numerical breakdown: " << e.what() << "\n";
    return 3;
  } catch (const liekit::Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument &) {
    std::cerr << "error: bad --fd-step " << fd_step << "\n";
    return 2;
  }
}
