#include <CLI11.hpp>
#include <omp.h>

#include <cstdio>
#include <exception>
#include <iostream>
#include <numbers>

#include "helent/config.hpp"
#include "helent/errors.hpp"
#include "helent/inspect.hpp"
#include "helent/sweep.hpp"
#include "helent/validate.hpp"
#include "helent/version.hpp"

namespace {

// Exit codes: 0 success, 1 validation/property failure, 2 invalid config,
// 3 numerical-instability abort.
constexpr int kOk = 0;
constexpr int kValidationFailure = 1;
constexpr int kInvalidConfig = 2;
constexpr int kNumericalAbort = 3;

struct GlobalOptions {
  int threads = 0;
  double refine = 0.0;      // 0 = keep config value
  std::string output;       // empty = keep config value
};

helent::ScenarioConfig load_config(const std::string& path,
                                   const GlobalOptions& global) {
  helent::ScenarioConfig config = helent::parse_config_file(path);
  if (global.refine > 0.0) config.refine = global.refine;
  if (!global.output.empty()) config.output = global.output;
  return config;
}

int run_pair_sweep(const std::string& path, const GlobalOptions& global,
                   bool single) {
  const helent::ScenarioConfig config = load_config(path, global);
  const helent::ExecPolicy policy{true, global.threads};
  const helent::SweepResult result = single
                                         ? helent::run_single(config, policy)
                                         : helent::run_sweep(config, policy);
  helent::write_csv(result, config.output);
  std::cout << result.report << "csv = " << config.output << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"boosted helicity/spin density matrices and concurrence sweeps"};
  app.set_version_flag("--version", helent::kVersion);

  GlobalOptions global;
  app.add_option("--threads", global.threads,
                 "worker threads (0 = runtime default)");
  app.add_option("--refine", global.refine,
                 "override the config grid refinement factor");
  app.add_option("--output", global.output, "override the config output path");

  std::string config_path;
  auto* sweep = app.add_subcommand("sweep", "two-particle boost-speed sweep");
  sweep->fallthrough();
  sweep->add_option("config", config_path, "scenario config file")->required();

  auto* single = app.add_subcommand("single", "single-particle boost-speed sweep");
  single->fallthrough();
  single->add_option("config", config_path, "scenario config file")->required();

  double eta = 0.0, tau = 0.0, theta = 0.0, phi = 0.0;
  std::string mode_name = "helicity";
  auto* matrix = app.add_subcommand(
      "matrix", "print one boosted helicity/spin rotation matrix");
  matrix->fallthrough();
  matrix->add_option("--eta", eta, "boost rapidity")->required();
  matrix->add_option("--tau", tau, "momentum rapidity")->required();
  matrix->add_option("--theta", theta, "polar angle")->required();
  matrix->add_option("--phi", phi, "azimuth");
  matrix->add_option("--mode", mode_name, "helicity | spin");

  auto* validate_cmd =
      app.add_subcommand("validate", "run the full property suite");

  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalidConfig;
  }

  if (global.threads > 0) omp_set_num_threads(global.threads);

  try {
    if (*sweep) return run_pair_sweep(config_path, global, false);
    if (*single) return run_pair_sweep(config_path, global, true);
    if (*matrix) {
      helent::Mode mode;
      if (mode_name == "helicity") {
        mode = helent::Mode::helicity;
      } else if (mode_name == "spin") {
        mode = helent::Mode::spin;
      } else {
        throw std::invalid_argument("--mode must be 'helicity' or 'spin'");
      }
      std::cout << helent::inspect_matrix(eta, tau, theta, phi, mode).text;
      return kOk;
    }
    if (*validate_cmd) {
      const helent::ValidateReport report = helent::validate();
      std::cout << report.text;
      return report.all_pass ? kOk : kValidationFailure;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidConfig;
  } catch (const helent::DegenerateMomentumError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumericalAbort;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumericalAbort;
  }
  return kOk;
}
