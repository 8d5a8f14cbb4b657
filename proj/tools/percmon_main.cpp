#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "percmon/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"percmon — runtime consistency monitor for redundant perception object lists"};
  app.require_subcommand(1);

  percmon::RunArgs run_args;
  std::uint64_t seed_value = 0;
  auto* run = app.add_subcommand("run", "Run a scenario and check its expectation windows");
  run->add_option("--scenario", run_args.scenario_path, "Scenario file (JSON)")->required();
  run->add_option("--config", run_args.config_path, "Validator config file (JSON)");
  run->add_option("--zones", run_args.zones_path, "Base zones file (JSON)");
  auto* seed_opt = run->add_option("--seed", seed_value, "Seed override");
  run->add_option("--out", run_args.out_path, "Verdict log output path (JSONL)");
  run->add_option("--monitor-hz", run_args.monitor_rate_hz, "Monitor evaluation rate (default 10)");

  percmon::ValidateArgs validate_args;
  auto* validate = app.add_subcommand("validate", "Validate one camera/LiDAR frame pair");
  validate->add_option("--camera", validate_args.camera_path, "Camera ObjectListFrame file")
      ->required();
  validate->add_option("--lidar", validate_args.lidar_path, "LiDAR ObjectListFrame file")
      ->required();
  validate->add_option("--ego", validate_args.ego_path, "EgoState file")->required();
  validate->add_option("--config", validate_args.config_path, "Validator config file (JSON)");
  validate->add_option("--zones", validate_args.zones_path, "Base zones file (JSON)");

  percmon::RoiArgs roi_args;
  auto* roi = app.add_subcommand("roi", "Print the region of interest for an ego state");
  roi->add_option("--ego", roi_args.ego_path, "EgoState file")->required();
  roi->add_option("--zones", roi_args.zones_path, "Base zones file (JSON)");

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) {
    if (!seed_opt->empty()) run_args.seed = seed_value;
    return percmon::cmd_run(run_args, std::cout, std::cerr);
  }
  if (validate->parsed()) return percmon::cmd_validate(validate_args, std::cout, std::cerr);
  if (roi->parsed()) return percmon::cmd_roi(roi_args, std::cout, std::cerr);
  return 2;
}
