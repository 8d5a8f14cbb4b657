#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "percmon/mode_control.hpp"
#include "percmon/simulator.hpp"

namespace percmon {

// Command implementations behind the percmon binary. Everything is files and
// standard streams; no interactive mode. Exit codes are a total function of the
// outcome:
//   run:      0 all expectations pass, 1 expectation failure, 2 parse/config error
//   validate: 0 Consistent, 1 Inconsistent, 3 NoData, 2 malformed input
//   roi:      0 ok, 2 malformed input

struct RunSummary {
  std::string scenario_name;
  std::map<std::string, std::size_t> verdict_counts;  // keyed by status label
  std::vector<ModeTransition> transitions;
  std::vector<ExpectationResult> expectations;
  double wall_runtime_s = 0.0;

  std::size_t total_verdicts() const;
};

struct RunArgs {
  std::string scenario_path;
  std::optional<std::string> config_path;
  std::optional<std::string> zones_path;
  std::optional<std::uint64_t> seed;  // overrides the scenario seed
  std::optional<std::string> out_path;
  double monitor_rate_hz = 10.0;
};

struct ValidateArgs {
  std::string camera_path;
  std::string lidar_path;
  std::string ego_path;
  std::optional<std::string> config_path;
  std::optional<std::string> zones_path;
};

struct RoiArgs {
  std::string ego_path;
  std::optional<std::string> zones_path;
};

int cmd_run(const RunArgs& args, std::ostream& out, std::ostream& err);
int cmd_validate(const ValidateArgs& args, std::ostream& out, std::ostream& err);
int cmd_roi(const RoiArgs& args, std::ostream& out, std::ostream& err);

void print_summary(const RunSummary& summary, std::ostream& out);

}  // namespace percmon
