#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "percmon/bus.hpp"
#include "percmon/mode_control.hpp"
#include "percmon/scenario.hpp"
#include "percmon/types.hpp"
#include "percmon/validator.hpp"

namespace percmon {

// Event-driven, seeded scenario execution on a virtual clock (wall time is never
// read). The simulator, monitor and mode control are wired over the in-process
// bus; verdicts and mode transitions are tapped into a line-delimited log.
// Identical (scenario, config, seed) inputs produce a byte-identical log.

namespace topics {
inline constexpr const char* kCameraObjects = "perception/camera/objects";
inline constexpr const char* kLidarObjects = "perception/lidar/objects";
inline constexpr const char* kEgoState = "ego/state";
inline constexpr const char* kVerdict = "monitor/verdict";
inline constexpr const char* kMode = "monitor/mode";
}  // namespace topics

struct RunOptions {
  double monitor_rate_hz = 10.0;
  ModePolicy mode_policy;
  std::size_t buffer_capacity = 16;
  RoiParams roi_params;
};

struct VerdictLog {
  std::vector<ValidationVerdict> verdicts;   // in emission order
  std::vector<ModeTransition> transitions;   // mode changes only
  std::vector<std::string> lines;            // canonical JSONL, interleaved as emitted

  std::string joined() const;
};

struct ExpectationResult {
  ExpectationWindow window;
  std::size_t total = 0;    // verdicts inside the window
  std::size_t matching = 0; // verdicts with the expected status
  bool passed = false;      // matching/total >= 0.95, vacuously true when empty
};

// Throws std::invalid_argument on invalid config or run options.
VerdictLog run(const Scenario& scenario, const ValidatorConfig& cfg, const BaseZones& zones,
               const RunOptions& options = {});

// Each expectation window passes when at least 95% of the verdicts inside it
// carry the expected status (tolerates warm-up ticks).
std::vector<ExpectationResult> check_expectations(const VerdictLog& log,
                                                  const Scenario& scenario);

}  // namespace percmon
