#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "percmon/types.hpp"
#include "percmon/validator.hpp"

namespace percmon {

// Declarative test scenarios: ego timeline, true objects with per-sensor
// visibility, sensor rate/noise models and expected verdict windows. Trajectories
// are in the vehicle frame and piecewise-linear, clamped at their endpoints
// (a single trajectory point is a static object).

struct TrajectoryPoint {
  std::int64_t t_ms = 0;
  double x_m = 0.0;
  double y_m = 0.0;
};

struct Actor {
  std::string id;
  std::string class_label;
  double width_m = 0.0;
  double height_m = 0.0;
  std::vector<TrajectoryPoint> trajectory;  // t strictly increasing
  std::set<SensorSource> visible_to;
};

struct SensorModel {
  SensorSource source = SensorSource::Camera;
  double rate_hz = 10.0;
  std::int64_t latency_ms = 0;
  double dropout_prob = 0.0;  // in [0, 1): whole frames dropped
  double position_noise_sigma_m = 0.0;
  double size_noise_sigma_m = 0.0;
  double confidence_min = 1.0;
  double confidence_max = 1.0;  // confidence drawn uniformly from [min, max]
};

struct EgoTimelinePoint {
  std::int64_t t_ms = 0;
  double speed_mps = 0.0;
  double steering_angle_rad = 0.0;
};

struct EgoParams {
  double wheelbase_m = 0.36;
  double body_length_m = 0.55;
  double body_width_m = 0.24;
  double max_decel_mps2 = 2.0;
  double reaction_time_s = 0.5;
};

struct ExpectationWindow {
  std::int64_t t_from_ms = 0;
  std::int64_t t_to_ms = 0;
  VerdictStatus status = VerdictStatus::Consistent;
};

struct Scenario {
  std::string name;
  std::int64_t duration_ms = 0;
  std::vector<EgoTimelinePoint> ego_timeline;  // first point at t=0, t strictly increasing
  EgoParams ego_params;
  std::vector<Actor> actors;
  SensorModel camera;
  SensorModel lidar;
  std::vector<ExpectationWindow> expected;
  std::uint64_t seed = 0;
};

// Position of an actor at time t (piecewise-linear, clamped).
Vec2 actor_position(const Actor& actor, std::int64_t t_ms);

// Ego state at time t: zero-order hold of the last timeline point at or before t.
EgoState ego_state_at(const Scenario& scenario, std::int64_t t_ms);

struct ScenarioLoadResult {
  std::optional<Scenario> scenario;
  std::vector<std::string> errors;  // every violation, with a path into the document

  bool ok() const { return scenario.has_value() && errors.empty(); }
};

ScenarioLoadResult scenario_from_json(const nlohmann::json& j);
ScenarioLoadResult load_scenario(const std::string& path);

}  // namespace percmon
