#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace percmon {

// Units policy:
// - distances in meters, angles in radians
// - time as integer milliseconds on one monotonic run clock (shared origin)

// -----------------------------
// Time
// -----------------------------

struct Timestamp {
  std::int64_t t_ms = 0;

  auto operator<=>(const Timestamp&) const = default;
};

// Age of an event at `now`; positive when the event lies in the past.
inline std::int64_t age_ms(Timestamp now, Timestamp event) { return now.t_ms - event.t_ms; }

// -----------------------------
// Sensor sources
// -----------------------------
// Exactly two redundant perception sources feed one validator instance.

enum class SensorSource { Camera, Lidar };

inline const char* source_label(SensorSource s) {
  return s == SensorSource::Camera ? "Camera" : "Lidar";
}

// -----------------------------
// Geometry primitives
// -----------------------------

struct Vec2 {
  double x_m = 0.0;  // forward
  double y_m = 0.0;  // left

  bool operator==(const Vec2&) const = default;
};

inline double euclid(Vec2 a, Vec2 b) { return std::hypot(a.x_m - b.x_m, a.y_m - b.y_m); }

// -----------------------------
// Detected objects
// -----------------------------
// One perceived object in the vehicle frame (origin rear-axle center, x forward, y left).
// The 2.5D box carries width and height only; there is deliberately no length field.

struct DetectedObject {
  std::string class_label;  // exact-match label from the shared detector label set
  double width_m = 0.0;
  double height_m = 0.0;
  Vec2 position;
  double confidence = 0.0;  // in [0, 1]
  Timestamp sensed_at;
  SensorSource source = SensorSource::Camera;

  bool operator==(const DetectedObject&) const = default;
};

// A timestamped batch of detections from one source. The list may be empty;
// an empty list is a valid observation, not a missing one.
struct ObjectListFrame {
  SensorSource source = SensorSource::Camera;
  Timestamp frame_time;
  std::vector<DetectedObject> objects;

  bool operator==(const ObjectListFrame&) const = default;
};

// -----------------------------
// Ego state
// -----------------------------

struct EgoState {
  double speed_mps = 0.0;
  double steering_angle_rad = 0.0;  // positive = left
  double wheelbase_m = 0.36;
  double body_length_m = 0.55;
  double body_width_m = 0.24;
  double max_decel_mps2 = 2.0;
  double reaction_time_s = 0.5;
  Timestamp at;

  bool operator==(const EgoState&) const = default;
};

// -----------------------------
// Zone base specs
// -----------------------------
// near_m/far_m: longitudinal extent ahead of the front bumper, 0 <= near < far.
// left_m/right_m: lateral half-extents (> 0).

struct ZoneSpec {
  double near_m = 0.0;
  double far_m = 1.0;
  double left_m = 0.5;
  double right_m = 0.5;

  bool operator==(const ZoneSpec&) const = default;
};

struct BaseZones {
  ZoneSpec clear;
  ZoneSpec focus;

  bool operator==(const BaseZones&) const = default;
};

// Lab defaults at 1:8 model-car scale. The clear zone surrounds the body outline;
// the focus zone extents are absolute half-widths. All of this is config, nothing
// is derived internally.
inline BaseZones default_base_zones() {
  BaseZones z;
  z.clear = ZoneSpec{0.0, 0.06, 0.025, 0.025};
  z.focus = ZoneSpec{0.22, 1.2, 0.55, 0.55};
  return z;
}

// -----------------------------
// Validator configuration
// -----------------------------
// Thresholds are inputs (established externally, e.g. by a hazard analysis); the
// validator never derives them. Conventions: staleness is strict ("older than"),
// threshold comparisons are inclusive (<=).

struct ValidatorConfig {
  std::int64_t stale_timeout_ms = 2000;  // per-object pruning
  std::int64_t pair_max_dt_ms = 1000;    // matched-pair timestamp gap
  double max_center_dist_m = 0.10;
  double max_width_diff_m = 0.5;
  double max_height_diff_m = 0.5;
  double min_confidence = 0.25;
  bool require_class_equal = true;
  std::int64_t nodata_timeout_ms = 2000;  // frame freshness; starvation -> NoData

  bool operator==(const ValidatorConfig&) const = default;
};

// Returns every violated invariant with the offending field name; empty means ok.
std::vector<std::string> validate_config(const ValidatorConfig& cfg);

// Same reporting style for the other externally-supplied inputs.
std::vector<std::string> validate_zone_spec(const ZoneSpec& spec, const std::string& prefix);
std::vector<std::string> validate_ego(const EgoState& ego);
std::vector<std::string> validate_frame(const ObjectListFrame& frame);

}  // namespace percmon
