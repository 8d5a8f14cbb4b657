#include "percmon/types.hpp"

#include <cmath>

namespace percmon {

namespace {

bool finite(double v) { return std::isfinite(v); }

void require(bool ok, const char* msg, std::vector<std::string>& out) {
  if (!ok) out.emplace_back(msg);
}

}  // namespace

std::vector<std::string> validate_config(const ValidatorConfig& cfg) {
  std::vector<std::string> errors;
  require(cfg.stale_timeout_ms > 0, "stale_timeout_ms must be > 0", errors);
  require(cfg.pair_max_dt_ms > 0, "pair_max_dt_ms must be > 0", errors);
  require(cfg.nodata_timeout_ms > 0, "nodata_timeout_ms must be > 0", errors);
  require(finite(cfg.max_center_dist_m) && cfg.max_center_dist_m > 0.0,
          "max_center_dist_m must be > 0", errors);
  require(finite(cfg.max_width_diff_m) && cfg.max_width_diff_m > 0.0,
          "max_width_diff_m must be > 0", errors);
  require(finite(cfg.max_height_diff_m) && cfg.max_height_diff_m > 0.0,
          "max_height_diff_m must be > 0", errors);
  require(finite(cfg.min_confidence) && cfg.min_confidence >= 0.0 && cfg.min_confidence <= 1.0,
          "min_confidence must be in [0, 1]", errors);
  if (cfg.stale_timeout_ms > 0 && cfg.pair_max_dt_ms > 0) {
    require(cfg.pair_max_dt_ms <= cfg.stale_timeout_ms,
            "pair_max_dt_ms must be <= stale_timeout_ms", errors);
  }
  return errors;
}

std::vector<std::string> validate_zone_spec(const ZoneSpec& spec, const std::string& prefix) {
  std::vector<std::string> errors;
  auto field = [&](const char* name, const char* what) {
    errors.push_back(prefix.empty() ? std::string(name) + " " + what
                                    : prefix + "." + name + " " + what);
  };
  if (!finite(spec.near_m) || spec.near_m < 0.0) field("near_m", "must be >= 0 and finite");
  if (!finite(spec.far_m) || !(spec.far_m > spec.near_m)) field("far_m", "must be > near_m");
  if (!finite(spec.left_m) || spec.left_m <= 0.0) field("left_m", "must be > 0");
  if (!finite(spec.right_m) || spec.right_m <= 0.0) field("right_m", "must be > 0");
  return errors;
}

std::vector<std::string> validate_ego(const EgoState& ego) {
  std::vector<std::string> errors;
  require(finite(ego.speed_mps) && ego.speed_mps >= 0.0, "speed_mps must be >= 0 and finite",
          errors);
  require(finite(ego.steering_angle_rad), "steering_angle_rad must be finite", errors);
  require(finite(ego.wheelbase_m) && ego.wheelbase_m > 0.0, "wheelbase_m must be > 0", errors);
  require(finite(ego.body_length_m) && ego.body_length_m > 0.0, "body_length_m must be > 0",
          errors);
  require(finite(ego.body_width_m) && ego.body_width_m > 0.0, "body_width_m must be > 0", errors);
  require(finite(ego.max_decel_mps2) && ego.max_decel_mps2 > 0.0, "max_decel_mps2 must be > 0",
          errors);
  require(finite(ego.reaction_time_s) && ego.reaction_time_s >= 0.0,
          "reaction_time_s must be >= 0", errors);
  require(ego.at.t_ms >= 0, "at must be >= 0", errors);
  return errors;
}

std::vector<std::string> validate_frame(const ObjectListFrame& frame) {
  std::vector<std::string> errors;
  if (frame.frame_time.t_ms < 0) errors.emplace_back("frame_time must be >= 0");
  for (std::size_t i = 0; i < frame.objects.size(); ++i) {
    const auto& obj = frame.objects[i];
    auto field = [&](const char* name, const char* what) {
      errors.push_back("objects[" + std::to_string(i) + "]." + name + " " + what);
    };
    if (obj.source != frame.source) field("source", "must equal frame source");
    if (obj.sensed_at > frame.frame_time) field("sensed_at", "must be <= frame_time");
    if (obj.sensed_at.t_ms < 0) field("sensed_at", "must be >= 0");
    if (!finite(obj.width_m) || obj.width_m < 0.0) field("width_m", "must be >= 0 and finite");
    if (!finite(obj.height_m) || obj.height_m < 0.0) field("height_m", "must be >= 0 and finite");
    if (!finite(obj.confidence) || obj.confidence < 0.0 || obj.confidence > 1.0)
      field("confidence", "must be in [0, 1]");
    if (!finite(obj.position.x_m) || !finite(obj.position.y_m))
      field("position", "must be finite");
  }
  return errors;
}

}  // namespace percmon
