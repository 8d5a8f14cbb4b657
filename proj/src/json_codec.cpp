#include "percmon/json_codec.hpp"

#include <fstream>

namespace percmon {

using nlohmann::json;

namespace {

// Field extraction with path-tagged error collecting.
class Reader {
 public:
  Reader(const json& j, std::vector<std::string>& errors, std::string path)
      : j_(j), errors_(errors), path_(std::move(path)) {}

  bool is_object() {
    if (j_.is_object()) return true;
    fail("", "must be an object");
    return false;
  }

  std::optional<std::int64_t> integer(const char* field) {
    const json* v = get(field);
    if (v == nullptr) return std::nullopt;
    if (!v->is_number_integer()) {
      fail(field, "must be an integer");
      return std::nullopt;
    }
    return v->get<std::int64_t>();
  }

  std::optional<double> number(const char* field) {
    const json* v = get(field);
    if (v == nullptr) return std::nullopt;
    if (!v->is_number()) {
      fail(field, "must be a number");
      return std::nullopt;
    }
    return v->get<double>();
  }

  std::optional<std::string> text(const char* field) {
    const json* v = get(field);
    if (v == nullptr) return std::nullopt;
    if (!v->is_string()) {
      fail(field, "must be a string");
      return std::nullopt;
    }
    return v->get<std::string>();
  }

  std::optional<bool> boolean(const char* field) {
    const json* v = get(field);
    if (v == nullptr) return std::nullopt;
    if (!v->is_boolean()) {
      fail(field, "must be a boolean");
      return std::nullopt;
    }
    return v->get<bool>();
  }

  const json* array(const char* field) {
    const json* v = get(field);
    if (v == nullptr) return nullptr;
    if (!v->is_array()) {
      fail(field, "must be an array");
      return nullptr;
    }
    return v;
  }

  const json* object(const char* field) {
    const json* v = get(field);
    if (v == nullptr) return nullptr;
    if (!v->is_object()) {
      fail(field, "must be an object");
      return nullptr;
    }
    return v;
  }

  void fail(const std::string& field, const std::string& what) {
    std::string where = path_;
    if (!field.empty()) where = where.empty() ? field : where + "." + field;
    errors_.push_back(where.empty() ? what : where + ": " + what);
  }

  std::string sub_path(const std::string& field) const {
    return path_.empty() ? field : path_ + "." + field;
  }

 private:
  const json* get(const char* field) {
    if (!j_.is_object()) {
      fail("", "must be an object");
      return nullptr;
    }
    auto it = j_.find(field);
    if (it == j_.end()) {
      fail(field, "missing required field");
      return nullptr;
    }
    return &*it;
  }

  const json& j_;
  std::vector<std::string>& errors_;
  std::string path_;
};

json vec2_to_json(Vec2 v) { return json{{"x_m", v.x_m}, {"y_m", v.y_m}}; }

}  // namespace

std::optional<SensorSource> source_from_label(const std::string& label) {
  if (label == "Camera") return SensorSource::Camera;
  if (label == "Lidar") return SensorSource::Lidar;
  return std::nullopt;
}

std::optional<VerdictStatus> status_from_label(const std::string& label) {
  if (label == "Consistent") return VerdictStatus::Consistent;
  if (label == "Inconsistent") return VerdictStatus::Inconsistent;
  if (label == "NoData") return VerdictStatus::NoData;
  return std::nullopt;
}

json to_json(const DetectedObject& obj) {
  return json{{"class_label", obj.class_label},
              {"width_m", obj.width_m},
              {"height_m", obj.height_m},
              {"position", vec2_to_json(obj.position)},
              {"confidence", obj.confidence},
              {"sensed_at", obj.sensed_at.t_ms},
              {"source", source_label(obj.source)}};
}

json to_json(const ObjectListFrame& frame) {
  json objects = json::array();
  for (const auto& obj : frame.objects) objects.push_back(to_json(obj));
  return json{{"source", source_label(frame.source)},
              {"frame_time", frame.frame_time.t_ms},
              {"objects", std::move(objects)}};
}

json to_json(const EgoState& ego) {
  return json{{"speed_mps", ego.speed_mps},
              {"steering_angle_rad", ego.steering_angle_rad},
              {"wheelbase_m", ego.wheelbase_m},
              {"body_length_m", ego.body_length_m},
              {"body_width_m", ego.body_width_m},
              {"max_decel_mps2", ego.max_decel_mps2},
              {"reaction_time_s", ego.reaction_time_s},
              {"at", ego.at.t_ms}};
}

json to_json(const ValidatorConfig& cfg) {
  return json{{"stale_timeout_ms", cfg.stale_timeout_ms},
              {"pair_max_dt_ms", cfg.pair_max_dt_ms},
              {"max_center_dist_m", cfg.max_center_dist_m},
              {"max_width_diff_m", cfg.max_width_diff_m},
              {"max_height_diff_m", cfg.max_height_diff_m},
              {"min_confidence", cfg.min_confidence},
              {"require_class_equal", cfg.require_class_equal},
              {"nodata_timeout_ms", cfg.nodata_timeout_ms}};
}

json to_json(const ZoneSpec& spec) {
  return json{{"near_m", spec.near_m},
              {"far_m", spec.far_m},
              {"left_m", spec.left_m},
              {"right_m", spec.right_m}};
}

json to_json(const BaseZones& zones) {
  return json{{"clear", to_json(zones.clear)}, {"focus", to_json(zones.focus)}};
}

json to_json(const ZonePolygon& poly) {
  json vertices = json::array();
  for (const auto& v : poly.vertices) vertices.push_back(vec2_to_json(v));
  return vertices;
}

json roi_record(const RegionOfInterest& roi) {
  return json{{"clear", to_json(roi.clear)},
              {"focus", to_json(roi.focus)},
              {"computed_at", roi.computed_at.t_ms}};
}

json verdict_record(const ValidationVerdict& verdict) {
  json record{{"type", "verdict"},
              {"t_ms", verdict.at.t_ms},
              {"status", verdict_status_label(verdict.status)},
              {"roi", json{{"clear", to_json(verdict.roi.clear)},
                           {"focus", to_json(verdict.roi.focus)}}}};
  if (verdict.no_data_side) record["no_data_side"] = source_label(*verdict.no_data_side);
  if (verdict.report) {
    json pairs = json::array();
    for (const auto& [c, l] : verdict.report->pairs)
      pairs.push_back(json{{"camera", c}, {"lidar", l}});
    json rejects = json::array();
    for (const auto& r : verdict.report->reject_reasons)
      rejects.push_back(json{{"camera", r.camera_index},
                             {"lidar", r.lidar_index},
                             {"reason", reject_reason_label(r.reason)}});
    record["pairs"] = std::move(pairs);
    record["unmatched_camera"] = verdict.report->unmatched_camera;
    record["unmatched_lidar"] = verdict.report->unmatched_lidar;
    record["reject_reasons"] = std::move(rejects);
  }
  return record;
}

json mode_record(const ModeTransition& transition) {
  return json{{"type", "mode"},
              {"t_ms", transition.at.t_ms},
              {"from", ads_mode_label(transition.from)},
              {"to", ads_mode_label(transition.to)},
              {"cause", mode_cause_label(transition.cause)}};
}

std::string to_jsonl_line(const json& record) { return record.dump(); }

json payload_record(const Payload& payload) {
  if (const auto* frame = std::get_if<ObjectListFrame>(&payload)) return to_json(*frame);
  if (const auto* ego = std::get_if<EgoState>(&payload)) return to_json(*ego);
  if (const auto* verdict = std::get_if<ValidationVerdict>(&payload))
    return verdict_record(*verdict);
  return mode_record(std::get<ModeTransition>(payload));
}

Bus::SubscriptionId attach_jsonl_tap(Bus& bus, const std::string& topic,
                                     std::function<void(const std::string&)> sink) {
  return bus.subscribe(topic, [sink = std::move(sink)](const Payload& payload, Timestamp) {
    sink(to_jsonl_line(payload_record(payload)));
  });
}

std::optional<DetectedObject> detected_object_from_json(const json& j,
                                                        std::vector<std::string>& errors,
                                                        const std::string& path) {
  const std::size_t before = errors.size();
  Reader r(j, errors, path);
  if (!r.is_object()) return std::nullopt;

  DetectedObject obj;
  if (auto v = r.text("class_label")) obj.class_label = *v;
  if (auto v = r.number("width_m")) obj.width_m = *v;
  if (auto v = r.number("height_m")) obj.height_m = *v;
  if (const json* pos = r.object("position")) {
    Reader pr(*pos, errors, r.sub_path("position"));
    if (auto v = pr.number("x_m")) obj.position.x_m = *v;
    if (auto v = pr.number("y_m")) obj.position.y_m = *v;
  }
  if (auto v = r.number("confidence")) obj.confidence = *v;
  if (auto v = r.integer("sensed_at")) obj.sensed_at = Timestamp{*v};
  if (auto v = r.text("source")) {
    if (auto s = source_from_label(*v))
      obj.source = *s;
    else
      r.fail("source", "must be \"Camera\" or \"Lidar\"");
  }
  if (errors.size() != before) return std::nullopt;
  return obj;
}

std::optional<ObjectListFrame> frame_from_json(const json& j, std::vector<std::string>& errors,
                                               const std::string& path) {
  const std::size_t before = errors.size();
  Reader r(j, errors, path);
  if (!r.is_object()) return std::nullopt;

  ObjectListFrame frame;
  if (auto v = r.text("source")) {
    if (auto s = source_from_label(*v))
      frame.source = *s;
    else
      r.fail("source", "must be \"Camera\" or \"Lidar\"");
  }
  if (auto v = r.integer("frame_time")) frame.frame_time = Timestamp{*v};
  if (const json* objects = r.array("objects")) {
    for (std::size_t i = 0; i < objects->size(); ++i) {
      auto obj = detected_object_from_json(
          (*objects)[i], errors, r.sub_path("objects[" + std::to_string(i) + "]"));
      if (obj) frame.objects.push_back(std::move(*obj));
    }
  }
  if (errors.size() != before) return std::nullopt;
  for (const auto& e : validate_frame(frame))
    errors.push_back(path.empty() ? e : path + "." + e);
  if (errors.size() != before) return std::nullopt;
  return frame;
}

std::optional<EgoState> ego_from_json(const json& j, std::vector<std::string>& errors,
                                      const std::string& path) {
  const std::size_t before = errors.size();
  Reader r(j, errors, path);
  if (!r.is_object()) return std::nullopt;

  EgoState ego;
  if (auto v = r.number("speed_mps")) ego.speed_mps = *v;
  if (auto v = r.number("steering_angle_rad")) ego.steering_angle_rad = *v;
  if (auto v = r.number("wheelbase_m")) ego.wheelbase_m = *v;
  if (auto v = r.number("body_length_m")) ego.body_length_m = *v;
  if (auto v = r.number("body_width_m")) ego.body_width_m = *v;
  if (auto v = r.number("max_decel_mps2")) ego.max_decel_mps2 = *v;
  if (auto v = r.number("reaction_time_s")) ego.reaction_time_s = *v;
  if (auto v = r.integer("at")) ego.at = Timestamp{*v};
  if (errors.size() != before) return std::nullopt;
  for (const auto& e : validate_ego(ego)) errors.push_back(path.empty() ? e : path + "." + e);
  if (errors.size() != before) return std::nullopt;
  return ego;
}

std::optional<ValidatorConfig> config_from_json(const json& j, std::vector<std::string>& errors,
                                                const std::string& path) {
  const std::size_t before = errors.size();
  Reader r(j, errors, path);
  if (!r.is_object()) return std::nullopt;

  ValidatorConfig cfg;
  if (auto v = r.integer("stale_timeout_ms")) cfg.stale_timeout_ms = *v;
  if (auto v = r.integer("pair_max_dt_ms")) cfg.pair_max_dt_ms = *v;
  if (auto v = r.number("max_center_dist_m")) cfg.max_center_dist_m = *v;
  if (auto v = r.number("max_width_diff_m")) cfg.max_width_diff_m = *v;
  if (auto v = r.number("max_height_diff_m")) cfg.max_height_diff_m = *v;
  if (auto v = r.number("min_confidence")) cfg.min_confidence = *v;
  if (auto v = r.boolean("require_class_equal")) cfg.require_class_equal = *v;
  if (auto v = r.integer("nodata_timeout_ms")) cfg.nodata_timeout_ms = *v;
  if (errors.size() != before) return std::nullopt;
  for (const auto& e : validate_config(cfg)) errors.push_back(path.empty() ? e : path + "." + e);
  if (errors.size() != before) return std::nullopt;
  return cfg;
}

std::optional<ZoneSpec> zone_spec_from_json(const json& j, std::vector<std::string>& errors,
                                            const std::string& path) {
  const std::size_t before = errors.size();
  Reader r(j, errors, path);
  if (!r.is_object()) return std::nullopt;

  ZoneSpec spec;
  if (auto v = r.number("near_m")) spec.near_m = *v;
  if (auto v = r.number("far_m")) spec.far_m = *v;
  if (auto v = r.number("left_m")) spec.left_m = *v;
  if (auto v = r.number("right_m")) spec.right_m = *v;
  if (errors.size() != before) return std::nullopt;
  for (const auto& e : validate_zone_spec(spec, "")) {
    errors.push_back(path.empty() ? e : path + "." + e);
  }
  if (errors.size() != before) return std::nullopt;
  return spec;
}

std::optional<BaseZones> base_zones_from_json(const json& j, std::vector<std::string>& errors,
                                              const std::string& path) {
  const std::size_t before = errors.size();
  Reader r(j, errors, path);
  if (!r.is_object()) return std::nullopt;

  BaseZones zones;
  if (const json* clear = r.object("clear")) {
    if (auto v = zone_spec_from_json(*clear, errors, r.sub_path("clear"))) zones.clear = *v;
  }
  if (const json* focus = r.object("focus")) {
    if (auto v = zone_spec_from_json(*focus, errors, r.sub_path("focus"))) zones.focus = *v;
  }
  if (errors.size() != before) return std::nullopt;
  if (zones.focus.far_m < zones.clear.far_m) {
    errors.push_back((path.empty() ? std::string("focus") : path + ".focus") +
                     ".far_m: must be >= clear.far_m");
    return std::nullopt;
  }
  return zones;
}

std::optional<json> load_json_file(const std::string& path, std::vector<std::string>& errors) {
  std::ifstream in(path);
  if (!in) {
    errors.push_back("cannot open file: " + path);
    return std::nullopt;
  }
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) {
    errors.push_back("invalid JSON in file: " + path);
    return std::nullopt;
  }
  return j;
}

}  // namespace percmon
