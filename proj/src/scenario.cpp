#include "percmon/scenario.hpp"

#include <algorithm>
#include <cmath>

#include "percmon/json_codec.hpp"

namespace percmon {

using nlohmann::json;

Vec2 actor_position(const Actor& actor, std::int64_t t_ms) {
  const auto& traj = actor.trajectory;
  if (traj.empty()) return Vec2{};
  if (t_ms <= traj.front().t_ms) return Vec2{traj.front().x_m, traj.front().y_m};
  if (t_ms >= traj.back().t_ms) return Vec2{traj.back().x_m, traj.back().y_m};
  for (std::size_t i = 1; i < traj.size(); ++i) {
    if (t_ms <= traj[i].t_ms) {
      const auto& a = traj[i - 1];
      const auto& b = traj[i];
      const double f = static_cast<double>(t_ms - a.t_ms) / static_cast<double>(b.t_ms - a.t_ms);
      return Vec2{a.x_m + (b.x_m - a.x_m) * f, a.y_m + (b.y_m - a.y_m) * f};
    }
  }
  return Vec2{traj.back().x_m, traj.back().y_m};
}

EgoState ego_state_at(const Scenario& scenario, std::int64_t t_ms) {
  EgoState ego;
  ego.wheelbase_m = scenario.ego_params.wheelbase_m;
  ego.body_length_m = scenario.ego_params.body_length_m;
  ego.body_width_m = scenario.ego_params.body_width_m;
  ego.max_decel_mps2 = scenario.ego_params.max_decel_mps2;
  ego.reaction_time_s = scenario.ego_params.reaction_time_s;
  ego.at = Timestamp{t_ms};
  for (const auto& point : scenario.ego_timeline) {
    if (point.t_ms > t_ms) break;
    ego.speed_mps = point.speed_mps;
    ego.steering_angle_rad = point.steering_angle_rad;
  }
  return ego;
}

namespace {

struct FieldErrors {
  std::vector<std::string>& errors;

  void add(const std::string& path, const std::string& what) { errors.push_back(path + ": " + what); }
};

SensorModel sensor_model_from_json(const json& j, SensorSource source,
                                   std::vector<std::string>& errors, const std::string& path) {
  SensorModel model;
  model.source = source;
  FieldErrors fe{errors};
  if (!j.is_object()) {
    fe.add(path, "must be an object");
    return model;
  }
  auto number = [&](const char* field, double& out, bool required) {
    auto it = j.find(field);
    if (it == j.end()) {
      if (required) fe.add(path + "." + field, "missing required field");
      return;
    }
    if (!it->is_number()) {
      fe.add(path + "." + field, "must be a number");
      return;
    }
    out = it->get<double>();
  };
  number("rate_hz", model.rate_hz, true);
  if (auto it = j.find("latency_ms"); it != j.end()) {
    if (it->is_number_integer())
      model.latency_ms = it->get<std::int64_t>();
    else
      fe.add(path + ".latency_ms", "must be an integer");
  }
  number("dropout_prob", model.dropout_prob, false);
  number("position_noise_sigma_m", model.position_noise_sigma_m, false);
  number("size_noise_sigma_m", model.size_noise_sigma_m, false);
  if (auto it = j.find("confidence_range"); it != j.end()) {
    if (it->is_array() && it->size() == 2 && (*it)[0].is_number() && (*it)[1].is_number()) {
      model.confidence_min = (*it)[0].get<double>();
      model.confidence_max = (*it)[1].get<double>();
    } else {
      fe.add(path + ".confidence_range", "must be an array [min, max]");
    }
  }

  if (!(model.rate_hz > 0.0) || !std::isfinite(model.rate_hz))
    fe.add(path + ".rate_hz", "must be > 0");
  if (model.latency_ms < 0) fe.add(path + ".latency_ms", "must be >= 0");
  if (!(model.dropout_prob >= 0.0 && model.dropout_prob < 1.0))
    fe.add(path + ".dropout_prob", "must be in [0, 1)");
  if (!(model.position_noise_sigma_m >= 0.0))
    fe.add(path + ".position_noise_sigma_m", "must be >= 0");
  if (!(model.size_noise_sigma_m >= 0.0)) fe.add(path + ".size_noise_sigma_m", "must be >= 0");
  if (!(model.confidence_min >= 0.0 && model.confidence_max <= 1.0 &&
        model.confidence_min <= model.confidence_max))
    fe.add(path + ".confidence_range", "must satisfy 0 <= min <= max <= 1");
  return model;
}

Actor actor_from_json(const json& j, std::vector<std::string>& errors, const std::string& path) {
  Actor actor;
  FieldErrors fe{errors};
  if (!j.is_object()) {
    fe.add(path, "must be an object");
    return actor;
  }
  auto text = [&](const char* field, std::string& out) {
    auto it = j.find(field);
    if (it == j.end() || !it->is_string())
      fe.add(path + "." + field, "missing or not a string");
    else
      out = it->get<std::string>();
  };
  auto number = [&](const char* field, double& out) {
    auto it = j.find(field);
    if (it == j.end() || !it->is_number())
      fe.add(path + "." + field, "missing or not a number");
    else
      out = it->get<double>();
  };
  text("id", actor.id);
  text("class_label", actor.class_label);
  number("width_m", actor.width_m);
  number("height_m", actor.height_m);
  if (actor.width_m < 0.0) fe.add(path + ".width_m", "must be >= 0");
  if (actor.height_m < 0.0) fe.add(path + ".height_m", "must be >= 0");

  if (auto it = j.find("trajectory"); it != j.end() && it->is_array() && !it->empty()) {
    for (std::size_t i = 0; i < it->size(); ++i) {
      const json& p = (*it)[i];
      const std::string ppath = path + ".trajectory[" + std::to_string(i) + "]";
      TrajectoryPoint point;
      if (!p.is_object() || !p.contains("t_ms") || !p["t_ms"].is_number_integer() ||
          !p.contains("x_m") || !p["x_m"].is_number() || !p.contains("y_m") ||
          !p["y_m"].is_number()) {
        fe.add(ppath, "must be an object with integer t_ms and numeric x_m, y_m");
        continue;
      }
      point.t_ms = p["t_ms"].get<std::int64_t>();
      point.x_m = p["x_m"].get<double>();
      point.y_m = p["y_m"].get<double>();
      if (!actor.trajectory.empty() && point.t_ms <= actor.trajectory.back().t_ms)
        fe.add(ppath + ".t_ms", "trajectory times must be strictly increasing");
      actor.trajectory.push_back(point);
    }
  } else {
    fe.add(path + ".trajectory", "must be a non-empty array");
  }

  if (auto it = j.find("visible_to"); it != j.end() && it->is_array()) {
    for (std::size_t i = 0; i < it->size(); ++i) {
      const json& v = (*it)[i];
      const std::string vpath = path + ".visible_to[" + std::to_string(i) + "]";
      if (!v.is_string()) {
        fe.add(vpath, "must be a string");
        continue;
      }
      if (auto s = source_from_label(v.get<std::string>()))
        actor.visible_to.insert(*s);
      else
        fe.add(vpath, "must be \"Camera\" or \"Lidar\"");
    }
  } else {
    fe.add(path + ".visible_to", "must be an array");
  }
  return actor;
}

}  // namespace

ScenarioLoadResult scenario_from_json(const json& j) {
  ScenarioLoadResult result;
  auto& errors = result.errors;
  FieldErrors fe{errors};
  if (!j.is_object()) {
    errors.emplace_back("scenario document must be a JSON object");
    return result;
  }

  Scenario sc;
  if (auto it = j.find("name"); it != j.end() && it->is_string())
    sc.name = it->get<std::string>();
  else
    fe.add("name", "missing or not a string");

  if (auto it = j.find("duration_ms"); it != j.end() && it->is_number_integer())
    sc.duration_ms = it->get<std::int64_t>();
  else
    fe.add("duration_ms", "missing or not an integer");
  if (sc.duration_ms <= 0) fe.add("duration_ms", "must be > 0");

  if (auto it = j.find("seed"); it != j.end() && it->is_number_integer())
    sc.seed = it->get<std::uint64_t>();
  else
    fe.add("seed", "missing or not an integer");

  if (auto it = j.find("ego_timeline"); it != j.end() && it->is_array() && !it->empty()) {
    for (std::size_t i = 0; i < it->size(); ++i) {
      const json& p = (*it)[i];
      const std::string ppath = "ego_timeline[" + std::to_string(i) + "]";
      if (!p.is_object() || !p.contains("t_ms") || !p["t_ms"].is_number_integer() ||
          !p.contains("speed_mps") || !p["speed_mps"].is_number() ||
          !p.contains("steering_angle_rad") || !p["steering_angle_rad"].is_number()) {
        fe.add(ppath, "must be an object with t_ms, speed_mps, steering_angle_rad");
        continue;
      }
      EgoTimelinePoint point{p["t_ms"].get<std::int64_t>(), p["speed_mps"].get<double>(),
                             p["steering_angle_rad"].get<double>()};
      if (point.speed_mps < 0.0) fe.add(ppath + ".speed_mps", "must be >= 0");
      if (!sc.ego_timeline.empty() && point.t_ms <= sc.ego_timeline.back().t_ms)
        fe.add(ppath + ".t_ms", "timeline times must be strictly increasing");
      sc.ego_timeline.push_back(point);
    }
    if (!sc.ego_timeline.empty() && sc.ego_timeline.front().t_ms != 0)
      fe.add("ego_timeline[0].t_ms", "timeline must start at 0");
  } else {
    fe.add("ego_timeline", "must be a non-empty array");
  }

  if (auto it = j.find("ego_params"); it != j.end() && it->is_object()) {
    auto number = [&](const char* field, double& out) {
      auto f = it->find(field);
      if (f == it->end() || !f->is_number())
        fe.add(std::string("ego_params.") + field, "missing or not a number");
      else
        out = f->get<double>();
    };
    number("wheelbase_m", sc.ego_params.wheelbase_m);
    number("body_length_m", sc.ego_params.body_length_m);
    number("body_width_m", sc.ego_params.body_width_m);
    number("max_decel_mps2", sc.ego_params.max_decel_mps2);
    number("reaction_time_s", sc.ego_params.reaction_time_s);
    if (!(sc.ego_params.wheelbase_m > 0.0)) fe.add("ego_params.wheelbase_m", "must be > 0");
    if (!(sc.ego_params.body_length_m > 0.0)) fe.add("ego_params.body_length_m", "must be > 0");
    if (!(sc.ego_params.body_width_m > 0.0)) fe.add("ego_params.body_width_m", "must be > 0");
    if (!(sc.ego_params.max_decel_mps2 > 0.0)) fe.add("ego_params.max_decel_mps2", "must be > 0");
    if (!(sc.ego_params.reaction_time_s >= 0.0))
      fe.add("ego_params.reaction_time_s", "must be >= 0");
  } else {
    fe.add("ego_params", "missing or not an object");
  }

  if (auto it = j.find("actors"); it != j.end() && it->is_array()) {
    for (std::size_t i = 0; i < it->size(); ++i)
      sc.actors.push_back(actor_from_json((*it)[i], errors, "actors[" + std::to_string(i) + "]"));
  } else {
    fe.add("actors", "must be an array");
  }

  bool have_camera = false;
  bool have_lidar = false;
  if (auto it = j.find("sensors"); it != j.end() && it->is_object()) {
    for (const auto& [key, value] : it->items()) {
      if (key == "camera") {
        sc.camera = sensor_model_from_json(value, SensorSource::Camera, errors, "sensors.camera");
        have_camera = true;
      } else if (key == "lidar") {
        sc.lidar = sensor_model_from_json(value, SensorSource::Lidar, errors, "sensors.lidar");
        have_lidar = true;
      } else {
        fe.add("sensors." + key, "unknown sensor id (expected \"camera\" or \"lidar\")");
      }
    }
    if (!have_camera) fe.add("sensors.camera", "missing required sensor");
    if (!have_lidar) fe.add("sensors.lidar", "missing required sensor");
  } else {
    fe.add("sensors", "missing or not an object");
  }

  if (auto it = j.find("expected"); it != j.end()) {
    if (!it->is_array()) {
      fe.add("expected", "must be an array");
    } else {
      for (std::size_t i = 0; i < it->size(); ++i) {
        const json& w = (*it)[i];
        const std::string wpath = "expected[" + std::to_string(i) + "]";
        if (!w.is_object() || !w.contains("t_from") || !w["t_from"].is_number_integer() ||
            !w.contains("t_to") || !w["t_to"].is_number_integer() || !w.contains("status") ||
            !w["status"].is_string()) {
          fe.add(wpath, "must be an object with integer t_from, t_to and string status");
          continue;
        }
        ExpectationWindow window;
        window.t_from_ms = w["t_from"].get<std::int64_t>();
        window.t_to_ms = w["t_to"].get<std::int64_t>();
        if (auto s = status_from_label(w["status"].get<std::string>()))
          window.status = *s;
        else
          fe.add(wpath + ".status", "must be Consistent, Inconsistent or NoData");
        if (window.t_from_ms < 0 || window.t_to_ms < window.t_from_ms)
          fe.add(wpath, "window must satisfy 0 <= t_from <= t_to");
        if (window.t_to_ms > sc.duration_ms)
          fe.add(wpath + ".t_to", "window must end within duration_ms");
        sc.expected.push_back(window);
      }
    }
  }

  if (!errors.empty()) return result;
  result.scenario = std::move(sc);
  return result;
}

ScenarioLoadResult load_scenario(const std::string& path) {
  ScenarioLoadResult result;
  auto doc = load_json_file(path, result.errors);
  if (!doc) return result;
  return scenario_from_json(*doc);
}

}  // namespace percmon
