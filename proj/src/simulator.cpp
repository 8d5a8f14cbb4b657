#include "percmon/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "percmon/json_codec.hpp"
#include "percmon/rng.hpp"
#include "percmon/sync_buffer.hpp"

namespace percmon {

namespace {

// Same-millisecond events run in a fixed order so runs replay exactly:
// ego update, camera frame, lidar frame, monitor tick.
enum class EventKind : int { Ego = 0, CameraFrame = 1, LidarFrame = 2, MonitorTick = 3 };

struct Event {
  std::int64_t t_ms;
  EventKind kind;
  std::int64_t tick_index;  // sensor tick / timeline index, for stable ordering

  bool operator<(const Event& other) const {
    if (t_ms != other.t_ms) return t_ms < other.t_ms;
    if (kind != other.kind) return static_cast<int>(kind) < static_cast<int>(other.kind);
    return tick_index < other.tick_index;
  }
};

std::int64_t tick_time(std::int64_t index, double rate_hz) {
  return static_cast<std::int64_t>(std::llround(static_cast<double>(index) * 1000.0 / rate_hz));
}

// The frame a sensor would emit for its tick at t_sense, or nothing on dropout.
// Draw order per tick is fixed: dropout, then per actor dx, dy, dw, dh, confidence.
std::optional<ObjectListFrame> sense_frame(const Scenario& scenario, const SensorModel& sensor,
                                           std::int64_t t_sense, DeterministicRng& rng) {
  const bool dropped = rng.bernoulli(sensor.dropout_prob);
  ObjectListFrame frame;
  frame.source = sensor.source;
  frame.frame_time = Timestamp{t_sense + sensor.latency_ms};
  for (const auto& actor : scenario.actors) {
    const Vec2 true_pos = actor_position(actor, t_sense);
    const double dx = rng.gaussian(0.0, sensor.position_noise_sigma_m);
    const double dy = rng.gaussian(0.0, sensor.position_noise_sigma_m);
    const double dw = rng.gaussian(0.0, sensor.size_noise_sigma_m);
    const double dh = rng.gaussian(0.0, sensor.size_noise_sigma_m);
    const double confidence = rng.uniform(sensor.confidence_min, sensor.confidence_max);
    if (!actor.visible_to.count(sensor.source)) continue;
    DetectedObject obj;
    obj.class_label = actor.class_label;
    obj.width_m = std::max(0.0, actor.width_m + dw);
    obj.height_m = std::max(0.0, actor.height_m + dh);
    obj.position = Vec2{true_pos.x_m + dx, true_pos.y_m + dy};
    obj.confidence = confidence;
    obj.sensed_at = Timestamp{t_sense};
    obj.source = sensor.source;
    frame.objects.push_back(std::move(obj));
  }
  if (dropped) return std::nullopt;
  return frame;
}

}  // namespace

std::string VerdictLog::joined() const {
  std::ostringstream oss;
  for (const auto& line : lines) oss << line << "\n";
  return oss.str();
}

VerdictLog run(const Scenario& scenario, const ValidatorConfig& cfg, const BaseZones& zones,
               const RunOptions& options) {
  const auto cfg_errors = validate_config(cfg);
  if (!cfg_errors.empty()) {
    std::ostringstream oss;
    oss << "invalid validator config:";
    for (const auto& e : cfg_errors) oss << " " << e << ";";
    throw std::invalid_argument(oss.str());
  }
  if (!(options.monitor_rate_hz > 0.0))
    throw std::invalid_argument("monitor_rate_hz must be > 0");

  // Event schedule over the virtual clock.
  std::vector<Event> events;
  for (std::size_t i = 0; i < scenario.ego_timeline.size(); ++i)
    events.push_back({scenario.ego_timeline[i].t_ms, EventKind::Ego,
                      static_cast<std::int64_t>(i)});
  auto schedule_sensor = [&](const SensorModel& sensor, EventKind kind) {
    for (std::int64_t k = 0;; ++k) {
      const std::int64_t t_sense = tick_time(k, sensor.rate_hz);
      if (t_sense > scenario.duration_ms) break;
      if (t_sense + sensor.latency_ms > scenario.duration_ms) continue;
      events.push_back({t_sense + sensor.latency_ms, kind, k});
    }
  };
  schedule_sensor(scenario.camera, EventKind::CameraFrame);
  schedule_sensor(scenario.lidar, EventKind::LidarFrame);
  for (std::int64_t k = 0;; ++k) {
    const std::int64_t t = tick_time(k, options.monitor_rate_hz);
    if (t > scenario.duration_ms) break;
    events.push_back({t, EventKind::MonitorTick, k});
  }
  std::sort(events.begin(), events.end());

  // Bus wiring: simulator publishes sensor frames and ego state; the monitor
  // consumes frames into its buffers and publishes verdicts; mode control
  // consumes verdicts and publishes transitions; the log taps both.
  Bus bus;
  bus.create_topic(topics::kCameraObjects, PayloadKind::ObjectList);
  bus.create_topic(topics::kLidarObjects, PayloadKind::ObjectList);
  bus.create_topic(topics::kEgoState, PayloadKind::Ego);
  bus.create_topic(topics::kVerdict, PayloadKind::Verdict);
  bus.create_topic(topics::kMode, PayloadKind::ModeEvent);

  SensorBuffer camera_buf(SensorSource::Camera, options.buffer_capacity);
  SensorBuffer lidar_buf(SensorSource::Lidar, options.buffer_capacity);
  bus.subscribe(topics::kCameraObjects, [&](const Payload& p, Timestamp) {
    camera_buf.ingest(std::get<ObjectListFrame>(p));
  });
  bus.subscribe(topics::kLidarObjects, [&](const Payload& p, Timestamp) {
    lidar_buf.ingest(std::get<ObjectListFrame>(p));
  });

  VerdictLog log;
  bus.subscribe(topics::kVerdict, [&](const Payload& p, Timestamp) {
    log.verdicts.push_back(std::get<ValidationVerdict>(p));
  });
  bus.subscribe(topics::kMode, [&](const Payload& p, Timestamp) {
    log.transitions.push_back(std::get<ModeTransition>(p));
  });
  attach_jsonl_tap(bus, topics::kVerdict, [&](const std::string& line) { log.lines.push_back(line); });
  attach_jsonl_tap(bus, topics::kMode, [&](const std::string& line) { log.lines.push_back(line); });

  // Subscribed after the log taps: a transition published from inside verdict
  // delivery then lands after the verdict line that caused it.
  ModeState mode_state;
  bus.subscribe(topics::kVerdict, [&](const Payload& p, Timestamp at) {
    const auto& verdict = std::get<ValidationVerdict>(p);
    const ModeState before = mode_state;
    mode_state = step(mode_state, verdict, options.mode_policy);
    if (mode_state.current.mode != before.current.mode) {
      ModeTransition transition{at, before.current.mode, mode_state.current.mode,
                                mode_state.current.cause.value_or(ModeCause::Recovered)};
      bus.publish(topics::kMode, transition, at);
    }
  });

  DeterministicRng camera_rng(derive_seed(scenario.seed, 0));
  DeterministicRng lidar_rng(derive_seed(scenario.seed, 1));

  for (const auto& event : events) {
    switch (event.kind) {
      case EventKind::Ego: {
        bus.publish(topics::kEgoState, ego_state_at(scenario, event.t_ms),
                    Timestamp{event.t_ms});
        break;
      }
      case EventKind::CameraFrame:
      case EventKind::LidarFrame: {
        const bool is_camera = event.kind == EventKind::CameraFrame;
        const SensorModel& sensor = is_camera ? scenario.camera : scenario.lidar;
        DeterministicRng& rng = is_camera ? camera_rng : lidar_rng;
        const std::int64_t t_sense = tick_time(event.tick_index, sensor.rate_hz);
        if (auto frame = sense_frame(scenario, sensor, t_sense, rng)) {
          bus.publish(is_camera ? topics::kCameraObjects : topics::kLidarObjects, *frame,
                      Timestamp{event.t_ms});
        }
        break;
      }
      case EventKind::MonitorTick: {
        const Timestamp now{event.t_ms};
        const EgoState ego = ego_state_at(scenario, event.t_ms);
        const ValidationVerdict verdict =
            evaluate(now, camera_buf, lidar_buf, ego, cfg, zones, options.roi_params);
        bus.publish(topics::kVerdict, verdict, now);
        break;
      }
    }
  }
  return log;
}

std::vector<ExpectationResult> check_expectations(const VerdictLog& log,
                                                  const Scenario& scenario) {
  std::vector<ExpectationResult> results;
  results.reserve(scenario.expected.size());
  for (const auto& window : scenario.expected) {
    ExpectationResult res;
    res.window = window;
    for (const auto& verdict : log.verdicts) {
      if (verdict.at.t_ms < window.t_from_ms || verdict.at.t_ms > window.t_to_ms) continue;
      ++res.total;
      if (verdict.status == window.status) ++res.matching;
    }
    res.passed = res.total == 0 ||
                 static_cast<double>(res.matching) >= 0.95 * static_cast<double>(res.total);
    results.push_back(res);
  }
  return results;
}

}  // namespace percmon
