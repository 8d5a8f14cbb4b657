#include "percmon/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>

#include "percmon/json_codec.hpp"
#include "percmon/sync_buffer.hpp"

namespace percmon {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitExpectationFailed = 1;  // also: Inconsistent for `validate`
constexpr int kExitBadInput = 2;
constexpr int kExitNoData = 3;

void print_errors(const std::vector<std::string>& errors, std::ostream& err) {
  for (const auto& e : errors) err << "error: " << e << "\n";
}

bool load_config_arg(const std::optional<std::string>& path, ValidatorConfig& cfg,
                     std::ostream& err) {
  if (!path) return true;
  std::vector<std::string> errors;
  auto doc = load_json_file(*path, errors);
  std::optional<ValidatorConfig> parsed;
  if (doc) parsed = config_from_json(*doc, errors, "config");
  if (!parsed) {
    print_errors(errors, err);
    return false;
  }
  cfg = *parsed;
  return true;
}

bool load_zones_arg(const std::optional<std::string>& path, BaseZones& zones, std::ostream& err) {
  if (!path) return true;
  std::vector<std::string> errors;
  auto doc = load_json_file(*path, errors);
  std::optional<BaseZones> parsed;
  if (doc) parsed = base_zones_from_json(*doc, errors, "zones");
  if (!parsed) {
    print_errors(errors, err);
    return false;
  }
  zones = *parsed;
  return true;
}

}  // namespace

std::size_t RunSummary::total_verdicts() const {
  std::size_t total = 0;
  for (const auto& [label, count] : verdict_counts) {
    (void)label;
    total += count;
  }
  return total;
}

void print_summary(const RunSummary& summary, std::ostream& out) {
  out << "scenario: " << summary.scenario_name << "\n";
  out << "verdicts: " << summary.total_verdicts();
  for (const auto& [label, count] : summary.verdict_counts)
    out << "  " << label << "=" << count;
  out << "\n";
  out << "mode transitions: " << summary.transitions.size() << "\n";
  for (const auto& t : summary.transitions) {
    out << "  t=" << t.at.t_ms << "ms  " << ads_mode_label(t.from) << " -> "
        << ads_mode_label(t.to) << "  (" << mode_cause_label(t.cause) << ")\n";
  }
  if (summary.expectations.empty()) {
    out << "expectations: none\n";
  } else {
    out << "expectations:\n";
    for (const auto& e : summary.expectations) {
      out << "  [" << e.window.t_from_ms << ", " << e.window.t_to_ms << "] expect "
          << verdict_status_label(e.window.status) << ": " << (e.passed ? "pass" : "FAIL") << " ("
          << e.matching << "/" << e.total << ")\n";
    }
  }
  out << std::fixed << std::setprecision(3) << "wall runtime: " << summary.wall_runtime_s
      << " s\n";
}

int cmd_run(const RunArgs& args, std::ostream& out, std::ostream& err) {
  auto loaded = load_scenario(args.scenario_path);
  if (!loaded.ok()) {
    err << "error: cannot load scenario: " << args.scenario_path << "\n";
    print_errors(loaded.errors, err);
    return kExitBadInput;
  }
  Scenario scenario = std::move(*loaded.scenario);
  if (args.seed) scenario.seed = *args.seed;

  ValidatorConfig cfg;
  BaseZones zones = default_base_zones();
  if (!load_config_arg(args.config_path, cfg, err)) return kExitBadInput;
  if (!load_zones_arg(args.zones_path, zones, err)) return kExitBadInput;

  RunOptions options;
  options.monitor_rate_hz = args.monitor_rate_hz;

  const auto started = std::chrono::steady_clock::now();
  VerdictLog log;
  try {
    log = run(scenario, cfg, zones, options);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - started);

  const std::string out_path = args.out_path.value_or(scenario.name + ".verdicts.jsonl");
  {
    std::ofstream log_file(out_path, std::ios::binary);
    if (!log_file) {
      err << "error: cannot write log file: " << out_path << "\n";
      return kExitBadInput;
    }
    log_file << log.joined();
  }

  RunSummary summary;
  summary.scenario_name = scenario.name;
  for (const auto& verdict : log.verdicts) summary.verdict_counts[verdict_status_label(verdict.status)]++;
  summary.transitions = log.transitions;
  summary.expectations = check_expectations(log, scenario);
  summary.wall_runtime_s = elapsed.count();
  print_summary(summary, out);
  out << "log: " << out_path << "\n";

  for (const auto& e : summary.expectations)
    if (!e.passed) return kExitExpectationFailed;
  return kExitOk;
}

int cmd_validate(const ValidateArgs& args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> errors;
  std::optional<ObjectListFrame> camera;
  std::optional<ObjectListFrame> lidar;
  std::optional<EgoState> ego;

  if (auto doc = load_json_file(args.camera_path, errors))
    camera = frame_from_json(*doc, errors, "camera");
  if (auto doc = load_json_file(args.lidar_path, errors))
    lidar = frame_from_json(*doc, errors, "lidar");
  if (auto doc = load_json_file(args.ego_path, errors)) ego = ego_from_json(*doc, errors, "ego");
  if (!camera || !lidar || !ego) {
    print_errors(errors, err);
    return kExitBadInput;
  }
  if (camera->source != SensorSource::Camera) {
    err << "error: camera: source must be \"Camera\"\n";
    return kExitBadInput;
  }
  if (lidar->source != SensorSource::Lidar) {
    err << "error: lidar: source must be \"Lidar\"\n";
    return kExitBadInput;
  }

  ValidatorConfig cfg;
  BaseZones zones = default_base_zones();
  if (!load_config_arg(args.config_path, cfg, err)) return kExitBadInput;
  if (!load_zones_arg(args.zones_path, zones, err)) return kExitBadInput;

  // The ego snapshot's timestamp declares the evaluation instant.
  const Timestamp now = ego->at;
  SensorBuffer camera_buf(SensorSource::Camera);
  SensorBuffer lidar_buf(SensorSource::Lidar);
  camera_buf.ingest(*camera);
  lidar_buf.ingest(*lidar);

  ValidationVerdict verdict;
  try {
    verdict = evaluate(now, camera_buf, lidar_buf, *ego, cfg, zones);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  out << to_jsonl_line(verdict_record(verdict)) << "\n";

  switch (verdict.status) {
    case VerdictStatus::Consistent: return kExitOk;
    case VerdictStatus::Inconsistent: return kExitExpectationFailed;
    case VerdictStatus::NoData: return kExitNoData;
  }
  return kExitBadInput;
}

int cmd_roi(const RoiArgs& args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> errors;
  std::optional<EgoState> ego;
  if (auto doc = load_json_file(args.ego_path, errors)) ego = ego_from_json(*doc, errors, "ego");
  if (!ego) {
    print_errors(errors, err);
    return kExitBadInput;
  }
  BaseZones zones = default_base_zones();
  if (!load_zones_arg(args.zones_path, zones, err)) return kExitBadInput;

  try {
    const RegionOfInterest roi = compute_roi(*ego, zones.clear, zones.focus);
    out << to_jsonl_line(roi_record(roi)) << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitOk;
}

}  // namespace percmon
