#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "percmon/bus.hpp"
#include "percmon/mode_control.hpp"
#include "percmon/safe_zone.hpp"
#include "percmon/types.hpp"
#include "percmon/validator.hpp"

namespace percmon {

// Canonical text schema: JSON with field names exactly matching the domain
// types, timestamps as integer milliseconds, enums as their labels. Object keys
// serialize in sorted order and doubles round-trip exactly, so encoding the same
// values always yields the same bytes.

nlohmann::json to_json(const DetectedObject& obj);
nlohmann::json to_json(const ObjectListFrame& frame);
nlohmann::json to_json(const EgoState& ego);
nlohmann::json to_json(const ValidatorConfig& cfg);
nlohmann::json to_json(const ZoneSpec& spec);
nlohmann::json to_json(const BaseZones& zones);
nlohmann::json to_json(const ZonePolygon& poly);

// Verdict and mode records as emitted to the line-delimited log. Each record
// carries a "type" discriminator ("verdict" / "mode").
nlohmann::json verdict_record(const ValidationVerdict& verdict);
nlohmann::json mode_record(const ModeTransition& transition);

// ROI export for offline plotting: both zone polygons as vertex lists.
nlohmann::json roi_record(const RegionOfInterest& roi);

std::string to_jsonl_line(const nlohmann::json& record);

// Canonical record for any bus payload (frames and ego states encode as their
// domain schema; verdicts and mode events as their log records).
nlohmann::json payload_record(const Payload& payload);

// Mirrors every publish on a topic into `sink`, one canonical JSONL line per
// event. Returns the subscription handle (unsubscribe to stop the tap).
Bus::SubscriptionId attach_jsonl_tap(Bus& bus, const std::string& topic,
                                     std::function<void(const std::string& line)> sink);

// Decoders collect every problem instead of stopping at the first; each message
// carries a path into the document (e.g. "objects[2].confidence"). A returned
// value is present only when errors is untouched by the call.
std::optional<DetectedObject> detected_object_from_json(const nlohmann::json& j,
                                                        std::vector<std::string>& errors,
                                                        const std::string& path = "");
std::optional<ObjectListFrame> frame_from_json(const nlohmann::json& j,
                                               std::vector<std::string>& errors,
                                               const std::string& path = "");
std::optional<EgoState> ego_from_json(const nlohmann::json& j, std::vector<std::string>& errors,
                                      const std::string& path = "");
std::optional<ValidatorConfig> config_from_json(const nlohmann::json& j,
                                                std::vector<std::string>& errors,
                                                const std::string& path = "");
std::optional<ZoneSpec> zone_spec_from_json(const nlohmann::json& j,
                                            std::vector<std::string>& errors,
                                            const std::string& path = "");
std::optional<BaseZones> base_zones_from_json(const nlohmann::json& j,
                                              std::vector<std::string>& errors,
                                              const std::string& path = "");

// File helpers: parse errors and I/O problems land in `errors`.
std::optional<nlohmann::json> load_json_file(const std::string& path,
                                             std::vector<std::string>& errors);

std::optional<SensorSource> source_from_label(const std::string& label);
std::optional<VerdictStatus> status_from_label(const std::string& label);

}  // namespace percmon
