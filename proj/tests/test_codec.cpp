#include <doctest.h>

#include <string>
#include <vector>

#include "oracles.hpp"
#include "percmon/json_codec.hpp"

using namespace percmon;
using nlohmann::json;

// Round-trip: encode -> text -> decode must be field-for-field identical, for
// any valid domain value. Doubles survive exactly (shortest-representation dump,
// exact parse), so equality here is strict.

TEST_CASE("object list frame round-trips exactly") {
  test::Gen gen(2024);
  for (int i = 0; i < 300; ++i) {
    const ObjectListFrame frame =
        gen.frame(gen.chance(0.5) ? SensorSource::Camera : SensorSource::Lidar,
                  Timestamp{gen.integer(1500, 100000)}, 6);
    const std::string text = to_json(frame).dump();
    std::vector<std::string> errors;
    const auto back = frame_from_json(json::parse(text), errors);
    REQUIRE_MESSAGE(back.has_value(), "frame failed to decode");
    CHECK(errors.empty());
    CHECK(*back == frame);
  }
}

TEST_CASE("ego state round-trips exactly") {
  test::Gen gen(7);
  for (int i = 0; i < 300; ++i) {
    const EgoState ego = gen.ego();
    std::vector<std::string> errors;
    const auto back = ego_from_json(json::parse(to_json(ego).dump()), errors);
    REQUIRE(back.has_value());
    CHECK(*back == ego);
  }
}

TEST_CASE("validator config round-trips exactly") {
  test::Gen gen(55);
  for (int i = 0; i < 300; ++i) {
    const ValidatorConfig cfg = gen.config();
    std::vector<std::string> errors;
    const auto back = config_from_json(json::parse(to_json(cfg).dump()), errors);
    REQUIRE(back.has_value());
    CHECK(*back == cfg);
  }
}

TEST_CASE("base zones round-trip exactly") {
  test::Gen gen(91);
  for (int i = 0; i < 200; ++i) {
    const BaseZones zones = gen.zones();
    std::vector<std::string> errors;
    const auto back = base_zones_from_json(json::parse(to_json(zones).dump()), errors);
    REQUIRE(back.has_value());
    CHECK(*back == zones);
  }
}

TEST_CASE("timestamps serialize as plain integers") {
  ObjectListFrame frame;
  frame.source = SensorSource::Lidar;
  frame.frame_time = Timestamp{12345};
  const json j = to_json(frame);
  CHECK(j["frame_time"].is_number_integer());
  CHECK(j["frame_time"].get<std::int64_t>() == 12345);
}

TEST_CASE("encoding the same value twice yields identical bytes") {
  test::Gen gen(321);
  const ObjectListFrame frame = gen.frame(SensorSource::Camera, Timestamp{5000}, 5);
  CHECK(to_json(frame).dump() == to_json(frame).dump());
}

TEST_CASE("decoder reports missing fields with a path") {
  std::vector<std::string> errors;
  const auto frame = frame_from_json(json::parse(R"({"source":"Camera"})"), errors, "camera");
  CHECK_FALSE(frame.has_value());
  bool found = false;
  for (const auto& e : errors) found = found || e.find("camera.frame_time") != std::string::npos;
  CHECK(found);
}

TEST_CASE("decoder rejects non-integer timestamps") {
  std::vector<std::string> errors;
  const auto frame = frame_from_json(
      json::parse(R"({"source":"Camera","frame_time":10.5,"objects":[]})"), errors);
  CHECK_FALSE(frame.has_value());
  bool found = false;
  for (const auto& e : errors) found = found || e.find("frame_time") != std::string::npos;
  CHECK(found);
}

TEST_CASE("decoder rejects unknown sensor source labels") {
  std::vector<std::string> errors;
  const auto frame = frame_from_json(
      json::parse(R"({"source":"Radar","frame_time":10,"objects":[]})"), errors);
  CHECK_FALSE(frame.has_value());
}

TEST_CASE("verdict record carries the documented fields") {
  ValidationVerdict verdict;
  verdict.status = VerdictStatus::NoData;
  verdict.at = Timestamp{700};
  verdict.no_data_side = SensorSource::Lidar;
  const json record = verdict_record(verdict);
  CHECK(record["type"] == "verdict");
  CHECK(record["t_ms"] == 700);
  CHECK(record["status"] == "NoData");
  CHECK(record["no_data_side"] == "Lidar");
  CHECK(record.contains("roi"));
  CHECK_FALSE(record.contains("pairs"));
}
