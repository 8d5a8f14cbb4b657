#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "percmon/bus.hpp"
#include "percmon/json_codec.hpp"

using namespace percmon;

namespace {

ObjectListFrame frame_at(std::int64_t t) {
  ObjectListFrame f;
  f.source = SensorSource::Camera;
  f.frame_time = Timestamp{t};
  return f;
}

}  // namespace

TEST_CASE("publishing without subscribers delivers to nobody") {
  Bus bus;
  bus.create_topic("perception/camera/objects", PayloadKind::ObjectList);
  CHECK(bus.publish("perception/camera/objects", frame_at(10), Timestamp{10}) == 0);
}

TEST_CASE("every subscriber receives an identical payload") {
  Bus bus;
  bus.create_topic("perception/camera/objects", PayloadKind::ObjectList);
  std::vector<ObjectListFrame> seen_a;
  std::vector<ObjectListFrame> seen_b;
  bus.subscribe("perception/camera/objects", [&](const Payload& p, Timestamp) {
    seen_a.push_back(std::get<ObjectListFrame>(p));
  });
  bus.subscribe("perception/camera/objects", [&](const Payload& p, Timestamp) {
    seen_b.push_back(std::get<ObjectListFrame>(p));
  });
  CHECK(bus.publish("perception/camera/objects", frame_at(42), Timestamp{42}) == 2);
  REQUIRE(seen_a.size() == 1);
  REQUIRE(seen_b.size() == 1);
  CHECK(seen_a[0] == seen_b[0]);
}

TEST_CASE("the bus preserves publish order, not timestamp order") {
  Bus bus;
  bus.create_topic("ego/state", PayloadKind::Ego);
  std::vector<std::int64_t> arrival;
  bus.subscribe("ego/state", [&](const Payload& p, Timestamp) {
    arrival.push_back(std::get<EgoState>(p).at.t_ms);
  });
  EgoState e5;
  e5.at = Timestamp{5};
  EgoState e3;
  e3.at = Timestamp{3};
  bus.publish("ego/state", e5, Timestamp{5});
  bus.publish("ego/state", e3, Timestamp{3});
  CHECK(arrival == std::vector<std::int64_t>{5, 3});
}

TEST_CASE("per-topic FIFO: one subscriber observes publishes in order") {
  Bus bus;
  bus.create_topic("perception/camera/objects", PayloadKind::ObjectList);
  std::vector<std::int64_t> order;
  bus.subscribe("perception/camera/objects", [&](const Payload& p, Timestamp) {
    order.push_back(std::get<ObjectListFrame>(p).frame_time.t_ms);
  });
  for (std::int64_t t : {1, 2, 3, 4, 5, 6, 7, 8})
    bus.publish("perception/camera/objects", frame_at(t), Timestamp{t});
  CHECK(order == std::vector<std::int64_t>{1, 2, 3, 4, 5, 6, 7, 8});
}

TEST_CASE("payload kind mismatches are rejected") {
  Bus bus;
  bus.create_topic("ego/state", PayloadKind::Ego);
  CHECK_THROWS_AS(bus.publish("ego/state", frame_at(1), Timestamp{1}), std::invalid_argument);
}

TEST_CASE("unknown topics are rejected") {
  Bus bus;
  CHECK_THROWS_AS(bus.publish("nope", frame_at(1), Timestamp{1}), std::invalid_argument);
  CHECK_THROWS_AS(bus.subscribe("nope", [](const Payload&, Timestamp) {}),
                  std::invalid_argument);
}

TEST_CASE("duplicate topic names are rejected") {
  Bus bus;
  bus.create_topic("monitor/verdict", PayloadKind::Verdict);
  CHECK_THROWS_AS(bus.create_topic("monitor/verdict", PayloadKind::Verdict),
                  std::invalid_argument);
}

TEST_CASE("a tap mirrors a topic as canonical JSONL lines") {
  Bus bus;
  bus.create_topic("perception/camera/objects", PayloadKind::ObjectList);
  std::vector<std::string> lines;
  const auto id = attach_jsonl_tap(bus, "perception/camera/objects",
                                   [&](const std::string& line) { lines.push_back(line); });
  bus.publish("perception/camera/objects", frame_at(10), Timestamp{10});
  bus.publish("perception/camera/objects", frame_at(20), Timestamp{20});
  REQUIRE(lines.size() == 2);
  const auto parsed = nlohmann::json::parse(lines[1]);
  CHECK(parsed["source"] == "Camera");
  CHECK(parsed["frame_time"] == 20);
  bus.unsubscribe(id);
  bus.publish("perception/camera/objects", frame_at(30), Timestamp{30});
  CHECK(lines.size() == 2);
}

TEST_CASE("unsubscribing stops delivery") {
  Bus bus;
  bus.create_topic("perception/camera/objects", PayloadKind::ObjectList);
  int count = 0;
  const auto id = bus.subscribe("perception/camera/objects",
                                [&](const Payload&, Timestamp) { ++count; });
  bus.publish("perception/camera/objects", frame_at(1), Timestamp{1});
  bus.unsubscribe(id);
  bus.publish("perception/camera/objects", frame_at(2), Timestamp{2});
  CHECK(count == 1);
}
