#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "percmon/safe_zone.hpp"

using namespace percmon;

namespace {

EgoState lab_ego(double speed, double steering) {
  EgoState ego;
  ego.speed_mps = speed;
  ego.steering_angle_rad = steering;
  return ego;  // lab-scale defaults for the remaining fields
}

std::vector<Vec2> sorted_vertices(const ZonePolygon& poly) {
  std::vector<Vec2> v = poly.vertices;
  std::sort(v.begin(), v.end(), [](Vec2 a, Vec2 b) {
    if (a.x_m != b.x_m) return a.x_m < b.x_m;
    return a.y_m < b.y_m;
  });
  return v;
}

}  // namespace

TEST_CASE("far extent follows the stretch formula") {
  // Independent hand computation: base far + v*reaction + v^2 / (2*decel)
  // = 1.2 + 1.0*0.5 + 1.0/(2*2.0) = 1.95.
  EgoState ego = lab_ego(1.0, 0.0);
  ego.reaction_time_s = 0.5;
  ego.max_decel_mps2 = 2.0;
  ZoneSpec focus = default_base_zones().focus;  // far 1.2
  const double far_dyn = focus_far_extent(ego, focus);
  CHECK(far_dyn == doctest::Approx(1.95).epsilon(1e-12));

  const auto roi = compute_roi(ego, default_base_zones().clear, focus);
  double max_x = -1.0;
  for (const auto& v : roi.focus.vertices) max_x = std::max(max_x, v.x_m);
  CHECK(max_x == doctest::Approx(front_bumper_x(ego) + 1.95).epsilon(1e-12));
}

TEST_CASE("zero speed and zero steering give exactly the base focus rectangle") {
  const BaseZones zones = default_base_zones();
  const auto roi = compute_roi(lab_ego(0.0, 0.0), zones.clear, zones.focus);
  const double x0 = front_bumper_x(roi.ego_snapshot) + zones.focus.near_m;
  const double x1 = front_bumper_x(roi.ego_snapshot) + zones.focus.far_m;
  REQUIRE(roi.focus.vertices.size() == 4);
  CHECK(roi.focus.vertices[0] == Vec2{x0, -zones.focus.right_m});
  CHECK(roi.focus.vertices[1] == Vec2{x1, -zones.focus.right_m});
  CHECK(roi.focus.vertices[2] == Vec2{x1, zones.focus.left_m});
  CHECK(roi.focus.vertices[3] == Vec2{x0, zones.focus.left_m});
}

TEST_CASE("zero steering keeps the ROI symmetric about the x axis") {
  const BaseZones zones = default_base_zones();
  for (double speed : {0.0, 0.4, 1.3, 2.0}) {
    const auto roi = compute_roi(lab_ego(speed, 0.0), zones.clear, zones.focus);
    for (const auto* poly : {&roi.focus, &roi.clear}) {
      auto mirrored = *poly;
      for (auto& v : mirrored.vertices) v.y_m = -v.y_m;
      CHECK(sorted_vertices(mirrored) == sorted_vertices(*poly));
    }
  }
}

TEST_CASE("negating the steering angle mirrors every vertex exactly") {
  const BaseZones zones = default_base_zones();
  test::Gen gen(4242);
  for (int i = 0; i < 200; ++i) {
    const double speed = gen.real(0.0, 2.5);
    const double steering = gen.real(-1.4, 1.4);
    const auto left = compute_roi(lab_ego(speed, steering), zones.clear, zones.focus);
    const auto right = compute_roi(lab_ego(speed, -steering), zones.clear, zones.focus);
    auto mirrored = left.focus;
    for (auto& v : mirrored.vertices) v.y_m = -v.y_m;
    CHECK(sorted_vertices(mirrored) == sorted_vertices(right.focus));  // bit-exact
  }
}

TEST_CASE("focus area never shrinks as speed grows") {
  const BaseZones zones = default_base_zones();
  test::Gen gen(7);
  for (int i = 0; i < 200; ++i) {
    const double steering = gen.real(-1.0, 1.0);
    double v1 = gen.real(0.0, 2.5);
    double v2 = gen.real(0.0, 2.5);
    if (v2 < v1) std::swap(v1, v2);
    const auto roi1 = compute_roi(lab_ego(v1, steering), zones.clear, zones.focus);
    const auto roi2 = compute_roi(lab_ego(v2, steering), zones.clear, zones.focus);
    CHECK(polygon_area(roi1.focus) <= polygon_area(roi2.focus) + 1e-12);
  }
}

TEST_CASE("a point in the focus zone stays in it at every higher speed") {
  const BaseZones zones = default_base_zones();
  test::Gen gen(99);
  int checked = 0;
  for (int i = 0; i < 150; ++i) {
    const double steering = gen.real(-1.2, 1.2);
    double v1 = gen.real(0.0, 2.0);
    double v2 = v1 + gen.real(0.0, 2.0);
    const auto roi1 = compute_roi(lab_ego(v1, steering), zones.clear, zones.focus);
    const auto roi2 = compute_roi(lab_ego(v2, steering), zones.clear, zones.focus);
    for (int k = 0; k < 40; ++k) {
      const Vec2 p{gen.real(0.0, 4.0), gen.real(-1.5, 1.5)};
      if (contains(roi1, p) == ZoneHit::InFocus) {
        ++checked;
        CHECK(contains(roi2, p) == ZoneHit::InFocus);  // zero tolerance
      }
    }
  }
  CHECK(checked > 200);  // the sampler actually hit the zone
}

TEST_CASE("containment agrees with the ray-casting oracle") {
  test::Gen gen(20240601);
  for (int e = 0; e < 100; ++e) {
    const EgoState ego = gen.ego();
    const BaseZones zones = gen.zones();
    const auto roi = compute_roi(ego, zones.clear, zones.focus);
    for (int k = 0; k < 1000; ++k) {
      const Vec2 p{gen.real(-1.0, 6.0), gen.real(-3.0, 3.0)};
      CHECK(polygon_contains(roi.focus, p) == test::raycast_contains(roi.focus, p));
      CHECK(polygon_contains(roi.clear, p) == test::raycast_contains(roi.clear, p));
    }
  }
}

TEST_CASE("points beyond the dynamic far extent are outside") {
  const BaseZones zones = default_base_zones();
  EgoState ego = lab_ego(1.2, 0.0);
  const auto roi = compute_roi(ego, zones.clear, zones.focus);
  const double far_dyn = focus_far_extent(ego, zones.focus);
  CHECK(contains(roi, Vec2{front_bumper_x(ego) + far_dyn + 1.0, 0.0}) == ZoneHit::Outside);
}

TEST_CASE("boundary points count as inside (closed polygons)") {
  const BaseZones zones = default_base_zones();

  // curved polygon: every vertex is on the boundary and counts as inside
  const auto curved = compute_roi(lab_ego(0.7, 0.3), zones.clear, zones.focus);
  for (const auto& v : curved.focus.vertices) CHECK(contains(curved, v) != ZoneHit::Outside);

  // axis-aligned rectangle: edge midpoints are exactly representable boundary points
  const auto rect = compute_roi(lab_ego(0.7, 0.0), zones.clear, zones.focus);
  const auto& v = rect.focus.vertices;
  REQUIRE(v.size() == 4);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Vec2 a = v[i];
    const Vec2 b = v[(i + 1) % v.size()];
    const Vec2 mid{(a.x_m + b.x_m) / 2.0, (a.y_m + b.y_m) / 2.0};
    CHECK(contains(rect, a) != ZoneHit::Outside);
    CHECK(polygon_contains(rect.focus, mid));
  }
}

TEST_CASE("the focus centroid at zero steering is in the focus zone") {
  const BaseZones zones = default_base_zones();
  const auto roi = compute_roi(lab_ego(0.9, 0.0), zones.clear, zones.focus);
  double cx = 0.0;
  double cy = 0.0;
  for (const auto& p : roi.focus.vertices) {
    cx += p.x_m;
    cy += p.y_m;
  }
  cx /= static_cast<double>(roi.focus.vertices.size());
  cy /= static_cast<double>(roi.focus.vertices.size());
  CHECK(contains(roi, Vec2{cx, cy}) == ZoneHit::InFocus);
  CHECK(test::raycast_contains(roi.focus, Vec2{cx, cy}));
}

TEST_CASE("clear zone wins when zones overlap") {
  BaseZones zones = default_base_zones();
  zones.focus.near_m = 0.0;  // make the focus zone overlap the clear zone
  zones.focus.far_m = 1.2;
  const auto roi = compute_roi(lab_ego(0.0, 0.0), zones.clear, zones.focus);
  const Vec2 inside_clear{front_bumper_x(roi.ego_snapshot) + 0.03, 0.0};
  CHECK(polygon_contains(roi.focus, inside_clear));
  CHECK(contains(roi, inside_clear) == ZoneHit::InClear);
}

TEST_CASE("non-finite ego fields are rejected") {
  const BaseZones zones = default_base_zones();
  EgoState ego = lab_ego(0.5, 0.0);
  ego.speed_mps = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(compute_roi(ego, zones.clear, zones.focus), std::invalid_argument);
  ego = lab_ego(0.5, std::numeric_limits<double>::infinity());
  CHECK_THROWS_AS(compute_roi(ego, zones.clear, zones.focus), std::invalid_argument);
}

TEST_CASE("steering near ±90 degrees stays clamped and well-formed") {
  const BaseZones zones = default_base_zones();
  const auto roi = compute_roi(lab_ego(1.0, 1.55), zones.clear, zones.focus);
  for (const auto& v : roi.focus.vertices) {
    CHECK(std::isfinite(v.x_m));
    CHECK(std::isfinite(v.y_m));
  }
  CHECK(polygon_area(roi.focus) > 0.0);
  // lateral offset bounded by the tan clamp (one grid pitch of slack covers the
  // chord interpolation at the final station)
  const double pitch = (zones.focus.far_m - zones.focus.near_m) / 8.0;
  const double far_abs = front_bumper_x(roi.ego_snapshot) +
                         focus_far_extent(roi.ego_snapshot, zones.focus) + pitch;
  const double bound = 10.0 * far_abs * far_abs / (2.0 * roi.ego_snapshot.wheelbase_m) +
                       zones.focus.left_m;
  for (const auto& v : roi.focus.vertices) CHECK(std::abs(v.y_m) <= bound + 1e-9);
}

TEST_CASE("identical inputs give identical vertex lists") {
  const BaseZones zones = default_base_zones();
  const EgoState ego = lab_ego(1.1, -0.4);
  const auto a = compute_roi(ego, zones.clear, zones.focus);
  const auto b = compute_roi(ego, zones.clear, zones.focus);
  CHECK(a.focus.vertices == b.focus.vertices);
  CHECK(a.clear.vertices == b.clear.vertices);
}
