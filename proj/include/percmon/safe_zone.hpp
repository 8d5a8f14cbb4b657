#pragma once

#include <vector>

#include "percmon/types.hpp"

namespace percmon {

// Dynamically computed Region of Interest around the ego vehicle: a speed-independent
// clear zone hugging the body, and a focus zone ahead of it that stretches with speed
// and bends with steering. All coordinates are vehicle frame (rear-axle origin).

struct ZonePolygon {
  std::vector<Vec2> vertices;  // counter-clockwise, simple
};

struct RegionOfInterest {
  ZonePolygon clear;
  ZonePolygon focus;
  Timestamp computed_at;
  EgoState ego_snapshot;
};

enum class ZoneHit { Outside, InClear, InFocus };

struct RoiParams {
  // Station pitch is (base far - near) / focus_stations, anchored at the near edge.
  // The grid is fixed per base spec, so polygons for increasing speed extend instead
  // of resampling — a point inside the focus zone at speed v stays inside at v' > v.
  int focus_stations = 8;
  double max_abs_tan_steer = 10.0;  // clamps near-±90° steering inputs
};

// Front-bumper plane, assuming the body is centered on the wheelbase.
inline double front_bumper_x(const EgoState& ego) {
  return (ego.wheelbase_m + ego.body_length_m) / 2.0;
}

// Focus far extent ahead of the bumper: base far + speed*reaction + speed^2/(2*decel).
double focus_far_extent(const EgoState& ego, const ZoneSpec& base_focus);

// Deterministic: identical inputs give identical vertex lists.
// Throws std::invalid_argument on invalid ego or base specs (non-finite fields,
// focus far extent below clear far extent).
RegionOfInterest compute_roi(const EgoState& ego, const ZoneSpec& base_clear,
                             const ZoneSpec& base_focus, const RoiParams& params = {});

// Point containment with closed boundaries (edge points count as inside).
// A point inside both zones reports InClear — closer to the vehicle wins.
ZoneHit contains(const RegionOfInterest& roi, Vec2 p);

// Exposed for tests and tools.
bool polygon_contains(const ZonePolygon& poly, Vec2 p);
double polygon_area(const ZonePolygon& poly);

}  // namespace percmon
