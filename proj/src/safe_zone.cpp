#include "percmon/safe_zone.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace percmon {

namespace {

void throw_if_invalid(const std::vector<std::string>& errors, const char* what) {
  if (errors.empty()) return;
  std::ostringstream oss;
  oss << what << ":";
  for (const auto& e : errors) oss << " " << e << ";";
  throw std::invalid_argument(oss.str());
}

// Steering tangent, clamped and odd by construction: tan is evaluated on |angle|
// and the sign re-applied, so negating the angle negates every lateral offset
// bit-exactly (the mirror property is tested with zero tolerance).
double steering_tangent(double angle_rad, double max_abs) {
  const double t = std::tan(std::abs(angle_rad));
  const double clamped = std::min(std::max(t, -max_abs), max_abs);
  return angle_rad < 0.0 ? -clamped : clamped;
}

ZonePolygon rectangle(double x0, double x1, double y_right, double y_left) {
  ZonePolygon poly;
  poly.vertices = {{x0, y_right}, {x1, y_right}, {x1, y_left}, {x0, y_left}};
  return poly;
}

}  // namespace

double focus_far_extent(const EgoState& ego, const ZoneSpec& base_focus) {
  return base_focus.far_m + ego.speed_mps * ego.reaction_time_s +
         ego.speed_mps * ego.speed_mps / (2.0 * ego.max_decel_mps2);
}

RegionOfInterest compute_roi(const EgoState& ego, const ZoneSpec& base_clear,
                             const ZoneSpec& base_focus, const RoiParams& params) {
  throw_if_invalid(validate_ego(ego), "invalid ego state");
  throw_if_invalid(validate_zone_spec(base_clear, "clear"), "invalid clear zone spec");
  throw_if_invalid(validate_zone_spec(base_focus, "focus"), "invalid focus zone spec");
  if (base_focus.far_m < base_clear.far_m)
    throw std::invalid_argument("focus far extent must be >= clear far extent");
  if (params.focus_stations < 1) throw std::invalid_argument("focus_stations must be >= 1");

  const double x_front = front_bumper_x(ego);
  RegionOfInterest roi;
  roi.computed_at = ego.at;
  roi.ego_snapshot = ego;

  // Clear zone: speed-independent band around the immediate body surroundings.
  roi.clear = rectangle(x_front + base_clear.near_m, x_front + base_clear.far_m,
                        -(ego.body_width_m / 2.0 + base_clear.right_m),
                        ego.body_width_m / 2.0 + base_clear.left_m);

  const double far_dyn = focus_far_extent(ego, base_focus);
  const double tan_steer = steering_tangent(ego.steering_angle_rad, params.max_abs_tan_steer);

  if (tan_steer == 0.0) {
    roi.focus = rectangle(x_front + base_focus.near_m, x_front + far_dyn, -base_focus.right_m,
                          base_focus.left_m);
    return roi;
  }

  // Curved focus zone. Bicycle-model lateral offset of the travel path at
  // longitudinal coordinate x (from the rear axle): dy(x) = tan * x^2 / (2 * wheelbase).
  // Stations sit on a fixed grid anchored at the near edge with pitch
  // (base far - near) / focus_stations; far_dyn lands between grid points and its
  // centerline value is interpolated on the grid chord. Polygons for two speeds
  // therefore share their boundary bit-exactly over the common extent and only
  // differ by appended segments, which is what makes containment monotone in speed.
  const double pitch = (base_focus.far_m - base_focus.near_m) / params.focus_stations;
  const auto offset_at_grid = [&](int k) {
    const double x = x_front + (base_focus.near_m + k * pitch);
    return tan_steer * x * x / (2.0 * ego.wheelbase_m);
  };

  std::vector<double> station_s;  // bumper-relative longitudinal coordinate
  std::vector<double> station_c;  // centerline lateral offset
  int k = 0;
  for (; base_focus.near_m + k * pitch < far_dyn; ++k) {
    station_s.push_back(base_focus.near_m + k * pitch);
    station_c.push_back(offset_at_grid(k));
  }
  // Final station: exactly far_dyn, centerline on the chord of cell [k-1, k].
  const double cell_lo = base_focus.near_m + (k - 1) * pitch;
  const double frac = (far_dyn - cell_lo) / pitch;
  station_s.push_back(far_dyn);
  station_c.push_back(offset_at_grid(k - 1) + (offset_at_grid(k) - offset_at_grid(k - 1)) * frac);

  ZonePolygon focus;
  focus.vertices.reserve(2 * station_s.size());
  for (std::size_t i = 0; i < station_s.size(); ++i)  // right rail, near -> far
    focus.vertices.push_back({x_front + station_s[i], station_c[i] - base_focus.right_m});
  for (std::size_t i = station_s.size(); i-- > 0;)  // left rail, far -> near
    focus.vertices.push_back({x_front + station_s[i], station_c[i] + base_focus.left_m});
  roi.focus = std::move(focus);
  return roi;
}

namespace {

bool on_segment(Vec2 a, Vec2 b, Vec2 p) {
  const double cross = (b.x_m - a.x_m) * (p.y_m - a.y_m) - (b.y_m - a.y_m) * (p.x_m - a.x_m);
  if (cross != 0.0) return false;
  return p.x_m >= std::min(a.x_m, b.x_m) && p.x_m <= std::max(a.x_m, b.x_m) &&
         p.y_m >= std::min(a.y_m, b.y_m) && p.y_m <= std::max(a.y_m, b.y_m);
}

}  // namespace

// Winding number with an exact boundary pre-test; boundary points count as inside.
// (The test suite cross-checks against an even-odd ray-casting oracle.)
bool polygon_contains(const ZonePolygon& poly, Vec2 p) {
  const auto& v = poly.vertices;
  const std::size_t n = v.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (on_segment(v[i], v[(i + 1) % n], p)) return true;
  }
  int winding = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = v[i];
    const Vec2& b = v[(i + 1) % n];
    const double side = (b.x_m - a.x_m) * (p.y_m - a.y_m) - (b.y_m - a.y_m) * (p.x_m - a.x_m);
    if (a.y_m <= p.y_m) {
      if (b.y_m > p.y_m && side > 0.0) ++winding;
    } else {
      if (b.y_m <= p.y_m && side < 0.0) --winding;
    }
  }
  return winding != 0;
}

double polygon_area(const ZonePolygon& poly) {
  const auto& v = poly.vertices;
  const std::size_t n = v.size();
  if (n < 3) return 0.0;
  double twice = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = v[i];
    const Vec2& b = v[(i + 1) % n];
    twice += a.x_m * b.y_m - b.x_m * a.y_m;
  }
  return std::abs(twice) / 2.0;
}

ZoneHit contains(const RegionOfInterest& roi, Vec2 p) {
  if (polygon_contains(roi.clear, p)) return ZoneHit::InClear;
  if (polygon_contains(roi.focus, p)) return ZoneHit::InFocus;
  return ZoneHit::Outside;
}

}  // namespace percmon
