#include "percmon/validator.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace percmon {

const char* reject_reason_label(RejectReason r) {
  switch (r) {
    case RejectReason::ClassMismatch: return "ClassMismatch";
    case RejectReason::CenterDist: return "CenterDist";
    case RejectReason::WidthDiff: return "WidthDiff";
    case RejectReason::HeightDiff: return "HeightDiff";
    case RejectReason::TimestampGap: return "TimestampGap";
    case RejectReason::Confidence: return "Confidence";
  }
  return "?";
}

const char* verdict_status_label(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Consistent: return "Consistent";
    case VerdictStatus::Inconsistent: return "Inconsistent";
    case VerdictStatus::NoData: return "NoData";
  }
  return "?";
}

namespace {

std::vector<int> roi_filter_indices(const ObjectListFrame& frame, const RegionOfInterest& roi,
                                    const ValidatorConfig& cfg) {
  std::vector<int> kept;
  for (int i = 0; i < static_cast<int>(frame.objects.size()); ++i) {
    const auto& obj = frame.objects[static_cast<std::size_t>(i)];
    if (contains(roi, obj.position) == ZoneHit::Outside) continue;
    if (obj.confidence < cfg.min_confidence) continue;
    kept.push_back(i);
  }
  return kept;
}

// Kuhn's augmenting-path maximum matching. Instances are tiny (a handful of
// objects per frame); iterating camera rows and LiDAR columns in ascending order
// makes the reported pairing deterministic.
class BipartiteMatcher {
 public:
  BipartiteMatcher(int n_cam, int n_lid, const std::vector<std::vector<bool>>& compatible)
      : n_cam_(n_cam), n_lid_(n_lid), compatible_(compatible), match_lid_(n_lid, -1) {}

  int solve() {
    int matched = 0;
    for (int c = 0; c < n_cam_; ++c) {
      std::vector<bool> visited(static_cast<std::size_t>(n_lid_), false);
      if (try_augment(c, visited)) ++matched;
    }
    return matched;
  }

  const std::vector<int>& lidar_to_camera() const { return match_lid_; }

 private:
  bool try_augment(int cam, std::vector<bool>& visited) {
    for (int l = 0; l < n_lid_; ++l) {
      if (!compatible_[static_cast<std::size_t>(cam)][static_cast<std::size_t>(l)] ||
          visited[static_cast<std::size_t>(l)])
        continue;
      visited[static_cast<std::size_t>(l)] = true;
      if (match_lid_[static_cast<std::size_t>(l)] < 0 ||
          try_augment(match_lid_[static_cast<std::size_t>(l)], visited)) {
        match_lid_[static_cast<std::size_t>(l)] = cam;
        return true;
      }
    }
    return false;
  }

  int n_cam_;
  int n_lid_;
  const std::vector<std::vector<bool>>& compatible_;
  std::vector<int> match_lid_;  // lidar slot -> camera slot or -1
};

}  // namespace

ObjectListFrame filter_roi(const ObjectListFrame& frame, const RegionOfInterest& roi,
                           const ValidatorConfig& cfg) {
  ObjectListFrame out;
  out.source = frame.source;
  out.frame_time = frame.frame_time;
  for (int i : roi_filter_indices(frame, roi, cfg))
    out.objects.push_back(frame.objects[static_cast<std::size_t>(i)]);
  return out;
}

std::optional<RejectReason> pair_compatible(const DetectedObject& a, const DetectedObject& b,
                                            const ValidatorConfig& cfg) {
  if (cfg.require_class_equal && a.class_label != b.class_label)
    return RejectReason::ClassMismatch;
  if (euclid(a.position, b.position) > cfg.max_center_dist_m) return RejectReason::CenterDist;
  if (std::abs(a.width_m - b.width_m) > cfg.max_width_diff_m) return RejectReason::WidthDiff;
  if (std::abs(a.height_m - b.height_m) > cfg.max_height_diff_m) return RejectReason::HeightDiff;
  if (std::abs(a.sensed_at.t_ms - b.sensed_at.t_ms) > cfg.pair_max_dt_ms)
    return RejectReason::TimestampGap;
  return std::nullopt;
}

ValidationVerdict decide(const ObjectListFrame& cam_frame, const ObjectListFrame& lidar_frame,
                         const RegionOfInterest& roi, const ValidatorConfig& cfg) {
  if (cam_frame.source != SensorSource::Camera)
    throw std::invalid_argument("decide: first frame must come from the camera");
  if (lidar_frame.source != SensorSource::Lidar)
    throw std::invalid_argument("decide: second frame must come from the LiDAR");

  ValidationVerdict verdict;
  verdict.at = roi.computed_at;
  verdict.roi = roi;

  const std::vector<int> cam_kept = roi_filter_indices(cam_frame, roi, cfg);
  const std::vector<int> lid_kept = roi_filter_indices(lidar_frame, roi, cfg);

  MatchReport report;
  if (cam_kept.empty() && lid_kept.empty()) {
    // Nothing safety-relevant seen by either side: consistent by definition.
    verdict.status = VerdictStatus::Consistent;
    verdict.report = std::move(report);
    return verdict;
  }

  const int nc = static_cast<int>(cam_kept.size());
  const int nl = static_cast<int>(lid_kept.size());
  std::vector<std::vector<bool>> compatible(static_cast<std::size_t>(nc),
                                            std::vector<bool>(static_cast<std::size_t>(nl), false));
  for (int c = 0; c < nc; ++c) {
    const auto& cam_obj = cam_frame.objects[static_cast<std::size_t>(cam_kept[c])];
    for (int l = 0; l < nl; ++l) {
      const auto& lid_obj = lidar_frame.objects[static_cast<std::size_t>(lid_kept[l])];
      const auto reject = pair_compatible(cam_obj, lid_obj, cfg);
      if (reject) {
        report.reject_reasons.push_back({cam_kept[c], lid_kept[l], *reject});
      } else {
        compatible[static_cast<std::size_t>(c)][static_cast<std::size_t>(l)] = true;
      }
    }
  }

  BipartiteMatcher matcher(nc, nl, compatible);
  const int matched = matcher.solve();

  std::vector<int> cam_partner(static_cast<std::size_t>(nc), -1);
  const auto& lid_match = matcher.lidar_to_camera();
  for (int l = 0; l < nl; ++l) {
    if (lid_match[static_cast<std::size_t>(l)] >= 0)
      cam_partner[static_cast<std::size_t>(lid_match[static_cast<std::size_t>(l)])] = l;
  }
  for (int c = 0; c < nc; ++c) {
    if (cam_partner[static_cast<std::size_t>(c)] >= 0) {
      report.pairs.emplace_back(cam_kept[c],
                                lid_kept[static_cast<std::size_t>(cam_partner[static_cast<std::size_t>(c)])]);
    } else {
      report.unmatched_camera.push_back(cam_kept[c]);
    }
  }
  for (int l = 0; l < nl; ++l) {
    if (lid_match[static_cast<std::size_t>(l)] < 0) report.unmatched_lidar.push_back(lid_kept[l]);
  }

  verdict.status = (matched == nc && matched == nl) ? VerdictStatus::Consistent
                                                    : VerdictStatus::Inconsistent;
  verdict.report = std::move(report);
  return verdict;
}

ValidationVerdict evaluate(Timestamp now, const SensorBuffer& camera, const SensorBuffer& lidar,
                           const EgoState& ego, const ValidatorConfig& cfg, const BaseZones& zones,
                           const RoiParams& roi_params) {
  const auto cfg_errors = validate_config(cfg);
  if (!cfg_errors.empty()) {
    std::ostringstream oss;
    oss << "invalid validator config:";
    for (const auto& e : cfg_errors) oss << " " << e << ";";
    throw std::invalid_argument(oss.str());
  }

  const RegionOfInterest roi = compute_roi(ego, zones.clear, zones.focus, roi_params);
  const SnapshotResult snap = snapshot_pair(camera, lidar, now, cfg);
  if (!snap.has_pair()) {
    ValidationVerdict verdict;
    verdict.status = VerdictStatus::NoData;
    verdict.at = now;
    verdict.roi = roi;
    verdict.no_data_side = snap.no_data_side;
    return verdict;
  }

  ValidationVerdict verdict = decide(snap.pair->camera, snap.pair->lidar, roi, cfg);
  verdict.at = now;
  return verdict;
}

}  // namespace percmon
