#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "percmon/safe_zone.hpp"
#include "percmon/sync_buffer.hpp"
#include "percmon/types.hpp"

namespace percmon {

// Pair-comparison reject reasons, in the fixed evaluation order. Confidence is
// part of the reason-code schema but is never produced by pair comparison: it is
// an ingestion gate (filter_roi), not a cross-sensor criterion.
enum class RejectReason { ClassMismatch, CenterDist, WidthDiff, HeightDiff, TimestampGap,
                          Confidence };

const char* reject_reason_label(RejectReason r);

// Diagnostics for one consistency decision. Indices refer to object positions in
// the original input frames; only in-ROI objects (the survivors of filter_roi)
// appear, each exactly once across pairs/unmatched.
struct MatchReport {
  struct Reject {
    int camera_index = 0;
    int lidar_index = 0;
    RejectReason reason = RejectReason::ClassMismatch;

    bool operator==(const Reject&) const = default;
  };

  std::vector<std::pair<int, int>> pairs;  // (camera index, lidar index)
  std::vector<int> unmatched_camera;
  std::vector<int> unmatched_lidar;
  std::vector<Reject> reject_reasons;  // every incompatible candidate pair, first failure
};

enum class VerdictStatus { Consistent, Inconsistent, NoData };

const char* verdict_status_label(VerdictStatus s);

// One monitor evaluation. Consistent iff both unmatched lists are empty (report
// present); NoData carries the starved side and no report. The ROI snapshot is
// always attached so every verdict record can be plotted offline.
struct ValidationVerdict {
  VerdictStatus status = VerdictStatus::NoData;
  Timestamp at;
  std::optional<MatchReport> report;
  RegionOfInterest roi;
  std::optional<SensorSource> no_data_side;
};

// Keeps exactly the objects inside the ROI (either zone) with confidence >=
// cfg.min_confidence; order preserved.
ObjectListFrame filter_roi(const ObjectListFrame& frame, const RegionOfInterest& roi,
                           const ValidatorConfig& cfg);

// Attribute compatibility of one camera/LiDAR candidate pair. Criteria run in
// the fixed order class, center distance, width, height, timestamp; the first
// failure is reported. All threshold comparisons are inclusive (<=).
std::optional<RejectReason> pair_compatible(const DetectedObject& a, const DetectedObject& b,
                                            const ValidatorConfig& cfg);

// The consistency decision over one frame pair, after ROI pruning:
//   - both pruned lists empty -> Consistent;
//   - otherwise Consistent iff a maximum bipartite matching over compatible
//     pairs covers both sides completely.
// Matching ties break by ascending (camera index, lidar index); the status is
// invariant under input permutation. Frames are expected staleness-pruned.
// Throws std::invalid_argument if frame sources are not Camera/Lidar respectively.
ValidationVerdict decide(const ObjectListFrame& cam_frame, const ObjectListFrame& lidar_frame,
                         const RegionOfInterest& roi, const ValidatorConfig& cfg);

// Full monitor step: snapshot_pair -> NoData short-circuit -> compute_roi ->
// decide. Exactly one verdict per call, stamped with `now`. Throws
// std::invalid_argument on config violations.
ValidationVerdict evaluate(Timestamp now, const SensorBuffer& camera, const SensorBuffer& lidar,
                           const EgoState& ego, const ValidatorConfig& cfg,
                           const BaseZones& zones, const RoiParams& roi_params = {});

}  // namespace percmon
