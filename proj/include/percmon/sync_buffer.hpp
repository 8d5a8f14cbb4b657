#pragma once

#include <cstddef>
#include <deque>
#include <optional>

#include "percmon/types.hpp"

namespace percmon {

// Per-sensor frame buffering. Camera and LiDAR lists arrive at different rates;
// the validator always works on the newest fresh frame per side. Two separate
// checks exist on purpose:
//   - frame freshness (frame_time vs nodata_timeout_ms) decides NoData — "no
//     messages" is not the same as "empty detections";
//   - object staleness (sensed_at vs stale_timeout_ms, strict "older than")
//     silently drops old objects from an otherwise fresh frame.
//
// Single-writer; snapshots are plain values once taken.
class SensorBuffer {
 public:
  explicit SensorBuffer(SensorSource source, std::size_t capacity = 16);

  SensorSource source() const { return source_; }
  std::size_t capacity() const { return capacity_; }
  const std::deque<ObjectListFrame>& frames() const { return frames_; }
  bool empty() const { return frames_.empty(); }

  // Inserts in frame_time order (out-of-order arrivals accepted); evicts the
  // oldest frame when over capacity. Throws std::invalid_argument if the frame
  // source differs from the buffer source.
  void ingest(const ObjectListFrame& frame);

  // Drops every object with age strictly greater than stale_timeout_ms and
  // removes frames left empty by that pruning. Idempotent for a fixed `now`.
  void prune_stale(Timestamp now, std::int64_t stale_timeout_ms);

 private:
  SensorSource source_;
  std::size_t capacity_;
  std::deque<ObjectListFrame> frames_;  // sorted by frame_time ascending
};

struct SnapshotPair {
  ObjectListFrame camera;
  ObjectListFrame lidar;
};

// Either a frame pair or the starved side.
struct SnapshotResult {
  std::optional<SnapshotPair> pair;
  std::optional<SensorSource> no_data_side;

  bool has_pair() const { return pair.has_value(); }
};

// Selects the newest frame per side with frame_time within nodata_timeout_ms of
// `now`, then strips stale objects from the selected frames. A selected frame
// whose objects were all stale still yields a Pair with an empty list. If a side
// has no fresh frame at all, reports NoData for that side (camera checked first
// when both are starved).
SnapshotResult snapshot_pair(const SensorBuffer& camera, const SensorBuffer& lidar, Timestamp now,
                             const ValidatorConfig& cfg);

}  // namespace percmon
