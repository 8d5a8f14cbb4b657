#include "percmon/sync_buffer.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace percmon {

namespace {

bool object_stale(Timestamp now, const DetectedObject& obj, std::int64_t stale_timeout_ms) {
  return age_ms(now, obj.sensed_at) > stale_timeout_ms;  // strict "older than"
}

bool frame_fresh(Timestamp now, const ObjectListFrame& frame, std::int64_t nodata_timeout_ms) {
  return age_ms(now, frame.frame_time) <= nodata_timeout_ms;
}

ObjectListFrame strip_stale_objects(const ObjectListFrame& frame, Timestamp now,
                                    std::int64_t stale_timeout_ms) {
  ObjectListFrame out;
  out.source = frame.source;
  out.frame_time = frame.frame_time;
  out.objects.reserve(frame.objects.size());
  for (const auto& obj : frame.objects) {
    if (!object_stale(now, obj, stale_timeout_ms)) out.objects.push_back(obj);
  }
  return out;
}

}  // namespace

SensorBuffer::SensorBuffer(SensorSource source, std::size_t capacity)
    : source_(source), capacity_(capacity) {
  if (capacity_ == 0) throw std::invalid_argument("buffer capacity must be > 0");
}

void SensorBuffer::ingest(const ObjectListFrame& frame) {
  if (frame.source != source_) {
    throw std::invalid_argument(std::string("frame source ") + source_label(frame.source) +
                                " does not match buffer source " + source_label(source_));
  }
  auto pos = std::upper_bound(
      frames_.begin(), frames_.end(), frame,
      [](const ObjectListFrame& a, const ObjectListFrame& b) { return a.frame_time < b.frame_time; });
  frames_.insert(pos, frame);
  while (frames_.size() > capacity_) frames_.pop_front();
}

void SensorBuffer::prune_stale(Timestamp now, std::int64_t stale_timeout_ms) {
  std::deque<ObjectListFrame> kept;
  for (const auto& frame : frames_) {
    ObjectListFrame pruned = strip_stale_objects(frame, now, stale_timeout_ms);
    // Frames *left* empty by pruning go away; frames that arrived empty are a
    // valid observation and stay.
    if (!pruned.objects.empty() || frame.objects.empty()) kept.push_back(std::move(pruned));
  }
  frames_ = std::move(kept);
}

SnapshotResult snapshot_pair(const SensorBuffer& camera, const SensorBuffer& lidar, Timestamp now,
                             const ValidatorConfig& cfg) {
  auto newest_fresh = [&](const SensorBuffer& buf) -> const ObjectListFrame* {
    for (auto it = buf.frames().rbegin(); it != buf.frames().rend(); ++it) {
      if (frame_fresh(now, *it, cfg.nodata_timeout_ms)) return &*it;
    }
    return nullptr;
  };

  SnapshotResult result;
  const ObjectListFrame* cam = newest_fresh(camera);
  if (cam == nullptr) {
    result.no_data_side = SensorSource::Camera;
    return result;
  }
  const ObjectListFrame* lid = newest_fresh(lidar);
  if (lid == nullptr) {
    result.no_data_side = SensorSource::Lidar;
    return result;
  }
  result.pair = SnapshotPair{strip_stale_objects(*cam, now, cfg.stale_timeout_ms),
                             strip_stale_objects(*lid, now, cfg.stale_timeout_ms)};
  return result;
}

}  // namespace percmon
