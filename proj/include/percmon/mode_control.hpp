#pragma once

#include <optional>

#include "percmon/types.hpp"
#include "percmon/validator.hpp"

namespace percmon {

// Maps the verdict stream to a fail-operational reaction signal. Only the
// trigger interface lives here; the actual degradation maneuvers are out of
// scope. Debouncing keeps single-frame detector flicker from degrading the ADS.

enum class AdsModeKind { Nominal, Degraded, SafeStopRequested };

const char* ads_mode_label(AdsModeKind m);

enum class ModeCause { InconsistencyDebounce, NoDataTimeout, Recovered, ExternalReset };

const char* mode_cause_label(ModeCause c);

struct AdsMode {
  AdsModeKind mode = AdsModeKind::Nominal;
  Timestamp since;  // time of the last transition
  std::optional<ModeCause> cause;

  bool operator==(const AdsMode&) const = default;
};

struct ModePolicy {
  int k_inconsistent = 3;          // consecutive Inconsistent verdicts before Degraded
  std::int64_t nodata_ms = 1000;   // sustained NoData before SafeStopRequested
};

// Full state of the debouncing machine. The mode after a verdict stream is a
// pure function of the stream; replaying a log reproduces it exactly.
struct ModeState {
  AdsMode current;
  int inconsistent_run = 0;
  std::optional<Timestamp> nodata_since;  // start of the uninterrupted NoData streak
  std::optional<Timestamp> last_at;

  bool operator==(const ModeState&) const = default;
};

struct ModeTransition {
  Timestamp at;
  AdsModeKind from = AdsModeKind::Nominal;
  AdsModeKind to = AdsModeKind::Nominal;
  ModeCause cause = ModeCause::Recovered;

  bool operator==(const ModeTransition&) const = default;
};

// One verdict in, next state out. Rules:
//   - k_inconsistent consecutive Inconsistent verdicts -> Degraded;
//   - NoData persisting >= nodata_ms -> SafeStopRequested (absorbing: only
//     reset() leaves it);
//   - Consistent returns Degraded to Nominal and clears all counters; NoData
//     interrupts an inconsistent run without changing mode.
// Throws std::invalid_argument on policy violations or a verdict timestamp
// earlier than the previous one (timestamps must be non-decreasing).
ModeState step(const ModeState& state, const ValidationVerdict& verdict,
               const ModePolicy& policy);

// Explicit external reset; the only way out of SafeStopRequested.
ModeState reset(Timestamp at);

}  // namespace percmon
