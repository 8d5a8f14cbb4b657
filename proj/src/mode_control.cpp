#include "percmon/mode_control.hpp"

#include <stdexcept>

namespace percmon {

const char* ads_mode_label(AdsModeKind m) {
  switch (m) {
    case AdsModeKind::Nominal: return "Nominal";
    case AdsModeKind::Degraded: return "Degraded";
    case AdsModeKind::SafeStopRequested: return "SafeStopRequested";
  }
  return "?";
}

const char* mode_cause_label(ModeCause c) {
  switch (c) {
    case ModeCause::InconsistencyDebounce: return "InconsistencyDebounce";
    case ModeCause::NoDataTimeout: return "NoDataTimeout";
    case ModeCause::Recovered: return "Recovered";
    case ModeCause::ExternalReset: return "ExternalReset";
  }
  return "?";
}

ModeState step(const ModeState& state, const ValidationVerdict& verdict,
               const ModePolicy& policy) {
  if (policy.k_inconsistent <= 0) throw std::invalid_argument("k_inconsistent must be > 0");
  if (policy.nodata_ms <= 0) throw std::invalid_argument("nodata_ms must be > 0");
  if (state.last_at && verdict.at < *state.last_at)
    throw std::invalid_argument("verdict timestamps must be non-decreasing");

  ModeState next = state;
  next.last_at = verdict.at;

  const bool absorbed = state.current.mode == AdsModeKind::SafeStopRequested;
  auto transition = [&](AdsModeKind to, ModeCause cause) {
    next.current = AdsMode{to, verdict.at, cause};
  };

  switch (verdict.status) {
    case VerdictStatus::Consistent:
      next.inconsistent_run = 0;
      next.nodata_since.reset();
      if (!absorbed && state.current.mode == AdsModeKind::Degraded)
        transition(AdsModeKind::Nominal, ModeCause::Recovered);
      break;

    case VerdictStatus::Inconsistent:
      next.nodata_since.reset();
      next.inconsistent_run = state.inconsistent_run + 1;
      if (!absorbed && state.current.mode != AdsModeKind::Degraded &&
          next.inconsistent_run >= policy.k_inconsistent)
        transition(AdsModeKind::Degraded, ModeCause::InconsistencyDebounce);
      break;

    case VerdictStatus::NoData:
      next.inconsistent_run = 0;
      if (!next.nodata_since) next.nodata_since = verdict.at;
      if (!absorbed && age_ms(verdict.at, *next.nodata_since) >= policy.nodata_ms)
        transition(AdsModeKind::SafeStopRequested, ModeCause::NoDataTimeout);
      break;
  }
  return next;
}

ModeState reset(Timestamp at) {
  ModeState state;
  state.current = AdsMode{AdsModeKind::Nominal, at, ModeCause::ExternalReset};
  return state;
}

}  // namespace percmon
