#pragma once

#include <vector>

#include "zeno/errors.hpp"

namespace zeno {

/// Rabi frequencies of the two resonant drives (rad/time, rotating frame).
struct DriveLevels {
  double omega_rf = 0.0;   // 1 <-> 2 RF drive
  double omega_opt = 0.0;  // 1 <-> 3 optical drive
};

struct PulseSegment {
  double t_start = 0.0;
  double t_end = 0.0;
  DriveLevels drives;
  double length() const { return t_end - t_start; }
};

/// Contiguous, non-overlapping drive segments covering [0, span].
/// Segments are half-open [t_start, t_end): a time exactly on a boundary
/// belongs to the later segment; t == span resolves to the last segment.
class PulseSchedule {
 public:
  PulseSchedule() = default;

  /// Validates contiguity (t_start[0] == 0, t_end[k] == t_start[k+1]) and
  /// drops zero-length segments. Throws ValidationError on gaps/overlaps.
  static PulseSchedule from_segments(std::vector<PulseSegment> segments);

  const std::vector<PulseSegment>& segments() const { return segments_; }
  bool empty() const { return segments_.empty(); }
  double span() const { return segments_.empty() ? 0.0 : segments_.back().t_end; }

  /// Segment containing t. Throws OutOfSchedule outside [0, span] or when
  /// the schedule is empty.
  const PulseSegment& segment_at(double t) const;

  /// Largest drive rate appearing anywhere in the schedule.
  double max_rate() const;

 private:
  std::vector<PulseSegment> segments_;
};

/// Fixed-step integrator knobs. dt == 0 or record_stride == 0 mean
/// "resolve automatically from the run's rates" (see finalized() helpers).
struct IntegratorConfig {
  double dt = 0.0;
  long record_stride = 0;  // record every k-th step
};

}  // namespace zeno
