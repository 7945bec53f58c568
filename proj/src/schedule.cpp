#include "zeno/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace zeno {

PulseSchedule PulseSchedule::from_segments(std::vector<PulseSegment> segments) {
  std::vector<PulseSegment> kept;
  kept.reserve(segments.size());
  double cursor = 0.0;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const PulseSegment& s = segments[i];
    if (!(std::isfinite(s.t_start) && std::isfinite(s.t_end))) {
      throw ValidationError("schedule segment has non-finite endpoints");
    }
    if (s.t_start != cursor) {
      std::ostringstream os;
      os << "schedule segments must be contiguous from 0: segment " << i
         << " starts at " << s.t_start << ", expected " << cursor;
      throw ValidationError(os.str());
    }
    if (s.t_end < s.t_start) {
      throw ValidationError("schedule segment has negative length");
    }
    cursor = s.t_end;
    if (s.length() > 0.0) kept.push_back(s);
  }
  PulseSchedule out;
  out.segments_ = std::move(kept);
  return out;
}

const PulseSegment& PulseSchedule::segment_at(double t) const {
  if (segments_.empty() || t < 0.0 || t > span()) {
    std::ostringstream os;
    os << "time " << t << " outside schedule span [0, " << span() << "]";
    throw OutOfSchedule(os.str());
  }
  // Boundary times belong to the later segment; t == span resolves to the
  // last segment.
  auto it = std::upper_bound(
      segments_.begin(), segments_.end(), t,
      [](double value, const PulseSegment& s) { return value < s.t_start; });
  return *(it - 1);
}

double PulseSchedule::max_rate() const {
  double m = 0.0;
  for (const PulseSegment& s : segments_) {
    m = std::max({m, s.drives.omega_rf, s.drives.omega_opt});
  }
  return m;
}

}  // namespace zeno
