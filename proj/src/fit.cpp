#include "zeno/fit.hpp"

#include <cmath>
#include <cstddef>
#include <sstream>

namespace zeno {

double fit_decay_rate(std::span<const double> times,
                      std::span<const double> values, FitWindow window) {
  if (times.size() != values.size()) {
    throw ValidationError("times and values must have equal length");
  }
  constexpr double kFloor = 1e-12;
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double t = times[i];
    if (t < window.t_lo || t > window.t_hi) continue;
    const double v = values[i];
    if (!(v > kFloor)) {
      std::ostringstream os;
      os << "sample " << v << " at t=" << t << " is below the " << kFloor
         << " floor; log-linear fit is undefined";
      throw NonPositiveSamples(os.str());
    }
    const double y = std::log(v);
    sx += t;
    sy += y;
    sxx += t * t;
    sxy += t * y;
    ++n;
  }
  if (n < 2) {
    std::ostringstream os;
    os << "fit window [" << window.t_lo << ", " << window.t_hi
       << "] contains " << n << " samples; need at least 2";
    throw WindowEmpty(os.str());
  }
  const double denom = static_cast<double>(n) * sxx - sx * sx;
  if (denom == 0.0) throw WindowEmpty("fit window has no time spread");
  return -(static_cast<double>(n) * sxy - sx * sy) / denom;
}

}  // namespace zeno
