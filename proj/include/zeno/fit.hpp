#pragma once

#include <span>

#include "zeno/errors.hpp"

namespace zeno {

struct FitWindow {
  double t_lo = 0.0;
  double t_hi = 0.0;
};

/// Least-squares slope of ln(values) against times over the window, negated,
/// i.e. the decay rate of an (approximately) exponential series.
///
/// Throws WindowEmpty if fewer than two samples fall inside the window and
/// NonPositiveSamples if any sample in the window is <= 1e-12 (the log would
/// be dominated by noise or undefined).
double fit_decay_rate(std::span<const double> times,
                      std::span<const double> values, FitWindow window);

}  // namespace zeno
