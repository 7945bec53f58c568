#pragma once

#include <vector>

#include "zeno/lindblad.hpp"

namespace zeno {

/// Full parameterization of one Zeno experiment: an RF pi-pulse whose free
/// evolution is interrupted by n optical measurement pulses.
///
/// Timing layout: cycle k (k = 1..n) is a free-evolution interval of length
/// tau = (pi/omega_rf)/n followed by a measurement window of length
/// pulse_duration that closes the cycle, so the RF drive accumulates exactly
/// a pi pulse across the free intervals and the total span is
/// pi/omega_rf + n*pulse_duration. The final pulse ends the experiment.
struct ZenoConfig {
  double omega_rf = 1.0;
  double omega_opt = 0.0;
  double gamma = 0.0;
  int n_pulses = 1;
  double pulse_duration = 0.0;
  bool rf_during_pulse = true;
  IntegratorConfig integrator;

  /// Duration of the RF pi-pulse proper (free-evolution time), pi/omega_rf.
  double rf_window() const;
  /// Measurement spacing tau: length of each free-evolution interval.
  double pulse_spacing() const;
  /// Total schedule span, rf_window() + n_pulses * pulse_duration.
  double span() const;

  /// Throws ValidationError on any violated invariant (rates nonnegative,
  /// omega_rf > 0, n_pulses >= 1, 0 < pulse_duration < tau, resolved
  /// integrator settings).
  void validate() const;
};

/// Copy of cfg with automatic integrator settings materialized:
/// dt = 0.01 / max(omega_rf, omega_opt, gamma) when unset, and a record
/// stride targeting about 2000 samples when unset.
ZenoConfig finalized(ZenoConfig cfg);

/// Outcome of one experiment: populations at the end of the run, the
/// projection-postulate oracle value for P2, and their absolute difference.
struct ZenoResult {
  double p1 = 0.0, p2 = 0.0, p3 = 0.0;
  double formula_p2 = 0.0;
  double deviation = 0.0;
  Trajectory trajectory;
};

/// Projection-postulate closed form P2(n) = (1 - cos^n(pi/n)) / 2: the
/// probability of reaching level 2 after a pi pulse cut by n ideal
/// instantaneous measurements.
double projection_formula(int n);

/// Independent oracle for the closed form: rotate the 1-2 block by pi/n,
/// zero the 1-2 coherence, repeat n times, return rho22. Agrees with
/// projection_formula to better than 1e-12.
double projective_chain(int n);

/// Alternating free-evolution / measurement-window segments for cfg
/// (2*n_pulses segments). Throws ValidationError via cfg.validate().
PulseSchedule build_schedule(const ZenoConfig& cfg);

/// Run the full Bloch/Lindblad dynamics for cfg and compare against the
/// projection formula.
ZenoResult run_zeno(const ZenoConfig& cfg);

/// How completely one optical pulse destroys the 1-2 coherence: prepare the
/// equal superposition of levels 1 and 2, drive 1<->3 for tau_p with the RF
/// off, and return |rho12(tau_p)| / |rho12(0)|.
double pulse_kill_ratio(double omega_opt, double gamma, double tau_p);

/// First time at which |rho12| falls to 1/e of its initial value under a
/// continuous optical drive (linear interpolation between samples).
/// Throws NotReached if no crossing occurs within 50/gamma.
double decoherence_time(double omega_opt, double gamma);

/// Derived per-point configuration for a measurement-spacing sweep: gamma
/// replaced, pulse_duration co-scaled to min(tau/4, 10/gamma) so the pulse
/// stays a valid measurement, integrator re-resolved for the new rates.
/// gamma == 0 gates the optical drive off entirely (no measurement channel,
/// hence no measurement).
ZenoConfig spacing_config(const ZenoConfig& base, double gamma);

struct SpacingPoint {
  double gamma = 0.0;
  double gamma_tau = 0.0;
  double deviation = 0.0;
};

/// Deviation-from-formula curve across decay rates, probing how close
/// together measurements can be spaced relative to the 1/gamma lifetime.
/// Rows are sorted by gamma descending.
std::vector<SpacingPoint> spacing_deviation_curve(
    const ZenoConfig& base, std::vector<double> gamma_list);

}  // namespace zeno
