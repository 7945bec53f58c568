#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "zeno/algebra.hpp"
#include "zeno/fit.hpp"

namespace zeno {

/// Discretized vacuum environment for a two-level emitter (levels 1 and 3
/// of the atomic basis): N modes on a uniform grid centered on resonance,
/// all with the same coupling g. The single-excitation sector closes under
/// this Hamiltonian, so the state is just N+2 amplitudes.
struct BathConfig {
  int n_modes = 0;          // N, odd so one mode sits exactly on resonance
  double mode_spacing = 0.0;  // delta-omega between adjacent modes
  double coupling = 0.0;      // g, uniform over modes
  double t_max = 0.0;
  double dt = 0.0;
  long record_stride = 1;
  // Runs past the recurrence time are rejected unless explicitly requested;
  // the revival is a discreteness artifact, not physics.
  bool allow_past_recurrence = false;

  double bandwidth() const { return (n_modes - 1) * mode_spacing; }
  double recurrence_time() const;
  /// Detuning of mode k from resonance, (k - (N-1)/2) * mode_spacing.
  double detuning(int k) const;

  /// Structural checks: N odd and >= 3, positive spacing/times, g >= 0,
  /// dt * bandwidth/2 <= 0.05, t_max <= recurrence_time()/2 unless
  /// allow_past_recurrence. Throws ValidationError.
  void validate() const;

  /// Non-fatal accuracy advisories, e.g. a bandwidth below 20x the
  /// golden-rule rate (the fitted decay rate then sits measurably above the
  /// golden-rule value).
  std::vector<std::string> accuracy_warnings() const;
};

/// Amplitudes of the single-excitation sector. c_g (ground + vacuum) is a
/// spectator: the interaction never moves it.
struct BathState {
  Complex c_g{0.0, 0.0};
  Complex c_e{0.0, 0.0};
  Eigen::VectorXcd c_modes;

  static BathState excited(const BathConfig& cfg);
  /// c_e = c_g = 1/sqrt(2), modes empty: the state whose reduced emitter
  /// coherence |rho_eg| = |c_g| |c_e| probes decoherence.
  static BathState superposition(const BathConfig& cfg);

  double norm_squared() const {
    return std::norm(c_g) + std::norm(c_e) + c_modes.squaredNorm();
  }
};

/// Golden-rule decay rate for the flat spectral density: 2 pi g^2 / dw.
double golden_rule_rate(const BathConfig& cfg);

/// Interaction-picture amplitude equations:
///   dc_e/dt = -i g sum_k exp(+i D_k t) c_k
///   dc_k/dt = -i g exp(-i D_k t) c_e
///   dc_g/dt = 0.
/// Returned as a BathState holding the derivatives.
BathState ww_rhs(const BathState& state, double t, const BathConfig& cfg);

struct BathSample {
  double t = 0.0;
  double excited_population = 0.0;  // |c_e|^2
  double coherence = 0.0;           // |c_g| * |c_e|
  double norm_error = 0.0;          // |norm^2 - initial norm^2|
};

struct BathSeries {
  std::vector<BathSample> samples;
  double max_norm_drift = 0.0;

  std::vector<double> times() const;
  std::vector<double> populations() const;
  std::vector<double> coherences() const;
};

/// RK4 integration of the amplitude equations over [0, t_max] with samples
/// every record_stride steps (the initial and final states are always
/// recorded). Throws StepUnstable on non-finite amplitudes.
BathSeries ww_evolve(const BathConfig& cfg, const BathState& initial);

/// Default rate-fit window for a run: starts after the short-time quadratic
/// region at 2/bandwidth, ends at min(5/rate, 0.4 * recurrence, t_max).
FitWindow default_fit_window(const BathConfig& cfg);

struct CoherenceRates {
  double population_rate = 0.0;  // fitted decay rate of |c_e|^2
  double coherence_rate = 0.0;   // fitted decay rate of |rho_eg|
  double ratio = 0.0;            // coherence_rate / population_rate
};

/// Evolve the 1/sqrt(2) superposition and fit both decay rates over the
/// default window. The off-diagonal element decays at half the population
/// rate. Throws NotDecaying when the population rate is indistinguishable
/// from zero (e.g. g == 0).
CoherenceRates coherence_ratio(const BathConfig& cfg);

}  // namespace zeno
