#pragma once

#include <vector>

#include "zeno/algebra.hpp"
#include "zeno/schedule.hpp"

namespace zeno {

/// The single radiative channel of the model: level 3 decays to level 1
/// with rate gamma (jump operator |1><3|). 1/gamma is the spontaneous
/// emission lifetime.
struct DecayChannel {
  double gamma = 0.0;
};

/// Rotating-frame Hamiltonian for a pair of resonant drives:
///   H = (omega_rf/2)(|1><2| + |2><1|) + (omega_opt/2)(|1><3| + |3><1|).
Matrix3 drive_hamiltonian(const DriveLevels& drives);

/// Hamiltonian of the segment containing t. Throws OutOfSchedule if t is
/// outside the schedule span. A boundary time belongs to the later segment.
Matrix3 hamiltonian_at(double t, const PulseSchedule& schedule);

/// Right-hand side of the master equation
///   d rho / dt = -i [H, rho] + gamma (s rho s^dag - 1/2 {s^dag s, rho}),
/// with s = |1><3|. The result is Hermitian and traceless.
Matrix3 lindblad_rhs(const Matrix3& rho, const Matrix3& h,
                     const DecayChannel& decay);

/// One classical RK4 step of length dt starting at time t. The drive
/// segment is resolved once at t and held fixed across the four stages
/// (drives are piecewise constant and steps never cross a boundary).
/// The result is re-symmetrized, rho <- (rho + rho^dag)/2; the trace is
/// never repaired. Throws StepUnstable if any entry becomes non-finite.
Matrix3 rk4_step(const Matrix3& rho, double t, double dt,
                 const PulseSchedule& schedule, const DecayChannel& decay);

/// Recorded time series of the density matrix plus the numerical-hygiene
/// diagnostics monitored along the way.
struct Trajectory {
  std::vector<double> times;
  std::vector<Matrix3> states;
  std::vector<double> trace_errors;     // |tr rho - 1| per recorded sample
  std::vector<double> min_eigenvalues;  // smallest eigenvalue per sample

  double max_trace_error = 0.0;            // over every step taken
  double max_hermiticity_residual = 0.0;   // pre-symmetrization, every step

  const Matrix3& final_state() const { return states.back(); }
  double final_time() const { return times.back(); }
};

/// Integrate rho0 across the whole schedule. dt is subdivided per segment so
/// each segment is an integer number of steps and boundaries are always step
/// boundaries. Records the initial state, every record_stride-th step, and
/// the final state.
///
/// Throws ValidationError if rho0 is not a valid density matrix,
/// ConfigInvalid if the dt stability bound dt*max(rates) <= 0.02 is violated,
/// StepUnstable from the stepper, and NumericError if the trace drifts by
/// more than 1e-8 (drift is monitored, never silently repaired).
Trajectory evolve(const Matrix3& rho0, const PulseSchedule& schedule,
                  const DecayChannel& decay, const IntegratorConfig& cfg);

/// Stability/accuracy bound used by evolve: dt * max(omega_rf, omega_opt,
/// gamma) must not exceed this.
inline constexpr double kDtRateBound = 0.02;

/// Hard ceiling on trace drift for any run.
inline constexpr double kTraceDriftBound = 1e-8;

}  // namespace zeno
