#include "zeno/lindblad.hpp"

#include <cmath>
#include <sstream>

namespace zeno {
namespace {

constexpr Complex kI(0.0, 1.0);

bool all_finite(const Matrix3& m) {
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      if (!std::isfinite(m(r, c).real()) || !std::isfinite(m(r, c).imag())) {
        return false;
      }
    }
  }
  return true;
}

// RK4 with fixed Hamiltonian; returns the symmetrized state and reports the
// pre-symmetrization Hermiticity residual.
Matrix3 rk4_fixed_h(const Matrix3& rho, const Matrix3& h,
                    const DecayChannel& decay, double dt, double* herm_residual) {
  const Matrix3 k1 = lindblad_rhs(rho, h, decay);
  const Matrix3 k2 = lindblad_rhs(rho + (0.5 * dt) * k1, h, decay);
  const Matrix3 k3 = lindblad_rhs(rho + (0.5 * dt) * k2, h, decay);
  const Matrix3 k4 = lindblad_rhs(rho + dt * k3, h, decay);
  Matrix3 next = rho + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  if (!all_finite(next)) {
    throw StepUnstable("non-finite density matrix entry after RK4 step");
  }
  if (herm_residual) *herm_residual = hermiticity_residual(next);
  next = 0.5 * (next + next.adjoint().eval());
  return next;
}

}  // namespace

Matrix3 drive_hamiltonian(const DriveLevels& drives) {
  Matrix3 h = Matrix3::Zero();
  h(0, 1) = h(1, 0) = 0.5 * drives.omega_rf;
  h(0, 2) = h(2, 0) = 0.5 * drives.omega_opt;
  return h;
}

Matrix3 hamiltonian_at(double t, const PulseSchedule& schedule) {
  return drive_hamiltonian(schedule.segment_at(t).drives);
}

Matrix3 lindblad_rhs(const Matrix3& rho, const Matrix3& h,
                     const DecayChannel& decay) {
  Matrix3 d = -kI * (h * rho - rho * h);
  if (decay.gamma != 0.0) {
    // Jump operator |1><3|: s rho s^dag = rho33 |1><1|, s^dag s = |3><3|.
    const Complex rho33 = rho(2, 2);
    d(0, 0) += decay.gamma * rho33;
    d(2, 2) -= decay.gamma * rho33;
    const double half = 0.5 * decay.gamma;
    d(0, 2) -= half * rho(0, 2);
    d(1, 2) -= half * rho(1, 2);
    d(2, 0) -= half * rho(2, 0);
    d(2, 1) -= half * rho(2, 1);
  }
  return d;
}

Matrix3 rk4_step(const Matrix3& rho, double t, double dt,
                 const PulseSchedule& schedule, const DecayChannel& decay) {
  const Matrix3 h = hamiltonian_at(t, schedule);
  return rk4_fixed_h(rho, h, decay, dt, nullptr);
}

Trajectory evolve(const Matrix3& rho0, const PulseSchedule& schedule,
                  const DecayChannel& decay, const IntegratorConfig& cfg) {
  const DensityReport rep = validate_density(rho0);
  if (!rep.ok()) {
    std::ostringstream os;
    os << "initial state is not a valid density matrix"
       << " (hermiticity " << rep.hermiticity_residual << ", trace "
       << rep.trace_residual << ", min eigenvalue " << rep.min_eigenvalue
       << ")";
    throw ValidationError(os.str());
  }

  Trajectory traj;
  auto record = [&](double t, const Matrix3& rho) {
    traj.times.push_back(t);
    traj.states.push_back(rho);
    traj.trace_errors.push_back(std::abs(rho.trace() - Complex(1.0, 0.0)));
    traj.min_eigenvalues.push_back(eigenvalues_hermitian(rho, 1e-6)[0]);
  };
  record(0.0, rho0);
  if (schedule.empty()) return traj;

  if (!(cfg.dt > 0.0)) throw ConfigInvalid("integrator dt must be positive");
  if (cfg.record_stride < 1) {
    throw ConfigInvalid("integrator record_stride must be >= 1");
  }
  const double rate = std::max(schedule.max_rate(), decay.gamma);
  if (cfg.dt * rate > kDtRateBound) {
    std::ostringstream os;
    os << "dt " << cfg.dt << " violates the stability bound dt*max_rate <= "
       << kDtRateBound << " (max rate " << rate << ")";
    throw ConfigInvalid(os.str());
  }

  Matrix3 rho = rho0;
  long step_index = 0;
  for (const PulseSegment& seg : schedule.segments()) {
    const Matrix3 h = drive_hamiltonian(seg.drives);
    const long n_steps =
        std::max(1L, static_cast<long>(std::ceil(seg.length() / cfg.dt)));
    const double dt = seg.length() / static_cast<double>(n_steps);
    for (long i = 0; i < n_steps; ++i) {
      double herm = 0.0;
      rho = rk4_fixed_h(rho, h, decay, dt, &herm);
      ++step_index;
      traj.max_hermiticity_residual =
          std::max(traj.max_hermiticity_residual, herm);
      const double trace_err = std::abs(rho.trace() - Complex(1.0, 0.0));
      traj.max_trace_error = std::max(traj.max_trace_error, trace_err);
      // Exact time keeps segment boundaries exact: last step lands on t_end.
      const double t =
          (i + 1 == n_steps) ? seg.t_end : seg.t_start + (i + 1) * dt;
      if (step_index % cfg.record_stride == 0 || t == schedule.span()) {
        if (traj.times.back() != t) record(t, rho);
      }
    }
  }

  if (traj.max_trace_error > kTraceDriftBound) {
    std::ostringstream os;
    os << "trace drift " << traj.max_trace_error << " exceeds "
       << kTraceDriftBound;
    throw NumericError(os.str());
  }
  return traj;
}

}  // namespace zeno
