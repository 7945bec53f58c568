#include "zeno/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace zeno {
namespace {

constexpr Complex kI(0.0, 1.0);

double auto_dt(double omega_rf, double omega_opt, double gamma) {
  const double rate = std::max({omega_rf, omega_opt, gamma});
  return 0.01 / rate;
}

// Equal superposition of levels 1 and 2: rho11 = rho22 = rho12 = rho21 = 1/2.
Matrix3 superposition_12() {
  Matrix3 rho = Matrix3::Zero();
  rho(0, 0) = rho(1, 1) = rho(0, 1) = rho(1, 0) = 0.5;
  return rho;
}

}  // namespace

double ZenoConfig::rf_window() const { return std::numbers::pi / omega_rf; }

double ZenoConfig::pulse_spacing() const {
  return rf_window() / static_cast<double>(n_pulses);
}

double ZenoConfig::span() const {
  return rf_window() + n_pulses * pulse_duration;
}

void ZenoConfig::validate() const {
  auto fail = [](const std::string& msg) { throw ValidationError(msg); };
  if (!(omega_rf > 0.0) || !std::isfinite(omega_rf)) {
    fail("omega_rf must be positive and finite");
  }
  if (omega_opt < 0.0 || !std::isfinite(omega_opt)) {
    fail("omega_opt must be nonnegative and finite");
  }
  if (gamma < 0.0 || !std::isfinite(gamma)) {
    fail("gamma must be nonnegative and finite");
  }
  if (n_pulses < 1) fail("n_pulses must be >= 1");
  if (!(pulse_duration > 0.0) || !std::isfinite(pulse_duration)) {
    fail("pulse_duration must be positive and finite");
  }
  if (pulse_duration >= pulse_spacing()) {
    std::ostringstream os;
    os << "pulse_duration " << pulse_duration
       << " must be shorter than the pulse spacing " << pulse_spacing();
    fail(os.str());
  }
  if (!(integrator.dt > 0.0)) fail("integrator.dt must be positive");
  if (integrator.record_stride < 1) fail("integrator.record_stride must be >= 1");
  const double rate = std::max({omega_rf, omega_opt, gamma});
  if (integrator.dt * rate > kDtRateBound) {
    std::ostringstream os;
    os << "integrator.dt " << integrator.dt
       << " violates dt*max_rate <= " << kDtRateBound << " (max rate " << rate
       << ")";
    fail(os.str());
  }
}

ZenoConfig finalized(ZenoConfig cfg) {
  if (cfg.integrator.dt <= 0.0 && cfg.omega_rf > 0.0) {
    cfg.integrator.dt = auto_dt(cfg.omega_rf, cfg.omega_opt, cfg.gamma);
  }
  if (cfg.integrator.record_stride < 1 && cfg.integrator.dt > 0.0 &&
      cfg.n_pulses >= 1) {
    const double steps = cfg.span() / cfg.integrator.dt;
    cfg.integrator.record_stride =
        std::max(1L, static_cast<long>(steps / 2000.0));
  }
  return cfg;
}

double projection_formula(int n) {
  if (n < 1) throw ValidationError("projection_formula requires n >= 1");
  const double theta = std::numbers::pi / static_cast<double>(n);
  return 0.5 * (1.0 - std::pow(std::cos(theta), n));
}

double projective_chain(int n) {
  if (n < 1) throw ValidationError("projective_chain requires n >= 1");
  const double half = std::numbers::pi / (2.0 * static_cast<double>(n));
  // Exact free-evolution propagator on the 1-2 block for one interval.
  Matrix3 u = Matrix3::Identity();
  u(0, 0) = u(1, 1) = std::cos(half);
  u(0, 1) = u(1, 0) = -kI * std::sin(half);

  Matrix3 rho = projector(0);
  for (int k = 0; k < n; ++k) {
    rho = u * rho * u.adjoint();
    // Ideal instantaneous measurement: kill the 1-2 coherence.
    rho(0, 1) = 0.0;
    rho(1, 0) = 0.0;
  }
  return rho(1, 1).real();
}

PulseSchedule build_schedule(const ZenoConfig& cfg) {
  cfg.validate();
  const double tau = cfg.pulse_spacing();
  const DriveLevels free_drives{cfg.omega_rf, 0.0};
  const DriveLevels pulse_drives{cfg.rf_during_pulse ? cfg.omega_rf : 0.0,
                                 cfg.omega_opt};
  std::vector<PulseSegment> segments;
  segments.reserve(2 * cfg.n_pulses);
  double t = 0.0;
  for (int k = 1; k <= cfg.n_pulses; ++k) {
    segments.push_back({t, t + tau, free_drives});
    t += tau;
    segments.push_back({t, t + cfg.pulse_duration, pulse_drives});
    t += cfg.pulse_duration;
  }
  return PulseSchedule::from_segments(std::move(segments));
}

ZenoResult run_zeno(const ZenoConfig& cfg_in) {
  const ZenoConfig cfg = finalized(cfg_in);
  const PulseSchedule schedule = build_schedule(cfg);
  ZenoResult result;
  result.trajectory =
      evolve(projector(0), schedule, DecayChannel{cfg.gamma}, cfg.integrator);
  const Matrix3& rho = result.trajectory.final_state();
  result.p1 = rho(0, 0).real();
  result.p2 = rho(1, 1).real();
  result.p3 = rho(2, 2).real();
  result.formula_p2 = projection_formula(cfg.n_pulses);
  result.deviation = std::abs(result.p2 - result.formula_p2);
  return result;
}

double pulse_kill_ratio(double omega_opt, double gamma, double tau_p) {
  if (omega_opt < 0.0 || gamma < 0.0 || tau_p < 0.0) {
    throw ValidationError("pulse_kill_ratio requires nonnegative arguments");
  }
  if (tau_p == 0.0) return 1.0;
  PulseSchedule schedule = PulseSchedule::from_segments(
      {{0.0, tau_p, DriveLevels{0.0, omega_opt}}});
  IntegratorConfig integ;
  const double rate = std::max({omega_opt, gamma, 1.0 / tau_p});
  integ.dt = 0.01 / rate;
  integ.record_stride = std::numeric_limits<long>::max();  // endpoints only
  const Trajectory traj =
      evolve(superposition_12(), schedule, DecayChannel{gamma}, integ);
  return std::abs(traj.final_state()(0, 1)) / 0.5;
}

double decoherence_time(double omega_opt, double gamma) {
  if (!(gamma > 0.0)) throw ValidationError("decoherence_time requires gamma > 0");
  if (omega_opt < 0.0) throw ValidationError("omega_opt must be nonnegative");
  const double horizon = 50.0 / gamma;
  PulseSchedule schedule = PulseSchedule::from_segments(
      {{0.0, horizon, DriveLevels{0.0, omega_opt}}});
  IntegratorConfig integ;
  integ.dt = 0.01 / std::max(omega_opt, gamma);
  integ.record_stride = 1;
  const Trajectory traj =
      evolve(superposition_12(), schedule, DecayChannel{gamma}, integ);

  const double threshold = std::exp(-1.0) * 0.5;
  for (std::size_t i = 1; i < traj.times.size(); ++i) {
    const double prev = std::abs(traj.states[i - 1](0, 1));
    const double cur = std::abs(traj.states[i](0, 1));
    if (cur <= threshold && prev > threshold) {
      const double f = (prev - threshold) / (prev - cur);
      return traj.times[i - 1] + f * (traj.times[i] - traj.times[i - 1]);
    }
  }
  std::ostringstream os;
  os << "|rho12| never fell to 1/e of its initial value within " << horizon;
  throw NotReached(os.str());
}

ZenoConfig spacing_config(const ZenoConfig& base, double gamma) {
  if (gamma < 0.0 || !std::isfinite(gamma)) {
    throw ValidationError("sweep gamma must be nonnegative and finite");
  }
  ZenoConfig cfg = base;
  cfg.gamma = gamma;
  const double tau = cfg.pulse_spacing();
  if (gamma == 0.0) {
    // No decay channel means no measurement: gate the optical drive off so
    // the run is the undisturbed pi pulse this limit stands for.
    cfg.omega_opt = 0.0;
    cfg.pulse_duration = tau / 4.0;
  } else {
    cfg.pulse_duration = std::min(tau / 4.0, 10.0 / gamma);
  }
  cfg.integrator = IntegratorConfig{0.0, 0};  // re-resolve for the new rates
  return finalized(cfg);
}

std::vector<SpacingPoint> spacing_deviation_curve(
    const ZenoConfig& base, std::vector<double> gamma_list) {
  std::sort(gamma_list.begin(), gamma_list.end(), std::greater<double>());
  std::vector<SpacingPoint> points;
  points.reserve(gamma_list.size());
  for (double gamma : gamma_list) {
    const ZenoConfig cfg = spacing_config(base, gamma);
    const ZenoResult res = run_zeno(cfg);
    points.push_back({gamma, gamma * cfg.pulse_spacing(), res.deviation});
  }
  return points;
}

}  // namespace zeno
