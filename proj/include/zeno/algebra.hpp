#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>

#include "zeno/errors.hpp"

namespace zeno {

using Complex = std::complex<double>;

/// Dense 3x3 complex matrix over the atomic basis.
///
/// Basis convention (frozen, cited by every other module):
///   index 0 <-> level 1, index 1 <-> level 2, index 2 <-> level 3.
/// Level 1 and 2 are the RF-driven pair, level 3 is the optically driven
/// shelving/decay level.
using Matrix3 = Eigen::Matrix3cd;
using Vector3 = Eigen::Vector3cd;

/// |i><j| in the basis convention above (zero-based indices).
inline Matrix3 ketbra(int i, int j) {
  Matrix3 m = Matrix3::Zero();
  m(i, j) = 1.0;
  return m;
}

/// Projector onto basis state i.
inline Matrix3 projector(int i) { return ketbra(i, i); }

/// Largest elementwise deviation from self-adjointness, max_ij |m_ij - conj(m_ji)|.
template <class Derived>
double hermiticity_residual(const Eigen::MatrixBase<Derived>& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

/// Validity thresholds for density matrices. Defaults leave one order of
/// magnitude of headroom above the integrator drift seen on the longest runs.
struct Tolerances {
  double hermitian = 1e-12;   // elementwise |rho - rho^dag|
  double trace = 1e-9;        // |tr(rho) - 1|
  double positivity = 1e-9;   // -min(eigenvalue)
};

/// All three eigenvalues of a Hermitian matrix, ascending, via the
/// closed-form trigonometric solution of the characteristic cubic.
/// Throws NotHermitian if the residual exceeds herm_tol.
std::array<double, 3> eigenvalues_hermitian(const Matrix3& a,
                                            double herm_tol = 1e-10);

/// Smallest eigenvalue of a Hermitian matrix (closed form, see above).
double min_eigenvalue_hermitian(const Matrix3& a, double herm_tol = 1e-10);

/// Outcome of a density-matrix validity check. Never throws: callers decide
/// what a violation means for them.
struct DensityReport {
  bool hermitian = false;
  bool unit_trace = false;
  bool positive = false;
  double hermiticity_residual = 0.0;
  double trace_residual = 0.0;
  double min_eigenvalue = 0.0;
  bool ok() const { return hermitian && unit_trace && positive; }
};

DensityReport validate_density(const Matrix3& rho, const Tolerances& tol = {});

}  // namespace zeno
