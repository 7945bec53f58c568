#include "zeno/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace zeno {

std::array<double, 3> eigenvalues_hermitian(const Matrix3& a, double herm_tol) {
  const double herm = hermiticity_residual(a);
  if (!(herm <= herm_tol)) {
    std::ostringstream os;
    os << "matrix is not Hermitian: residual " << herm << " exceeds "
       << herm_tol;
    throw NotHermitian(os.str());
  }

  // Trigonometric solution of det(A - x I) = 0 for a Hermitian 3x3 matrix.
  // Work with B = (A - q I) / p, whose eigenvalues lie in [-2, 2], so the
  // roots are 2 cos(phi + 2 pi k / 3).
  const double q = a.trace().real() / 3.0;
  const double off2 = std::norm(a(0, 1)) + std::norm(a(0, 2)) + std::norm(a(1, 2));
  const double d0 = a(0, 0).real() - q;
  const double d1 = a(1, 1).real() - q;
  const double d2 = a(2, 2).real() - q;
  const double p2 = d0 * d0 + d1 * d1 + d2 * d2 + 2.0 * off2;
  if (p2 <= 0.0) {
    // Scalar matrix: triple eigenvalue q.
    return {q, q, q};
  }
  const double p = std::sqrt(p2 / 6.0);
  const Matrix3 b = (a - q * Matrix3::Identity()) / p;
  double r = b.determinant().real() / 2.0;
  r = std::clamp(r, -1.0, 1.0);
  const double phi = std::acos(r) / 3.0;

  const double two_thirds_pi = 2.0 * std::numbers::pi / 3.0;
  const double hi = q + 2.0 * p * std::cos(phi);
  const double lo = q + 2.0 * p * std::cos(phi + two_thirds_pi);
  const double mid = 3.0 * q - hi - lo;
  return {lo, mid, hi};
}

double min_eigenvalue_hermitian(const Matrix3& a, double herm_tol) {
  return eigenvalues_hermitian(a, herm_tol)[0];
}

DensityReport validate_density(const Matrix3& rho, const Tolerances& tol) {
  DensityReport rep;
  rep.hermiticity_residual = hermiticity_residual(rho);
  rep.trace_residual = std::abs(rho.trace() - Complex(1.0, 0.0));
  rep.hermitian = rep.hermiticity_residual <= tol.hermitian;
  rep.unit_trace = rep.trace_residual <= tol.trace;
  // Positivity is judged on the Hermitian part so the report stays usable
  // even when the Hermiticity check itself failed.
  const Matrix3 sym = 0.5 * (rho + rho.adjoint().eval());
  rep.min_eigenvalue = eigenvalues_hermitian(sym, 1e-6)[0];
  rep.positive = rep.min_eigenvalue >= -tol.positivity;
  return rep;
}

}  // namespace zeno
