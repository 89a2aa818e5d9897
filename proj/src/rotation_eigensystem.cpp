#include "spinpair/rotation_eigensystem.hpp"

#include "spinpair/errors.hpp"

namespace spinpair {

namespace {

Complex phase(double angle) { return std::polar(1.0, angle); }

}  // namespace

TwoSpinor eigenspinor_plus(const UnitAxis& n) {
  const double rho = n.polar();
  const double phi = n.azimuth();
  TwoSpinor u;
  u[0] = std::cos(rho / 2.0) * phase(-phi / 2.0);
  u[1] = std::sin(rho / 2.0) * phase(phi / 2.0);
  return u;
}

TwoSpinor eigenspinor_minus(const UnitAxis& n) {
  const double rho = n.polar();
  const double phi = n.azimuth();
  TwoSpinor u;
  u[0] = -std::sin(rho / 2.0) * phase(-phi / 2.0);
  u[1] = std::cos(rho / 2.0) * phase(phi / 2.0);
  return u;
}

double verify_rotation_eigen(const UnitAxis& n, double theta, const TwoSpinor& v, Branch branch) {
  const double len = norm(v);
  if (len == 0.0) throw DomainError("eigen check needs a nonzero spinor");
  const double sign = branch == Branch::plus ? 1.0 : -1.0;
  const TwoSpinor diff = rotation_matrix(n, theta) * v - phase(sign * theta / 2.0) * v;
  return norm(diff) / len;
}

EigenDecomposition decompose(const UnitAxis& n, const TwoSpinor& v) {
  // u+ and u- are orthonormal, so projection gives the coefficients.
  return {inner(eigenspinor_plus(n), v), inner(eigenspinor_minus(n), v)};
}

}  // namespace spinpair
