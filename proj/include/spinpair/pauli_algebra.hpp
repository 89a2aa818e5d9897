#pragma once

// Spin-1/2 matrix algebra: the Pauli set (with the identity as sigma^4),
// chiral gamma matrices, and closed-form rotation exponentials.
//
// Indices follow the physics convention 1..4 with 4 the time-like slot.

#include "spinpair/linalg.hpp"

namespace spinpair {

using SpinMatrix = CMatrix<2>;
using DiracMatrix = CMatrix<4>;

/// Direction in the abstract rotation 3-space. Always unit length.
class UnitAxis {
 public:
  /// Defaults to the +z axis.
  UnitAxis() : n_{0.0, 0.0, 1.0} {}

  /// Normalizes (x, y, z). Throws DomainError when the norm is below 1e-8
  /// or any component is not finite.
  static UnitAxis normalized(double x, double y, double z);

  /// Accepts (x, y, z) only if it is already unit within `tol`.
  static UnitAxis exact(double x, double y, double z, double tol = 1e-12);

  /// n = (sin rho cos phi, sin rho sin phi, cos rho).
  static UnitAxis from_polar(double rho, double phi);

  static UnitAxis z() { return UnitAxis{0.0, 0.0, 1.0}; }

  double x() const { return n_[0]; }
  double y() const { return n_[1]; }
  double z_component() const { return n_[2]; }

  /// Component n^k, k in 1..3.
  double operator()(int k) const;
  const std::array<double, 3>& components() const { return n_; }

  /// Polar angle rho in [0, pi].
  double polar() const;
  /// Azimuth phi in (-pi, pi]; 0 on the poles.
  double azimuth() const;

 private:
  UnitAxis(double x, double y, double z) : n_{x, y, z} {}
  std::array<double, 3> n_;
};

/// sigma^k for k in 1..4; sigma^4 is the 2x2 identity.
SpinMatrix pauli(int k);

/// n^k sigma^k summed over k = 1..3.
SpinMatrix axis_dot_sigma(const UnitAxis& n);

/// exp(i n.sigma theta/2) = sigma^4 cos(theta/2) + i n.sigma sin(theta/2).
SpinMatrix rotation_matrix(const UnitAxis& n, double theta);

/// Partial sum of the exponential series, terms k = 0 .. terms-1.
/// Slow and only meant as an independent check of rotation_matrix.
SpinMatrix matrix_exp_series(const SpinMatrix& m, int terms);

/// gamma^k = [[0, -sigma^k], [sigma^k, 0]], gamma^4 = [[0, 1], [1, 0]].
DiracMatrix gamma(int mu);

/// diag(-1, -1, -1, +1)^{mu nu}.
double metric(int mu, int nu);

/// Places 2x2 blocks into a 4x4 matrix [[tl, tr], [bl, br]].
DiracMatrix block(const SpinMatrix& tl, const SpinMatrix& tr, const SpinMatrix& bl,
                  const SpinMatrix& br);

bool is_hermitian(const SpinMatrix& m, double tol = kDefaultTolerance);

}  // namespace spinpair
