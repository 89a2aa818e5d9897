#pragma once

// Closed-form eigenspinors of a rotation about an arbitrary axis.

#include "spinpair/pauli_algebra.hpp"

namespace spinpair {

using TwoSpinor = CVector<2>;

/// Which eigenvalue of R(n, theta) a spinor carries: e^{+i theta/2} or e^{-i theta/2}.
enum class Branch { plus, minus };

/// u+ = (cos(rho/2) e^{-i phi/2}, sin(rho/2) e^{+i phi/2}); (n.sigma) u+ = u+.
TwoSpinor eigenspinor_plus(const UnitAxis& n);

/// u- = (-sin(rho/2) e^{-i phi/2}, cos(rho/2) e^{+i phi/2}); (n.sigma) u- = -u-.
TwoSpinor eigenspinor_minus(const UnitAxis& n);

/// ||R v - e^{+-i theta/2} v|| / ||v||, sign chosen by `branch`.
/// Throws DomainError for the zero vector.
double verify_rotation_eigen(const UnitAxis& n, double theta, const TwoSpinor& v,
                             Branch branch = Branch::plus);

/// Coefficients (alpha, beta) with v = alpha u+ + beta u-.
struct EigenDecomposition {
  Complex plus;
  Complex minus;
};

EigenDecomposition decompose(const UnitAxis& n, const TwoSpinor& v);

}  // namespace spinpair
