#pragma once

// Simultaneous eigenvector pairs (v1, v2) of one rotation and the matrix
// factors relating them.
//
// Both members share the eigenvalue e^{i theta/2}, so in two dimensions they
// are proportional: v1 = e^{u} v2 with real rapidity u. The scalar factor can
// be promoted to the matrix sigma^4 p4 - eps (n.sigma) p, which acts on the
// pair exactly like the scalar for any choice of the two free constants A, B.

#include <array>

#include "spinpair/rotation_eigensystem.hpp"

namespace spinpair {

/// Orientation sign: +1 maps v2 -> v1, -1 maps v1 -> v2.
enum class Orientation : int { left_to_right = +1, right_to_left = -1 };

inline double sign(Orientation eps) { return static_cast<int>(eps); }

struct EigenPair {
  UnitAxis axis;
  double theta = 0.0;
  double rapidity = 0.0;
  TwoSpinor v1;  // "right"
  TwoSpinor v2;  // "left"
  Branch branch = Branch::plus;
};

/// The two arbitrary constants of the general factor matrix.
struct FactorParams {
  double A = 0.0;
  double B = 0.0;
};

/// Coefficients (p4, p) of the factor sigma^4 p4 - eps (n.sigma) p.
struct FactorCoefficients {
  double p4 = 0.0;
  double p = 0.0;
};

/// Unit-mass energy-momentum. Spatial part is stored with upper indices;
/// lowering uses diag(-1, -1, -1, +1): p_k = -p^k, p_4 = p^4.
struct FourMomentum {
  std::array<double, 3> p_vec{};  // p^1, p^2, p^3
  double p4 = 1.0;

  /// Lowered component p_mu for mu in 1..4.
  double lower(int mu) const;
  /// Upper component p^mu for mu in 1..4.
  double upper(int mu) const;

  double spatial_norm2() const;

  /// |p4^2 - |p|^2 - 1| / max(1, p4^2).
  ///
  /// Normalized by p4^2 because the components themselves carry rounding of
  /// order ulp(p4); an absolute shell test cannot be met for large rapidity.
  double mass_shell_defect() const;
};

inline constexpr double kMassShellTolerance = 1e-9;

/// Throws DomainError if `p` is off the unit mass shell by more than `tol`.
void require_on_shell(const FourMomentum& p, double tol = kMassShellTolerance);

/// v2 = scale * u+(n), v1 = e^{u} v2. Throws DomainError for scale <= 0.
EigenPair make_pair(const UnitAxis& n, double theta, double u, double scale = 1.0);

/// p_ab4 = A + eps (B + sinh u), p_ab = B + eps (A - cosh u).
FactorCoefficients factor_coefficients(const FactorParams& params, double u, Orientation eps);

/// sigma^4 p4 - eps (n.sigma) p for explicit coefficients.
SpinMatrix factor_matrix(const FactorCoefficients& c, const UnitAxis& n, Orientation eps);

/// The general factor for arbitrary (A, B). On the plus-branch eigenvectors of
/// n.sigma it acts as the scalar p4 - eps p = cosh u + eps sinh u = e^{eps u}.
SpinMatrix general_factor_matrix(const FactorParams& params, double u, const UnitAxis& n,
                                 Orientation eps);

/// Relative residual ||F v_b - v_a|| / ||v_a|| of the general factor applied to
/// the source member of the pair (v2 for left_to_right, v1 for right_to_left).
double factor_residual(const SpinMatrix& factor, const EigenPair& pair, Orientation eps);

/// The (A, B) for which the coefficients no longer depend on orientation:
/// the eps-coefficients B + sinh u and A - cosh u both vanish, so
/// A = cosh u, B = -sinh u.
FactorParams orientation_independent_params(double u);

/// p^4 = cosh u, p^k = n^k sinh u.
FourMomentum reduce_to_unit_momentum(double u, const UnitAxis& n);

/// sigma^4 cosh u + eps (n.sigma) sinh u. Hermitian and positive definite;
/// equal to the general factor at A = cosh u, B = -sinh u.
SpinMatrix boost_matrix(double u, const UnitAxis& n, Orientation eps);

struct LeftRightResidual {
  double forward = 0.0;  // ||boost(+1) v2 - v1|| / ||v1||
  double reverse = 0.0;  // ||boost(-1) v1 - v2|| / ||v2||
  double max() const { return forward > reverse ? forward : reverse; }
};

/// Checks that the boost-form factor relates the pair members both ways.
LeftRightResidual verify_left_right_relation(const EigenPair& pair);

// Current/spin parametrization of the factor coefficients:
//   p_ab4 =  cosh u + K j4 + eps K a4
//   p_ab  = -sinh u + K j  - eps K a
// with j^mu = (j n^k, j4) and a^mu = (a n^k, a4).

struct CurrentSpinParams {
  double j = 0.0;
  double j4 = 0.0;
  double a = 0.0;
  double a4 = 0.0;
  double K = 1.0;
};

FactorCoefficients current_spin_coefficients(const CurrentSpinParams& params, double u,
                                             Orientation eps);

/// Result of eliminating the consistency conditions over both orientations.
struct CurrentSpinSolution {
  // j = j_per_a4 * a4 + j_per_a * a, and likewise for j4.
  double j_per_a4 = 0.0;
  double j_per_a = 0.0;
  double j4_per_a4 = 0.0;
  double j4_per_a = 0.0;

  /// Sign s in j4 = s * a found by elimination.
  int derived_sign = 0;
  /// Sign commonly quoted for this relation (j4 = +a).
  static constexpr int kQuotedSign = +1;
  bool sign_discrepancy = false;

  /// Sample parameters satisfying the derived relations.
  CurrentSpinParams sample;
  /// j4 a4 - j^k a^k for the derived sample.
  double orthogonality_derived = 0.0;
  /// Same quantity when j4 = +a is imposed instead.
  double orthogonality_quoted = 0.0;
  /// Max factor residual over both orientations for the derived sample.
  double factor_residual_derived = 0.0;
  /// Max factor residual with j4 = +a imposed.
  double factor_residual_quoted = 0.0;
};

/// Solves for (j, j4) in terms of (a, a4) by requiring that the factor act as
/// e^{eps u} on a plus-branch pair for both orientations. The sample used for
/// the residuals is (a, a4) = (sample_a, sample_a4) on axis `n`.
/// Throws DomainError when K == 0 (the conditions become vacuous).
CurrentSpinSolution solve_current_spin_constraints(double u, double K, double sample_a = 0.5,
                                                   double sample_a4 = 0.25,
                                                   const UnitAxis& n = UnitAxis::z());

}  // namespace spinpair
