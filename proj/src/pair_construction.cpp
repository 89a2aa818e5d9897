#include "spinpair/pair_construction.hpp"

#include <algorithm>
#include <string>

#include "spinpair/errors.hpp"

namespace spinpair {

double FourMomentum::lower(int mu) const {
  if (mu < 1 || mu > 4) throw DomainError("four-momentum index must be in 1..4");
  return mu == 4 ? p4 : -p_vec[static_cast<std::size_t>(mu - 1)];
}

double FourMomentum::upper(int mu) const {
  if (mu < 1 || mu > 4) throw DomainError("four-momentum index must be in 1..4");
  return mu == 4 ? p4 : p_vec[static_cast<std::size_t>(mu - 1)];
}

double FourMomentum::spatial_norm2() const {
  return p_vec[0] * p_vec[0] + p_vec[1] * p_vec[1] + p_vec[2] * p_vec[2];
}

double FourMomentum::mass_shell_defect() const {
  // Long double keeps the evaluation error well below the rounding already
  // present in the stored components.
  long double s = static_cast<long double>(p4) * p4;
  for (double c : p_vec) s -= static_cast<long double>(c) * c;
  const double defect = std::abs(static_cast<double>(s - 1.0L));
  return defect / std::max(1.0, p4 * p4);
}

void require_on_shell(const FourMomentum& p, double tol) {
  if (!std::isfinite(p.p4) || !std::isfinite(p.p_vec[0]) || !std::isfinite(p.p_vec[1]) ||
      !std::isfinite(p.p_vec[2]))
    throw DomainError("four-momentum has non-finite components");
  if (p.mass_shell_defect() > tol)
    throw DomainError("four-momentum is off the unit mass shell (defect " +
                      std::to_string(p.mass_shell_defect()) + ")");
}

EigenPair make_pair(const UnitAxis& n, double theta, double u, double scale) {
  if (!(scale > 0.0)) throw DomainError("pair scale must be positive");
  if (!std::isfinite(u) || !std::isfinite(theta)) throw DomainError("pair parameters must be finite");
  EigenPair pair;
  pair.axis = n;
  pair.theta = theta;
  pair.rapidity = u;
  pair.v2 = scale * eigenspinor_plus(n);
  pair.v1 = std::exp(u) * pair.v2;
  pair.branch = Branch::plus;
  return pair;
}

FactorCoefficients factor_coefficients(const FactorParams& params, double u, Orientation eps) {
  const double e = sign(eps);
  return {params.A + e * (params.B + std::sinh(u)), params.B + e * (params.A - std::cosh(u))};
}

SpinMatrix factor_matrix(const FactorCoefficients& c, const UnitAxis& n, Orientation eps) {
  return c.p4 * pauli(4) - (sign(eps) * c.p) * axis_dot_sigma(n);
}

SpinMatrix general_factor_matrix(const FactorParams& params, double u, const UnitAxis& n,
                                 Orientation eps) {
  return factor_matrix(factor_coefficients(params, u, eps), n, eps);
}

double factor_residual(const SpinMatrix& factor, const EigenPair& pair, Orientation eps) {
  const TwoSpinor& source = eps == Orientation::left_to_right ? pair.v2 : pair.v1;
  const TwoSpinor& target = eps == Orientation::left_to_right ? pair.v1 : pair.v2;
  return norm(factor * source - target) / norm(target);
}

FactorParams orientation_independent_params(double u) { return {std::cosh(u), -std::sinh(u)}; }

FourMomentum reduce_to_unit_momentum(double u, const UnitAxis& n) {
  if (!std::isfinite(u)) throw DomainError("rapidity must be finite");
  const double s = std::sinh(u);
  FourMomentum p;
  p.p4 = std::cosh(u);
  p.p_vec = {n.x() * s, n.y() * s, n.z_component() * s};
  return p;
}

SpinMatrix boost_matrix(double u, const UnitAxis& n, Orientation eps) {
  return std::cosh(u) * pauli(4) + (sign(eps) * std::sinh(u)) * axis_dot_sigma(n);
}

LeftRightResidual verify_left_right_relation(const EigenPair& pair) {
  LeftRightResidual r;
  r.forward = norm(boost_matrix(pair.rapidity, pair.axis, Orientation::left_to_right) * pair.v2 -
                   pair.v1) /
              norm(pair.v1);
  r.reverse = norm(boost_matrix(pair.rapidity, pair.axis, Orientation::right_to_left) * pair.v1 -
                   pair.v2) /
              norm(pair.v2);
  return r;
}

FactorCoefficients current_spin_coefficients(const CurrentSpinParams& q, double u,
                                             Orientation eps) {
  const double e = sign(eps);
  return {std::cosh(u) + q.K * q.j4 + e * q.K * q.a4, -std::sinh(u) + q.K * q.j - e * q.K * q.a};
}

namespace {

// Linear forms over the unknowns (j, j4, a, a4).
using Row = std::array<double, 4>;
enum : std::size_t { kJ = 0, kJ4 = 1, kA = 2, kA4 = 3 };

// Parameter-dependent parts of p_ab4 and p_ab in the current/spin form.
Row p4_form(double K, double e) { return {0.0, K, 0.0, e * K}; }
Row p_form(double K, double e) { return {K, 0.0, -e * K, 0.0}; }

// Acting on a plus-branch eigenvector the factor reduces to p_ab4 - eps p_ab.
// Its u-dependent part is already cosh u + eps sinh u = e^{eps u}, so the
// parameter-dependent part must vanish for each orientation.
Row consistency_row(double K, double e) {
  const Row p4 = p4_form(K, e);
  const Row p = p_form(K, e);
  Row r{};
  for (std::size_t i = 0; i < 4; ++i) r[i] = (p4[i] - e * p[i]) / K;
  return r;
}

// Solves the 2x2 system m x = rhs with partial pivoting.
std::array<double, 2> solve2(std::array<std::array<double, 2>, 2> m, std::array<double, 2> rhs) {
  if (std::abs(m[1][0]) > std::abs(m[0][0])) {
    std::swap(m[0], m[1]);
    std::swap(rhs[0], rhs[1]);
  }
  if (m[0][0] == 0.0) throw DegenerateSystem("current/spin elimination is singular");
  const double f = m[1][0] / m[0][0];
  const double m11 = m[1][1] - f * m[0][1];
  const double r1 = rhs[1] - f * rhs[0];
  if (m11 == 0.0) throw DegenerateSystem("current/spin elimination is singular");
  const double x1 = r1 / m11;
  const double x0 = (rhs[0] - m[0][1] * x1) / m[0][0];
  return {x0, x1};
}

double orthogonality(const CurrentSpinParams& q, const UnitAxis& n) {
  double nn = 0.0;
  for (double c : n.components()) nn += c * c;
  return q.j4 * q.a4 - q.j * q.a * nn;
}

double max_factor_residual(const CurrentSpinParams& q, double u, const EigenPair& pair) {
  double worst = 0.0;
  for (Orientation eps : {Orientation::left_to_right, Orientation::right_to_left}) {
    const SpinMatrix f = factor_matrix(current_spin_coefficients(q, u, eps), pair.axis, eps);
    worst = std::max(worst, factor_residual(f, pair, eps));
  }
  return worst;
}

}  // namespace

CurrentSpinSolution solve_current_spin_constraints(double u, double K, double sample_a,
                                                   double sample_a4, const UnitAxis& n) {
  if (K == 0.0) throw DomainError("scale K = 0 makes the current/spin constraints vacuous");
  if (!std::isfinite(K) || !std::isfinite(u)) throw DomainError("inputs must be finite");

  const Row plus = consistency_row(K, +1.0);
  const Row minus = consistency_row(K, -1.0);
  const std::array<std::array<double, 2>, 2> m{{{plus[kJ], plus[kJ4]}, {minus[kJ], minus[kJ4]}}};

  // Column for each free unknown moved to the right-hand side.
  const auto from_a = solve2(m, {-plus[kA], -minus[kA]});
  const auto from_a4 = solve2(m, {-plus[kA4], -minus[kA4]});

  CurrentSpinSolution s;
  s.j_per_a = from_a[0];
  s.j4_per_a = from_a[1];
  s.j_per_a4 = from_a4[0];
  s.j4_per_a4 = from_a4[1];
  s.derived_sign = s.j4_per_a > 0.0 ? +1 : (s.j4_per_a < 0.0 ? -1 : 0);
  s.sign_discrepancy = s.derived_sign != CurrentSpinSolution::kQuotedSign;

  s.sample.K = K;
  s.sample.a = sample_a;
  s.sample.a4 = sample_a4;
  s.sample.j = s.j_per_a * sample_a + s.j_per_a4 * sample_a4;
  s.sample.j4 = s.j4_per_a * sample_a + s.j4_per_a4 * sample_a4;

  CurrentSpinParams quoted = s.sample;
  quoted.j4 = CurrentSpinSolution::kQuotedSign * sample_a;

  const EigenPair pair = make_pair(n, 0.7, u, 1.0);
  s.orthogonality_derived = orthogonality(s.sample, n);
  s.orthogonality_quoted = orthogonality(quoted, n);
  s.factor_residual_derived = max_factor_residual(s.sample, u, pair);
  s.factor_residual_quoted = max_factor_residual(quoted, u, pair);
  return s;
}

}  // namespace spinpair
