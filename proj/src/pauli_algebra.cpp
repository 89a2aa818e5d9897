#include "spinpair/pauli_algebra.hpp"

#include <numbers>
#include <string>

#include "spinpair/errors.hpp"

namespace spinpair {

namespace {

constexpr double kMinAxisNorm = 1e-8;

bool finite3(double x, double y, double z) {
  return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
}

}  // namespace

UnitAxis UnitAxis::normalized(double x, double y, double z) {
  if (!finite3(x, y, z)) throw DomainError("axis has non-finite components");
  const double r = std::sqrt(x * x + y * y + z * z);
  if (r < kMinAxisNorm) throw DomainError("axis norm below 1e-8 cannot be normalized");
  return UnitAxis{x / r, y / r, z / r};
}

UnitAxis UnitAxis::exact(double x, double y, double z, double tol) {
  if (!finite3(x, y, z)) throw DomainError("axis has non-finite components");
  const double r2 = x * x + y * y + z * z;
  if (std::abs(r2 - 1.0) > tol) throw DomainError("axis is not unit length");
  return UnitAxis{x, y, z};
}

UnitAxis UnitAxis::from_polar(double rho, double phi) {
  return UnitAxis{std::sin(rho) * std::cos(phi), std::sin(rho) * std::sin(phi), std::cos(rho)};
}

double UnitAxis::operator()(int k) const {
  if (k < 1 || k > 3) throw DomainError("axis component index must be in 1..3");
  return n_[static_cast<std::size_t>(k - 1)];
}

double UnitAxis::polar() const { return std::atan2(std::hypot(n_[0], n_[1]), n_[2]); }

double UnitAxis::azimuth() const {
  if (n_[0] == 0.0 && n_[1] == 0.0) return 0.0;
  const double phi = std::atan2(n_[1], n_[0]);
  // atan2 returns -pi for (negative x, -0.0 y); fold onto the half-open range.
  return phi == -std::numbers::pi ? std::numbers::pi : phi;
}

SpinMatrix pauli(int k) {
  SpinMatrix s;
  switch (k) {
    case 1:
      s(0, 1) = 1.0;
      s(1, 0) = 1.0;
      break;
    case 2:
      s(0, 1) = -kI;
      s(1, 0) = kI;
      break;
    case 3:
      s(0, 0) = 1.0;
      s(1, 1) = -1.0;
      break;
    case 4:
      s(0, 0) = 1.0;
      s(1, 1) = 1.0;
      break;
    default:
      throw DomainError("pauli index must be in 1..4, got " + std::to_string(k));
  }
  return s;
}

SpinMatrix axis_dot_sigma(const UnitAxis& n) {
  // Built entrywise rather than by summing scaled matrices so that the
  // zero entries stay exactly zero.
  SpinMatrix s;
  s(0, 0) = n.z_component();
  s(1, 1) = -n.z_component();
  s(0, 1) = Complex{n.x(), -n.y()};
  s(1, 0) = Complex{n.x(), n.y()};
  return s;
}

SpinMatrix rotation_matrix(const UnitAxis& n, double theta) {
  if (!std::isfinite(theta)) throw DomainError("rotation angle must be finite");
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  return c * pauli(4) + (kI * s) * axis_dot_sigma(n);
}

SpinMatrix matrix_exp_series(const SpinMatrix& m, int terms) {
  if (terms < 1) throw DomainError("series needs at least one term");
  SpinMatrix sum = SpinMatrix::identity();
  SpinMatrix term = SpinMatrix::identity();
  for (int k = 1; k < terms; ++k) {
    term = term * m;
    term *= 1.0 / k;
    sum += term;
  }
  return sum;
}

DiracMatrix block(const SpinMatrix& tl, const SpinMatrix& tr, const SpinMatrix& bl,
                  const SpinMatrix& br) {
  DiracMatrix g;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      g(i, j) = tl(i, j);
      g(i, j + 2) = tr(i, j);
      g(i + 2, j) = bl(i, j);
      g(i + 2, j + 2) = br(i, j);
    }
  return g;
}

DiracMatrix gamma(int mu) {
  if (mu < 1 || mu > 4) throw DomainError("gamma index must be in 1..4, got " + std::to_string(mu));
  const SpinMatrix zero{};
  const SpinMatrix s = pauli(mu);
  if (mu == 4) return block(zero, s, s, zero);
  return block(zero, -s, s, zero);
}

double metric(int mu, int nu) {
  if (mu < 1 || mu > 4 || nu < 1 || nu > 4) throw DomainError("metric index must be in 1..4");
  if (mu != nu) return 0.0;
  return mu == 4 ? 1.0 : -1.0;
}

bool is_hermitian(const SpinMatrix& m, double tol) { return max_abs_diff(m, adjoint(m)) <= tol; }

}  // namespace spinpair
