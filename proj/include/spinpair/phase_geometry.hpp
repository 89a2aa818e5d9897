#pragma once

// Rotation angle theta as a function of space-time position.
//
// The gradient is defined through the phase derivative, so that
//   d theta / d q^mu = 2 p_mu + 2 i F_mu(q),   theta = 2 int (p_mu + i F_mu) dq^mu,
// with F_mu = -i e A_mu for a gauge potential A_mu. For F = 0 theta is a plane
// wave; for a potential with nonzero curl the line integral depends on the path.

#include <functional>
#include <variant>
#include <vector>

#include "spinpair/dirac_momentum.hpp"

namespace spinpair {

/// Four components addressed with the 1-based index mu (4 = time-like).
template <class T>
struct FourArray {
  std::array<T, 4> c{};

  T& operator()(int mu) { return c.at(static_cast<std::size_t>(mu - 1)); }
  const T& operator()(int mu) const { return c.at(static_cast<std::size_t>(mu - 1)); }

  friend bool operator==(const FourArray&, const FourArray&) = default;
};

using Event4 = FourArray<double>;
using Covector = FourArray<Complex>;

inline Event4 event(double q1, double q2, double q3, double q4) { return {{q1, q2, q3, q4}}; }

/// Ordered polyline of events.
class Path4 {
 public:
  /// At least two vertices, consecutive vertices distinct.
  static Path4 open(std::vector<Event4> vertices);
  /// As open(), and the last vertex must equal the first.
  static Path4 closed(std::vector<Event4> vertices);

  const std::vector<Event4>& vertices() const { return vertices_; }
  bool is_closed() const { return closed_; }
  std::size_t edge_count() const { return vertices_.size() - 1; }

 private:
  Path4(std::vector<Event4> v, bool closed) : vertices_(std::move(v)), closed_(closed) {}
  std::vector<Event4> vertices_;
  bool closed_ = false;
};

Path4 straight_path(const Event4& from, const Event4& to);

/// Regular polygon in the (q1, q2) plane traversed |windings| times,
/// counterclockwise for windings > 0. q3 and q4 are held fixed.
Path4 circle_loop(double center1, double center2, double radius, int edges_per_turn, int windings,
                  double q3 = 0.0, double q4 = 0.0);

/// Net number of turns of a closed path about the q3 axis (q1 = q2 = 0).
int winding_number(const Path4& loop);

/// g(q) = b.q + (1/2) q^T C q + amplitude * sin(k.q). C is symmetrized on use.
struct ScalarGauge {
  std::array<double, 4> linear{};
  std::array<std::array<double, 4>, 4> quadratic{};
  double amplitude = 0.0;
  std::array<double, 4> wavevector{};

  double value(const Event4& q) const;
  FourArray<double> gradient(const Event4& q) const;
};

/// Supplies F_mu(q) directly, bypassing A_mu. Only meant for tests.
using RawCoupling = std::function<Covector(const Event4&)>;

inline constexpr double kSolenoidCoreRadius = 1e-6;

class GaugeField {
 public:
  enum class Kind { zero, constant, solenoid, pure_gauge, raw };

  GaugeField() = default;

  static GaugeField zero();
  /// Constant lowered potential A_mu.
  static GaugeField constant(const FourArray<double>& a, double charge = 1.0);
  /// Thin solenoid along the q3 axis: A = Phi/(2 pi r^2) (-q2, q1, 0, 0) with
  /// circulation Phi per counterclockwise turn. Undefined for r < r_min.
  static GaugeField solenoid(double flux, double charge = 1.0,
                             double r_min = kSolenoidCoreRadius);
  /// A_mu = d_mu g.
  static GaugeField pure_gauge(ScalarGauge g, double charge = 1.0);
  static GaugeField raw_coupling(RawCoupling f);

  Kind kind() const;
  double charge() const { return charge_; }
  /// Solenoid flux; 0 for other kinds.
  double flux() const;
  double core_radius() const;

  bool in_domain(const Event4& q) const;
  /// Theta is path independent (F is a gradient everywhere in the domain).
  bool path_independent() const;

  /// A_mu(q). Throws DomainError outside the domain or for raw couplings.
  FourArray<double> potential(const Event4& q) const;
  /// F_mu(q) = -i e A_mu(q), or the raw value.
  Covector coupling(const Event4& q) const;

 private:
  struct Constant {
    FourArray<double> a;
  };
  struct Solenoid {
    double flux;
    double r_min;
  };
  struct Zero {};

  using Variant = std::variant<Zero, Constant, Solenoid, ScalarGauge, RawCoupling>;
  GaugeField(Variant v, double charge) : v_(std::move(v)), charge_(charge) {}

  Variant v_{Zero{}};
  double charge_ = 1.0;
};

enum class DerivativeMode { finite_difference, analytic };

struct PhaseDerivativeOptions {
  DerivativeMode mode = DerivativeMode::finite_difference;
  double h = 1e-5;
};

/// Max over theta samples in [0, 2 pi) and both pair members of
/// ||-2i d/dtheta v' - v'|| / ||v'||, with v' = e^{i theta/2} v.
double phase_derivative_check(const EigenPair& pair, int theta_samples,
                              PhaseDerivativeOptions options = {});

/// 2 p_mu (q_to - q_from)^mu with lowered p.
double plane_wave_phase(const FourMomentum& p, const Event4& from, const Event4& to);

/// Composite-midpoint line integral of 2 (p_mu + i F_mu) dq^mu along `path`,
/// with `segments_per_edge` equal subsegments on each edge.
Complex path_phase(const FourMomentum& p, const GaugeField& field, const Path4& path,
                   int segments_per_edge);

/// d theta / d q^mu = 2 p_mu + 2 i F_mu(q).
Covector gradient_theta(const FourMomentum& p, const GaugeField& field, const Event4& q);

/// psi(q) = e^{i theta(q)/2} psi0, theta integrated along the straight line
/// from `anchor` (where theta = 0). Field must be zero or constant.
Bispinor wave_function(const Bispinor& psi0, const FourMomentum& p, const GaugeField& field,
                       const Event4& q, const Event4& anchor = {});

struct CoordinateResidual {
  double residual = 0.0;
  double h = 0.0;
  /// residual / h^2
  double coefficient = 0.0;
};

inline constexpr double kDefaultFiniteDifferenceStep = 1e-4;

/// Relative residual of -i gamma^mu (d_mu - i e A_mu) psi = psi at q, with
/// central differences of step h. Throws DomainError for field kinds other
/// than zero or constant, or h <= 0.
CoordinateResidual dirac_residual_coordinate(const Bispinor& psi0, const FourMomentum& p,
                                             const GaugeField& field, const Event4& q,
                                             double h = kDefaultFiniteDifferenceStep,
                                             const Event4& anchor = {});

CoordinateResidual dirac_residual_coordinate(const EigenPair& pair, const GaugeField& field,
                                             const Event4& q,
                                             double h = kDefaultFiniteDifferenceStep);

/// Constant real 4x4 matrix M_{mu nu}, 1-based.
struct CouplingMatrix {
  std::array<std::array<double, 4>, 4> m{};

  double& operator()(int mu, int nu) {
    return m.at(static_cast<std::size_t>(mu - 1)).at(static_cast<std::size_t>(nu - 1));
  }
  double operator()(int mu, int nu) const {
    return m.at(static_cast<std::size_t>(mu - 1)).at(static_cast<std::size_t>(nu - 1));
  }
};

inline constexpr double kMaxCouplingCondition = 1e8;

struct CoupledGradient {
  Covector gradient;
  /// 2-norm condition number of (I + M).
  double condition = 1.0;
  /// max_mu |((I + M) grad - rhs)_mu| / max(1, max_mu |rhs_mu|)
  double residual = 0.0;
};

/// With F_mu -> F_mu + M_{mu nu} d_nu, the gradient solves
/// (delta_{mu nu} + M_{mu nu}) d_nu theta = 2 p_mu + 2 i F_mu(q).
/// Throws DegenerateSystem when cond(I + M) > 1e8.
CoupledGradient gradient_with_linear_coupling(const FourMomentum& p, const GaugeField& field,
                                              const CouplingMatrix& M, const Event4& q);

/// theta by midpoint integration of the coupled gradient along `path`.
Complex coupled_path_phase(const FourMomentum& p, const GaugeField& field, const CouplingMatrix& M,
                           const Path4& path, int segments_per_edge);

}  // namespace spinpair
