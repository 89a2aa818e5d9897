#include "spinpair/phase_geometry.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <numbers>
#include <string>

#include "spinpair/errors.hpp"

namespace spinpair {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool finite(const Event4& q) {
  return std::all_of(q.c.begin(), q.c.end(), [](double x) { return std::isfinite(x); });
}

Event4 lerp(const Event4& a, const Event4& b, double t) {
  Event4 r;
  for (std::size_t i = 0; i < 4; ++i) r.c[i] = a.c[i] + t * (b.c[i] - a.c[i]);
  return r;
}

// Distance from the q3 axis to the segment [a, b], measured in the (q1, q2) plane.
double segment_axis_distance(const Event4& a, const Event4& b) {
  const double dx = b(1) - a(1);
  const double dy = b(2) - a(2);
  const double len2 = dx * dx + dy * dy;
  double t = 0.0;
  if (len2 > 0.0) t = std::clamp(-(a(1) * dx + a(2) * dy) / len2, 0.0, 1.0);
  return std::hypot(a(1) + t * dx, a(2) + t * dy);
}

void validate_vertices(const std::vector<Event4>& v) {
  if (v.size() < 2) throw DomainError("a path needs at least two vertices");
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!finite(v[i])) throw DomainError("path vertex " + std::to_string(i) + " is not finite");
    if (i > 0 && v[i] == v[i - 1])
      throw DomainError("path vertices " + std::to_string(i - 1) + " and " + std::to_string(i) +
                        " coincide");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Paths

Path4 Path4::open(std::vector<Event4> vertices) {
  validate_vertices(vertices);
  return Path4(std::move(vertices), false);
}

Path4 Path4::closed(std::vector<Event4> vertices) {
  validate_vertices(vertices);
  if (!(vertices.front() == vertices.back()))
    throw DomainError("a closed path must end where it starts");
  return Path4(std::move(vertices), true);
}

Path4 straight_path(const Event4& from, const Event4& to) { return Path4::open({from, to}); }

Path4 circle_loop(double center1, double center2, double radius, int edges_per_turn, int windings,
                  double q3, double q4) {
  if (!(radius > 0.0)) throw DomainError("loop radius must be positive");
  if (edges_per_turn < 3) throw DomainError("a loop needs at least three edges per turn");
  if (windings == 0) throw DomainError("a loop needs a nonzero number of turns");
  const int turns = std::abs(windings);
  const double dir = windings > 0 ? 1.0 : -1.0;
  std::vector<Event4> v;
  v.reserve(static_cast<std::size_t>(turns * edges_per_turn + 1));
  for (int t = 0; t < turns; ++t)
    for (int k = 0; k < edges_per_turn; ++k) {
      const double phi = dir * kTwoPi * k / edges_per_turn;
      v.push_back(event(center1 + radius * std::cos(phi), center2 + radius * std::sin(phi), q3, q4));
    }
  v.push_back(v.front());
  return Path4::closed(std::move(v));
}

int winding_number(const Path4& loop) {
  if (!loop.is_closed()) throw DomainError("winding number needs a closed path");
  const auto& v = loop.vertices();
  double total = 0.0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (segment_axis_distance(v[i - 1], v[i]) == 0.0)
      throw DomainError("loop passes through the axis");
    const double cross = v[i - 1](1) * v[i](2) - v[i - 1](2) * v[i](1);
    const double dot = v[i - 1](1) * v[i](1) + v[i - 1](2) * v[i](2);
    total += std::atan2(cross, dot);
  }
  return static_cast<int>(std::lround(total / kTwoPi));
}

// ---------------------------------------------------------------------------
// Gauge fields

double ScalarGauge::value(const Event4& q) const {
  double lin = 0.0;
  double quad = 0.0;
  double kq = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    lin += linear[i] * q.c[i];
    kq += wavevector[i] * q.c[i];
    for (std::size_t j = 0; j < 4; ++j) quad += 0.5 * quadratic[i][j] * q.c[i] * q.c[j];
  }
  return lin + quad + amplitude * std::sin(kq);
}

FourArray<double> ScalarGauge::gradient(const Event4& q) const {
  double kq = 0.0;
  for (std::size_t i = 0; i < 4; ++i) kq += wavevector[i] * q.c[i];
  const double wave = amplitude * std::cos(kq);
  FourArray<double> g;
  for (std::size_t i = 0; i < 4; ++i) {
    double quad = 0.0;
    for (std::size_t j = 0; j < 4; ++j) quad += 0.5 * (quadratic[i][j] + quadratic[j][i]) * q.c[j];
    g.c[i] = linear[i] + quad + wave * wavevector[i];
  }
  return g;
}

GaugeField GaugeField::zero() { return GaugeField(Zero{}, 1.0); }

GaugeField GaugeField::constant(const FourArray<double>& a, double charge) {
  if (!finite(a) || !std::isfinite(charge)) throw DomainError("constant potential must be finite");
  return GaugeField(Constant{a}, charge);
}

GaugeField GaugeField::solenoid(double flux, double charge, double r_min) {
  if (!std::isfinite(flux) || !std::isfinite(charge)) throw DomainError("solenoid flux must be finite");
  if (!(r_min > 0.0)) throw DomainError("solenoid core radius must be positive");
  return GaugeField(Solenoid{flux, r_min}, charge);
}

GaugeField GaugeField::pure_gauge(ScalarGauge g, double charge) {
  return GaugeField(std::move(g), charge);
}

GaugeField GaugeField::raw_coupling(RawCoupling f) {
  if (!f) throw DomainError("raw coupling must be callable");
  return GaugeField(std::move(f), 1.0);
}

GaugeField::Kind GaugeField::kind() const { return static_cast<Kind>(v_.index()); }

double GaugeField::flux() const {
  const auto* s = std::get_if<Solenoid>(&v_);
  return s ? s->flux : 0.0;
}

double GaugeField::core_radius() const {
  const auto* s = std::get_if<Solenoid>(&v_);
  return s ? s->r_min : 0.0;
}

bool GaugeField::in_domain(const Event4& q) const {
  if (!finite(q)) return false;
  if (const auto* s = std::get_if<Solenoid>(&v_)) return std::hypot(q(1), q(2)) >= s->r_min;
  return true;
}

bool GaugeField::path_independent() const {
  return kind() == Kind::zero || kind() == Kind::constant || kind() == Kind::pure_gauge;
}

FourArray<double> GaugeField::potential(const Event4& q) const {
  if (!in_domain(q)) throw DomainError("event lies outside the gauge field domain");
  struct Visitor {
    const Event4& q;
    FourArray<double> operator()(const Zero&) const { return {}; }
    FourArray<double> operator()(const Constant& c) const { return c.a; }
    FourArray<double> operator()(const Solenoid& s) const {
      const double r2 = q(1) * q(1) + q(2) * q(2);
      const double k = s.flux / (kTwoPi * r2);
      return {{-k * q(2), k * q(1), 0.0, 0.0}};
    }
    FourArray<double> operator()(const ScalarGauge& g) const { return g.gradient(q); }
    FourArray<double> operator()(const RawCoupling&) const {
      throw DomainError("raw coupling has no gauge potential");
    }
  };
  return std::visit(Visitor{q}, v_);
}

Covector GaugeField::coupling(const Event4& q) const {
  if (const auto* raw = std::get_if<RawCoupling>(&v_)) {
    if (!finite(q)) throw DomainError("event is not finite");
    return (*raw)(q);
  }
  const FourArray<double> a = potential(q);
  Covector f;
  for (std::size_t i = 0; i < 4; ++i) f.c[i] = -kI * charge_ * a.c[i];
  return f;
}

// ---------------------------------------------------------------------------
// Phases

double phase_derivative_check(const EigenPair& pair, int theta_samples,
                              PhaseDerivativeOptions options) {
  if (theta_samples < 2) throw DomainError("phase derivative check needs at least two samples");
  if (options.mode == DerivativeMode::finite_difference && !(options.h > 0.0))
    throw DomainError("finite-difference step must be positive");
  const auto rotated = [](const TwoSpinor& v, double theta) {
    return std::polar(1.0, theta / 2.0) * v;
  };
  double worst = 0.0;
  for (int s = 0; s < theta_samples; ++s) {
    const double theta = kTwoPi * s / theta_samples;
    for (const TwoSpinor* v : {&pair.v1, &pair.v2}) {
      const TwoSpinor vp = rotated(*v, theta);
      TwoSpinor d;
      if (options.mode == DerivativeMode::analytic) {
        d = (0.5 * kI) * vp;
      } else {
        d = (1.0 / (2.0 * options.h)) *
            (rotated(*v, theta + options.h) - rotated(*v, theta - options.h));
      }
      worst = std::max(worst, norm((-2.0 * kI) * d - vp) / norm(vp));
    }
  }
  return worst;
}

double plane_wave_phase(const FourMomentum& p, const Event4& from, const Event4& to) {
  require_on_shell(p);
  double s = 0.0;
  for (int mu = 1; mu <= 4; ++mu) s += p.lower(mu) * (to(mu) - from(mu));
  return 2.0 * s;
}

Complex path_phase(const FourMomentum& p, const GaugeField& field, const Path4& path,
                   int segments_per_edge) {
  require_on_shell(p);
  if (segments_per_edge < 1) throw DomainError("line integral needs at least one segment per edge");
  const auto& v = path.vertices();
  if (field.kind() == GaugeField::Kind::solenoid) {
    for (std::size_t i = 1; i < v.size(); ++i)
      if (segment_axis_distance(v[i - 1], v[i]) < field.core_radius())
        throw DomainError("path passes within the solenoid core");
  }
  Complex theta{};
  for (std::size_t i = 1; i < v.size(); ++i) {
    const Event4& a = v[i - 1];
    const Event4& b = v[i];
    Event4 step;
    for (std::size_t k = 0; k < 4; ++k) step.c[k] = (b.c[k] - a.c[k]) / segments_per_edge;
    double momentum_part = 0.0;
    for (int mu = 1; mu <= 4; ++mu) momentum_part += p.lower(mu) * (b(mu) - a(mu));
    theta += 2.0 * momentum_part;
    for (int s = 0; s < segments_per_edge; ++s) {
      const Event4 mid = lerp(a, b, (s + 0.5) / segments_per_edge);
      const Covector f = field.coupling(mid);
      Complex dot{};
      for (std::size_t k = 0; k < 4; ++k) dot += f.c[k] * step.c[k];
      theta += 2.0 * kI * dot;
    }
  }
  return theta;
}

Covector gradient_theta(const FourMomentum& p, const GaugeField& field, const Event4& q) {
  require_on_shell(p);
  if (!field.in_domain(q)) throw DomainError("event lies outside the gauge field domain");
  const Covector f = field.coupling(q);
  Covector g;
  for (int mu = 1; mu <= 4; ++mu) g(mu) = 2.0 * p.lower(mu) + 2.0 * kI * f(mu);
  return g;
}

// ---------------------------------------------------------------------------
// Coordinate-space Dirac equation

namespace {

void require_single_valued(const GaugeField& field) {
  if (field.kind() != GaugeField::Kind::zero && field.kind() != GaugeField::Kind::constant)
    throw DomainError("coordinate Dirac residual needs a zero or constant field");
}

Complex theta_from(const FourMomentum& p, const GaugeField& field, const Event4& anchor,
                   const Event4& q) {
  if (q == anchor) return 0.0;
  // One midpoint is exact for constant integrands.
  return path_phase(p, field, straight_path(anchor, q), 1);
}

}  // namespace

Bispinor wave_function(const Bispinor& psi0, const FourMomentum& p, const GaugeField& field,
                       const Event4& q, const Event4& anchor) {
  require_single_valued(field);
  return std::exp(kI * theta_from(p, field, anchor, q) / 2.0) * psi0;
}

CoordinateResidual dirac_residual_coordinate(const Bispinor& psi0, const FourMomentum& p,
                                             const GaugeField& field, const Event4& q, double h,
                                             const Event4& anchor) {
  require_single_valued(field);
  require_on_shell(p);
  if (!(h > 0.0)) throw DomainError("finite-difference step must be positive");
  if (norm(psi0) == 0.0) throw DomainError("coordinate Dirac residual needs a nonzero bispinor");

  const FourSpinor psi = wave_function(psi0, p, field, q, anchor).column();
  const FourArray<double> a = field.potential(q);
  FourSpinor lhs;
  for (int mu = 1; mu <= 4; ++mu) {
    Event4 fwd = q;
    Event4 back = q;
    fwd(mu) += h;
    back(mu) -= h;
    const FourSpinor dpsi = (1.0 / (2.0 * h)) * (wave_function(psi0, p, field, fwd, anchor).column() -
                                                 wave_function(psi0, p, field, back, anchor).column());
    const FourSpinor covariant = dpsi - (kI * field.charge() * a(mu)) * psi;
    lhs += -kI * (gamma(mu) * covariant);
  }
  CoordinateResidual r;
  r.h = h;
  r.residual = norm(lhs - psi) / norm(psi);
  r.coefficient = r.residual / (h * h);
  return r;
}

CoordinateResidual dirac_residual_coordinate(const EigenPair& pair, const GaugeField& field,
                                             const Event4& q, double h) {
  return dirac_residual_coordinate(assemble_bispinor(pair),
                                   reduce_to_unit_momentum(pair.rapidity, pair.axis), field, q, h);
}

// ---------------------------------------------------------------------------
// Gradient-linear coupling

CoupledGradient gradient_with_linear_coupling(const FourMomentum& p, const GaugeField& field,
                                              const CouplingMatrix& M, const Event4& q) {
  Eigen::Matrix4d s = Eigen::Matrix4d::Identity();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const double m = M(i + 1, j + 1);
      if (!std::isfinite(m)) throw DomainError("coupling matrix must be finite");
      s(i, j) += m;
    }
  const Eigen::Vector4d sv = Eigen::JacobiSVD<Eigen::Matrix4d>(s).singularValues();
  const double condition = sv(3) > 0.0 ? sv(0) / sv(3) : std::numeric_limits<double>::infinity();
  if (!(condition <= kMaxCouplingCondition))
    throw DegenerateSystem("I + M is singular or ill-conditioned (condition " +
                           std::to_string(condition) + ")");

  const Covector rhs = gradient_theta(p, field, q);
  Eigen::Vector4cd b;
  for (int i = 0; i < 4; ++i) b(i) = rhs(i + 1);
  const Eigen::Matrix4cd sc = s.cast<Complex>();
  const Eigen::Vector4cd x = sc.partialPivLu().solve(b);

  CoupledGradient out;
  out.condition = condition;
  for (int i = 0; i < 4; ++i) out.gradient(i + 1) = x(i);
  const double scale = std::max(1.0, b.cwiseAbs().maxCoeff());
  out.residual = (sc * x - b).cwiseAbs().maxCoeff() / scale;
  return out;
}

Complex coupled_path_phase(const FourMomentum& p, const GaugeField& field, const CouplingMatrix& M,
                           const Path4& path, int segments_per_edge) {
  if (segments_per_edge < 1) throw DomainError("line integral needs at least one segment per edge");
  const auto& v = path.vertices();
  Complex theta{};
  for (std::size_t i = 1; i < v.size(); ++i) {
    for (int s = 0; s < segments_per_edge; ++s) {
      const Event4 lo = lerp(v[i - 1], v[i], static_cast<double>(s) / segments_per_edge);
      const Event4 hi = lerp(v[i - 1], v[i], static_cast<double>(s + 1) / segments_per_edge);
      const Event4 mid = lerp(lo, hi, 0.5);
      const Covector g = gradient_with_linear_coupling(p, field, M, mid).gradient;
      for (int mu = 1; mu <= 4; ++mu) theta += g(mu) * (hi(mu) - lo(mu));
    }
  }
  return theta;
}

}  // namespace spinpair
