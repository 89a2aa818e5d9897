#include "spinpair/phase_maps.hpp"

#include <Eigen/Dense>
#include <limits>

#include "spinpair/errors.hpp"
#include "spinpair/reports.hpp"

namespace spinpair {

namespace {

double grid_value(const GridRange& r, int i) {
  if (r.count == 1) return r.lo;
  return r.lo + (r.hi - r.lo) * static_cast<double>(i) / (r.count - 1);
}

void validate(const PlaneSlice& s) {
  if (s.axis_a < 1 || s.axis_a > 4 || s.axis_b < 1 || s.axis_b > 4 || s.axis_a == s.axis_b)
    throw DomainError("slice needs two distinct coordinate indices in 1..4");
  for (const GridRange* r : {&s.range_a, &s.range_b}) {
    if (r->count < 1) throw DomainError("grid range needs at least one point");
    if (!std::isfinite(r->lo) || !std::isfinite(r->hi)) throw DomainError("grid bounds must be finite");
  }
}

}  // namespace

std::vector<PhaseMapRow> phase_map(const FourMomentum& p, const GaugeField& field,
                                   const PlaneSlice& slice, const Event4& anchor,
                                   int segments_per_edge) {
  validate(slice);
  require_on_shell(p);
  if (!field.in_domain(anchor)) throw DomainError("phase map anchor lies outside the field domain");

  std::vector<PhaseMapRow> rows;
  rows.reserve(static_cast<std::size_t>(slice.range_a.count) *
               static_cast<std::size_t>(slice.range_b.count));
  for (int i = 0; i < slice.range_a.count; ++i)
    for (int j = 0; j < slice.range_b.count; ++j) {
      PhaseMapRow row;
      row.qa = grid_value(slice.range_a, i);
      row.qb = grid_value(slice.range_b, j);
      Event4 q = slice.base;
      q(slice.axis_a) = row.qa;
      q(slice.axis_b) = row.qb;
      if (q == anchor) {
        rows.push_back(row);
        continue;
      }
      try {
        row.theta = path_phase(p, field, straight_path(anchor, q), segments_per_edge).real();
      } catch (const DomainError&) {
        row.theta = std::numeric_limits<double>::quiet_NaN();
        row.flagged = true;
      }
      rows.push_back(row);
    }
  return rows;
}

std::string phase_map_csv(const std::vector<PhaseMapRow>& rows) {
  std::string out = "qa,qb,theta\n";
  for (const auto& r : rows) {
    out += format_number(r.qa);
    out += ',';
    out += format_number(r.qb);
    out += ',';
    out += r.flagged ? std::string("nan") : format_number(r.theta);
    out += '\n';
  }
  return out;
}

PlaneFit fit_plane(const std::vector<PhaseMapRow>& rows) {
  std::vector<const PhaseMapRow*> used;
  for (const auto& r : rows)
    if (!r.flagged) used.push_back(&r);
  if (used.size() < 3) throw DomainError("plane fit needs at least three unflagged points");

  const auto n = static_cast<Eigen::Index>(used.size());
  Eigen::MatrixXd design(n, 3);
  Eigen::VectorXd theta(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& r = *used[static_cast<std::size_t>(i)];
    design(i, 0) = 1.0;
    design(i, 1) = r.qa;
    design(i, 2) = r.qb;
    theta(i) = r.theta;
  }
  const Eigen::Vector3d c = design.colPivHouseholderQr().solve(theta);
  PlaneFit fit;
  fit.offset = c(0);
  fit.slope_a = c(1);
  fit.slope_b = c(2);
  fit.points = static_cast<int>(n);
  fit.max_residual = (design * c - theta).cwiseAbs().maxCoeff();
  return fit;
}

LoopPhaseReport loop_phase(const GaugeField& field, const Path4& loop, int segments_per_edge) {
  if (!loop.is_closed()) throw DomainError("loop phase needs a closed path");
  const FourMomentum rest{};
  LoopPhaseReport r;
  r.charge = field.charge();
  r.flux = field.flux();
  r.phase = path_phase(rest, field, loop, segments_per_edge).real();
  if (field.kind() == GaugeField::Kind::solenoid) {
    r.winding = winding_number(loop);
    r.expected = 2.0 * r.charge * r.flux * r.winding;
  }
  r.abs_error = std::abs(r.phase - r.expected);
  return r;
}

}  // namespace spinpair
