#pragma once

// Gridded theta maps over a 2D slice of space-time and closed-loop phases.

#include <string>
#include <vector>

#include "spinpair/phase_geometry.hpp"

namespace spinpair {

struct GridRange {
  double lo = 0.0;
  double hi = 1.0;
  int count = 2;  // points, both ends included
};

/// Two varying coordinates (1-based, distinct) with the remaining two held at
/// the values in `base`.
struct PlaneSlice {
  int axis_a = 1;
  int axis_b = 4;
  Event4 base;
  GridRange range_a;
  GridRange range_b;
};

struct PhaseMapRow {
  double qa = 0.0;
  double qb = 0.0;
  double theta = 0.0;  // NaN when flagged
  bool flagged = false;
};

/// theta at each grid point, integrated along the straight line from `anchor`.
/// Points whose line passes within the solenoid core are flagged, not dropped.
std::vector<PhaseMapRow> phase_map(const FourMomentum& p, const GaugeField& field,
                                   const PlaneSlice& slice, const Event4& anchor = {},
                                   int segments_per_edge = 256);

/// CSV with header `qa,qb,theta`; flagged rows carry `nan`.
std::string phase_map_csv(const std::vector<PhaseMapRow>& rows);

struct PlaneFit {
  double offset = 0.0;
  double slope_a = 0.0;
  double slope_b = 0.0;
  double max_residual = 0.0;
  int points = 0;
};

/// Least-squares theta ~ offset + slope_a qa + slope_b qb over unflagged rows.
PlaneFit fit_plane(const std::vector<PhaseMapRow>& rows);

struct LoopPhaseReport {
  double phase = 0.0;
  double expected = 0.0;
  double abs_error = 0.0;
  int winding = 0;
  double flux = 0.0;
  double charge = 0.0;
};

/// Closed-loop phase for a particle at rest, compared with 2 e Phi w
/// (0 for path-independent fields). Throws DomainError for open paths.
LoopPhaseReport loop_phase(const GaugeField& field, const Path4& loop, int segments_per_edge);

}  // namespace spinpair
