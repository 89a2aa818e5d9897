#include <cmath>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "spinpair/errors.hpp"
#include "spinpair/phase_maps.hpp"
#include "spinpair/reports.hpp"
#include "test_support.hpp"

using namespace spinpair;

namespace {

// Least-squares plane through (qa, qb, theta) from the 3x3 normal equations
// solved by Cramer's rule.
std::array<double, 3> normal_equation_plane(const std::vector<PhaseMapRow>& rows) {
  double s[3][3] = {}, r[3] = {};
  for (const auto& row : rows) {
    if (row.flagged) continue;
    const double x[3] = {1.0, row.qa, row.qb};
    for (int i = 0; i < 3; ++i) {
      r[i] += x[i] * row.theta;
      for (int j = 0; j < 3; ++j) s[i][j] += x[i] * x[j];
    }
  }
  const auto det3 = [](const double m[3][3]) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  };
  const double d = det3(s);
  std::array<double, 3> out{};
  for (int c = 0; c < 3; ++c) {
    double m[3][3];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m[i][j] = j == c ? r[i] : s[i][j];
    out[c] = det3(m) / d;
  }
  return out;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("free-field phase map is a plane with slopes 2 p_a, 2 p_b") {
  auto g = testing::rng(50);
  for (int t = 0; t < 20; ++t) {
    const FourMomentum p =
        reduce_to_unit_momentum(testing::uniform(g, -2, 2), testing::random_axis(g));
    PlaneSlice slice;
    slice.axis_a = 1 + static_cast<int>(g() % 4);
    slice.axis_b = 1 + (slice.axis_a % 4);
    slice.base = event(0.3, -0.1, 0.7, 0.2);
    slice.range_a = {-1.0, 1.0, 11};
    slice.range_b = {-2.0, 0.5, 7};
    const Event4 anchor = event(0.1, 0.2, 0.3, 0.4);
    const auto rows = phase_map(p, GaugeField::zero(), slice, anchor);
    REQUIRE(rows.size() == 77);
    const PlaneFit fit = fit_plane(rows);
    CHECK(fit.points == 77);
    CHECK(fit.max_residual <= 1e-10);
    CHECK(fit.slope_a == doctest::Approx(2.0 * p.lower(slice.axis_a)).epsilon(1e-12));
    CHECK(fit.slope_b == doctest::Approx(2.0 * p.lower(slice.axis_b)).epsilon(1e-12));
    const auto oracle = normal_equation_plane(rows);
    CHECK(fit.offset == doctest::Approx(oracle[0]).epsilon(1e-9));
    CHECK(fit.slope_a == doctest::Approx(oracle[1]).epsilon(1e-9));
    CHECK(fit.slope_b == doctest::Approx(oracle[2]).epsilon(1e-9));
  }
}

TEST_CASE("phase map row order and anchor value") {
  PlaneSlice slice;
  slice.axis_a = 2;
  slice.axis_b = 4;
  slice.range_a = {0.0, 1.0, 2};
  slice.range_b = {0.0, 2.0, 3};
  const auto rows = phase_map(FourMomentum{}, GaugeField::zero(), slice);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0].qa == 0.0);
  CHECK(rows[0].qb == 0.0);
  CHECK(rows[0].theta == 0.0);
  CHECK(rows[1].qb == 1.0);
  CHECK(rows[3].qa == 1.0);
  CHECK(rows[5].theta == doctest::Approx(4.0));
  slice.range_a.count = 1;
  CHECK(phase_map(FourMomentum{}, GaugeField::zero(), slice).size() == 3);
}

TEST_CASE("phase map flags points whose path crosses the solenoid core") {
  PlaneSlice slice;
  slice.axis_a = 1;
  slice.axis_b = 2;
  slice.range_a = {-1.0, 1.0, 3};
  slice.range_b = {-1.0, 1.0, 3};
  const Event4 anchor = event(2.0, 0.0, 0.0, 0.0);
  const auto rows = phase_map(FourMomentum{}, GaugeField::solenoid(1.0), slice, anchor);
  int flagged = 0;
  for (const auto& r : rows) {
    if (r.flagged) {
      ++flagged;
      CHECK(std::isnan(r.theta));
    }
  }
  // The origin itself and (-1, 0), whose line from the anchor runs through the axis.
  CHECK(flagged == 2);
  const auto csv = lines(phase_map_csv(rows));
  CHECK(csv.front() == "qa,qb,theta");
  CHECK(csv.size() == rows.size() + 1);
  int nan_lines = 0;
  for (const auto& l : csv) nan_lines += l.ends_with(",nan") ? 1 : 0;
  CHECK(nan_lines == 2);
  CHECK_THROWS_AS(phase_map(FourMomentum{}, GaugeField::solenoid(1.0), slice, event(0, 0, 0, 0)),
                  DomainError);
}

TEST_CASE("phase map argument checks") {
  PlaneSlice slice;
  slice.axis_a = 3;
  slice.axis_b = 3;
  CHECK_THROWS_AS(phase_map(FourMomentum{}, GaugeField::zero(), slice), DomainError);
  slice.axis_b = 5;
  CHECK_THROWS_AS(phase_map(FourMomentum{}, GaugeField::zero(), slice), DomainError);
  slice.axis_b = 4;
  slice.range_a.count = 0;
  CHECK_THROWS_AS(phase_map(FourMomentum{}, GaugeField::zero(), slice), DomainError);
  CHECK_THROWS_AS(fit_plane({}), DomainError);
}

TEST_CASE("loop phase report") {
  const GaugeField field = GaugeField::solenoid(0.5, 2.0);
  for (int w : {-2, -1, 1, 2}) {
    const LoopPhaseReport r = loop_phase(field, circle_loop(0, 0, 1.0, 100, w), 100);
    CHECK(r.winding == w);
    CHECK(r.expected == doctest::Approx(2.0 * w));
    CHECK(r.abs_error <= 1e-5);
    CHECK(r.flux == 0.5);
    CHECK(r.charge == 2.0);
  }
  const LoopPhaseReport outside = loop_phase(field, circle_loop(3, 0, 1.0, 100, 1), 100);
  CHECK(outside.winding == 0);
  CHECK(outside.abs_error <= 1e-12);
  const LoopPhaseReport flat = loop_phase(GaugeField::constant({{1, 2, 3, 4}}), circle_loop(0, 0, 1, 8, 1), 4);
  CHECK(flat.expected == 0.0);
  CHECK(flat.abs_error <= 1e-13);
  CHECK_THROWS_AS(loop_phase(field, straight_path(event(1, 0, 0, 0), event(0, 1, 0, 0)), 4),
                  DomainError);
}

TEST_CASE("quadrature error falls by four under mesh halving") {
  const GaugeField field = GaugeField::solenoid(1.0, 1.0);
  const Path4 loop = circle_loop(0, 0, 1.0, 7, 1);
  const double exact = 2.0;
  const double e1 = std::abs(path_phase(FourMomentum{}, field, loop, 8).real() - exact);
  const double e2 = std::abs(path_phase(FourMomentum{}, field, loop, 16).real() - exact);
  CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.125));
}

TEST_CASE("verification suite") {
  RunConfig config;
  config.trials = 50;
  const VerificationReport a = run_verification(config);
  const VerificationReport b = run_verification(config);

  SUBCASE("passes by default and is sorted by name") {
    CHECK(a.overall_pass());
    CHECK(a.checks.size() >= 13);
    for (std::size_t i = 1; i < a.checks.size(); ++i) CHECK(a.checks[i - 1].name < a.checks[i].name);
    for (const auto& c : a.checks) {
      INFO(c.name);
      CHECK(c.pass);
      CHECK_FALSE(c.paper_anchor.empty());
      CHECK(c.trials >= 1);
    }
  }
  SUBCASE("same seed, same report") {
    CHECK(to_json(a) == to_json(b));
    CHECK(to_csv(a) == to_csv(b));
  }
  SUBCASE("a different seed changes the residuals") {
    RunConfig other = config;
    other.seed = config.seed + 1;
    CHECK(to_json(run_verification(other)) != to_json(a));
  }
  SUBCASE("a tiny tolerance fails residual checks only") {
    RunConfig strict = config;
    strict.tolerance = 1e-30;
    const VerificationReport r = run_verification(strict);
    CHECK_FALSE(r.overall_pass());
    for (const auto& c : r.checks)
      if (c.name == "dirac_solution_rank") CHECK(c.pass);
  }
  SUBCASE("the sign discrepancy is surfaced") {
    bool found = false;
    for (const auto& c : a.checks)
      if (c.name == "current_spin_constraints") {
        found = true;
        CHECK(c.note.find("SIGN DISCREPANCY") != std::string::npos);
        CHECK(c.note.find("j4 = -1*a") != std::string::npos);
      }
    CHECK(found);
  }
  SUBCASE("JSON and CSV carry the same numbers") {
    const auto j = nlohmann::json::parse(to_json(a));
    CHECK(j["seed"] == config.seed);
    CHECK(j["overall_pass"] == true);
    const auto rows = lines(to_csv(a));
    CHECK(rows.front() == "name,paper_anchor,trials,max_residual,tolerance,pass,note");
    REQUIRE(rows.size() == a.checks.size() + 1);
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
      const auto& jc = j["checks"][i];
      CHECK(jc["name"] == a.checks[i].name);
      CHECK(jc["max_residual"].get<double>() == a.checks[i].max_residual);
      CHECK(rows[i + 1].starts_with(a.checks[i].name + "," + a.checks[i].paper_anchor + ","));
      CHECK(rows[i + 1].find(format_number(a.checks[i].max_residual)) != std::string::npos);
    }
  }
}

TEST_CASE("check streams are independent of each other") {
  auto x = check_rng(7, "alpha");
  auto y = check_rng(7, "alpha");
  auto z = check_rng(7, "beta");
  auto w = check_rng(8, "alpha");
  const auto vx = x();
  CHECK(vx == y());
  CHECK(vx != z());
  CHECK(vx != w());
}

TEST_CASE("config validation and number formatting") {
  RunConfig c;
  c.trials = 0;
  CHECK_THROWS_AS(validate(c), DomainError);
  c.trials = 1;
  c.tolerance = 0.0;
  CHECK_THROWS_AS(validate(c), DomainError);
  c.tolerance = -1.0;
  CHECK_THROWS_AS(run_verification(c), DomainError);
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(std::stod(format_number(1.0 / 3.0)) == 1.0 / 3.0);
}
