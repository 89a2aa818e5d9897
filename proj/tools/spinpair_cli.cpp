// spinpair: command-line front end for the verification suite and the
// phase-map / loop-phase / coordinate-residual generators.
//
// Exit codes: 0 pass, 1 verification failure, 2 usage or config error,
// 3 I/O error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "spinpair/cli_parse.hpp"
#include "spinpair/errors.hpp"
#include "spinpair/reports.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

struct VerifyArgs {
  double tol = 0.0;
  std::uint64_t seed = spinpair::RunConfig{}.seed;
  int trials = spinpair::RunConfig{}.trials;
  std::string out;
  std::string format = "json";
};

int run_verify(const VerifyArgs& a, bool tol_given) {
  spinpair::RunConfig config;
  if (tol_given) config.tolerance = a.tol;
  config.seed = a.seed;
  config.trials = a.trials;
  config.format = a.format == "csv" ? spinpair::OutputFormat::csv : spinpair::OutputFormat::json;
  config.output_path = a.out;
  spinpair::validate(config);

  const auto report = spinpair::run_verification(config);
  std::cout << spinpair::summary_table(report);
  if (!config.output_path.empty()) {
    write_file(config.output_path, config.format == spinpair::OutputFormat::csv
                                       ? spinpair::to_csv(report)
                                       : spinpair::to_json(report));
  }
  return report.overall_pass() ? kExitPass : kExitFail;
}

struct PhaseMapArgs {
  double u = 0.0;
  std::string axis = "0,0,1";
  std::string field = "zero";
  double charge = 1.0;
  std::string plane = "q1,q4";
  std::string fix;
  std::string range = "-1:1:21";
  std::string range_b;
  std::string anchor = "0,0,0,0";
  int segments = 256;
  std::string out;
};

int run_phase_map(const PhaseMapArgs& a) {
  using namespace spinpair;
  const FourMomentum p = reduce_to_unit_momentum(a.u, cli::parse_axis(a.axis));
  const GaugeField field = cli::parse_field(a.field, a.charge);
  PlaneSlice slice;
  std::tie(slice.axis_a, slice.axis_b) = cli::parse_plane(a.plane);
  slice.base = cli::parse_fixed(a.fix);
  slice.range_a = cli::parse_range(a.range);
  slice.range_b = a.range_b.empty() ? slice.range_a : cli::parse_range(a.range_b);

  const auto rows = phase_map(p, field, slice, cli::parse_event(a.anchor), a.segments);
  const std::string csv = phase_map_csv(rows);
  if (a.out.empty()) {
    std::cout << csv;
  } else {
    write_file(a.out, csv);
  }

  std::size_t flagged = 0;
  for (const auto& r : rows) flagged += r.flagged ? 1 : 0;
  std::cerr << "rows: " << rows.size() << ", flagged: " << flagged << "\n";
  if (field.path_independent() && rows.size() - flagged >= 3) {
    const PlaneFit fit = fit_plane(rows);
    std::cerr << "plane fit: theta = " << format_number(fit.offset) << " + "
              << format_number(fit.slope_a) << " qa + " << format_number(fit.slope_b)
              << " qb, max residual " << format_number(fit.max_residual) << "\n";
  }
  return kExitPass;
}

struct LoopArgs {
  std::string field = "solenoid:3.141592653589793";
  double charge = 1.0;
  double radius = 1.0;
  std::string center = "0,0";
  int windings = 1;
  int segments = 10000;
  int edges = 100;
  double tol = 1e-5;
  std::string out;
};

int run_loop_phase(const LoopArgs& a) {
  using namespace spinpair;
  const GaugeField field = cli::parse_field(a.field, a.charge);
  const auto c = cli::parse_list(a.center);
  if (c.size() != 2) throw DomainError("center needs two values");
  if (a.edges < 3) throw DomainError("edges must be at least 3");
  if (a.segments < a.edges) throw DomainError("segments must be at least the edge count");
  const Path4 loop = circle_loop(c[0], c[1], a.radius, a.edges, a.windings);
  const LoopPhaseReport r = loop_phase(field, loop, a.segments / a.edges);

  nlohmann::ordered_json j;
  j["phase"] = r.phase;
  j["expected"] = r.expected;
  j["abs_error"] = r.abs_error;
  j["winding"] = r.winding;
  j["flux"] = r.flux;
  j["charge"] = r.charge;
  j["tolerance"] = a.tol;
  j["pass"] = r.abs_error <= a.tol;
  std::printf("loop phase %s, expected %s (2 e Phi w, w = %d), error %.3e\n",
              format_number(r.phase).c_str(), format_number(r.expected).c_str(), r.winding,
              r.abs_error);
  if (!a.out.empty()) write_file(a.out, j.dump(2) + "\n");
  return r.abs_error <= a.tol ? kExitPass : kExitFail;
}

struct DiracArgs {
  double u = 0.5;
  std::string axis = "0,0,1";
  std::string field = "zero";
  double charge = 1.0;
  double h = spinpair::kDefaultFiniteDifferenceStep;
  double theta = 0.0;
  std::string q = "0.3,-0.2,0.1,0.4";
  double tol = 1e-7;
  std::string out;
};

int run_dirac_residual(const DiracArgs& a) {
  using namespace spinpair;
  const EigenPair pair = make_pair(cli::parse_axis(a.axis), a.theta, a.u, 1.0);
  const GaugeField field = cli::parse_field(a.field, a.charge);
  const Event4 q = cli::parse_event(a.q);
  const FourMomentum p = reduce_to_unit_momentum(pair.rapidity, pair.axis);
  const CoordinateResidual up = dirac_residual_coordinate(pair, field, q, a.h);
  const CoordinateResidual down = dirac_residual_coordinate(spin_down_partner(pair), p, field, q, a.h);

  nlohmann::ordered_json j;
  j["h"] = a.h;
  j["residual_spin_up"] = up.residual;
  j["residual_spin_down"] = down.residual;
  j["coefficient_spin_up"] = up.coefficient;
  j["coefficient_spin_down"] = down.coefficient;
  j["tolerance"] = a.tol;
  const bool pass = up.residual <= a.tol && down.residual <= a.tol;
  j["pass"] = pass;
  std::printf("h = %.3e  spin-up residual %.3e (C = %.3g)  spin-down residual %.3e (C = %.3g)\n",
              a.h, up.residual, up.coefficient, down.residual, down.coefficient);
  if (!a.out.empty()) write_file(a.out, j.dump(2) + "\n");
  return pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rotation eigenvector pairs, Dirac bispinors and path-dependent phases"};
  app.require_subcommand(1);

  VerifyArgs verify;
  auto* cmd_verify = app.add_subcommand("verify", "Run the seeded verification suite");
  auto* tol_opt = cmd_verify->add_option("--tol", verify.tol, "Override residual tolerance");
  cmd_verify->add_option("--seed", verify.seed, "Random seed");
  cmd_verify->add_option("--trials", verify.trials, "Trials per randomized check");
  cmd_verify->add_option("--out", verify.out, "Report file");
  cmd_verify->add_option("--format", verify.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}));

  PhaseMapArgs pm;
  auto* cmd_map = app.add_subcommand("phase-map", "Tabulate theta over a 2D slice");
  cmd_map->add_option("--u", pm.u, "Rapidity");
  cmd_map->add_option("--axis", pm.axis, "Axis x,y,z");
  cmd_map->add_option("--field", pm.field, "zero|constant:A1,A2,A3,A4|solenoid:FLUX|pure-gauge:AMP,K1..K4");
  cmd_map->add_option("--charge", pm.charge, "Charge e");
  cmd_map->add_option("--plane", pm.plane, "Varying coordinates qi,qj");
  cmd_map->add_option("--fix", pm.fix, "Fixed coordinates qk=V,ql=W");
  cmd_map->add_option("--range", pm.range, "Grid a:b:n");
  cmd_map->add_option("--range-b", pm.range_b, "Grid for the second coordinate (default: --range)");
  cmd_map->add_option("--anchor", pm.anchor, "Event where theta = 0");
  cmd_map->add_option("--segments", pm.segments, "Quadrature segments per line");
  cmd_map->add_option("--out", pm.out, "CSV file (default stdout)");

  LoopArgs loop;
  auto* cmd_loop = app.add_subcommand("loop-phase", "Phase around a closed circular loop");
  cmd_loop->add_option("--field", loop.field, "Gauge field spec");
  cmd_loop->add_option("--charge", loop.charge, "Charge e");
  cmd_loop->add_option("--radius", loop.radius, "Loop radius");
  cmd_loop->add_option("--center", loop.center, "Loop center q1,q2");
  cmd_loop->add_option("--windings", loop.windings, "Signed number of turns (nonzero)");
  cmd_loop->add_option("--segments", loop.segments, "Quadrature segments per turn");
  cmd_loop->add_option("--edges", loop.edges, "Polygon edges per turn");
  cmd_loop->add_option("--tol", loop.tol, "Allowed |phase - expected|");
  cmd_loop->add_option("--out", loop.out, "JSON file");

  DiracArgs dirac;
  auto* cmd_dirac = app.add_subcommand("dirac-residual", "Coordinate-space Dirac residual");
  cmd_dirac->set_help_flag("--help", "Print this help message and exit");
  cmd_dirac->add_option("--u", dirac.u, "Rapidity");
  cmd_dirac->add_option("--axis", dirac.axis, "Axis x,y,z");
  cmd_dirac->add_option("--field", dirac.field, "zero|constant:A1,A2,A3,A4");
  cmd_dirac->add_option("--charge", dirac.charge, "Charge e");
  cmd_dirac->add_option("--h", dirac.h, "Finite-difference step");
  cmd_dirac->add_option("--theta", dirac.theta, "Rotation angle of the pair");
  cmd_dirac->add_option("--q", dirac.q, "Evaluation event q1,q2,q3,q4");
  cmd_dirac->add_option("--tol", dirac.tol, "Allowed residual");
  cmd_dirac->add_option("--out", dirac.out, "JSON file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*cmd_verify) return run_verify(verify, tol_opt->count() > 0);
    if (*cmd_map) return run_phase_map(pm);
    if (*cmd_loop) return run_loop_phase(loop);
    if (*cmd_dirac) return run_dirac_residual(dirac);
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const spinpair::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const spinpair::DegenerateSystem& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
