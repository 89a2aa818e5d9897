#pragma once

// Seeded verification suite and its machine-readable reports.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace spinpair {

enum class OutputFormat { json, csv };

struct RunConfig {
  /// Overrides the built-in threshold of every residual check when set.
  std::optional<double> tolerance;
  std::uint64_t seed = 20240611;
  int trials = 1000;
  OutputFormat format = OutputFormat::json;
  /// Report destination; empty means no file is written.
  std::string output_path;
};

/// Throws DomainError on tolerance <= 0 or trials < 1.
void validate(const RunConfig& config);

struct CheckRecord {
  std::string name;
  std::string paper_anchor;
  int trials = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  /// Free-form finding, e.g. a sign that differs from the quoted result.
  std::string note;
};

struct VerificationReport {
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<CheckRecord> checks;  // sorted by name
  bool overall_pass() const;
};

/// Generator for one named check; independent of the order checks run in.
std::mt19937_64 check_rng(std::uint64_t seed, std::string_view check_name);

/// Runs every check with its own generator and returns records sorted by name.
VerificationReport run_verification(const RunConfig& config);

std::string to_json(const VerificationReport& report);
std::string to_csv(const VerificationReport& report);

/// Fixed-width human summary, one line per check.
std::string summary_table(const VerificationReport& report);

/// %.17g formatting used for every number written to CSV.
std::string format_number(double x);

}  // namespace spinpair
