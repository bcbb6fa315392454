#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace gasket {

// Sample sizes, seeds and thresholds of the acceptance checks.
struct ValidationConfig {
  std::uint64_t seed = 0;
  bool strict = false;
  std::vector<int> only;  // criterion numbers; empty runs all

  int count_max_level = 12;
  double count_seconds = 1;
  double census_seconds = 1;
  double tables_seconds = 5;
  int degree_max_level = 20;
  double degree_seconds = 5;
  int length_pgf_max_level = 8;  // coefficient lists; jets above
  int length_max_level = 10;
  double length_seconds = 10;

  int wilson_tree_samples = 54000;
  double chi_square_p = 0.01;
  int lerw_level = 3;
  int lerw_samples = 100000;
  double lerw_tv = 0.02;
  int path_samples = 100000;
  double path_tv = 0.03;
  double sampler_seconds = 120;

  int trace_samples = 20000;
  double trace_tv = 0.03;

  int count_level = 10;
  int count_seeds = 2000;
  double se_multiple = 3;
  int component_level = 8;
  int component_seeds = 2000;
  int interface_level = 20;
  double interface_tolerance = 0.01;

  int significant_digits = 6;

  int theta_level = 7;
  double theta_mean_tolerance = 0.02;
  double tail_tolerance = 0.35;

  int cauchy_m0 = 4;
  int cauchy_m1 = 10;
  int cauchy_seeds = 200;

  std::string koch_cell = "koch";
  std::string two_subdivision_cell = "sg_two_subdivisions";
  int variant_level = 3;
  int variant_samples = 20000;
  double variant_ratio_tolerance = 0.05;
  double dimension_tolerance = 1e-8;
};

struct ValidationReport {
  int criterion = 0;
  std::string name;
  bool hard = true;
  bool pass = false;
  double statistic = 0;
  double threshold = 0;
  std::string detail;
  std::uint64_t samples = 0;
  double seconds = 0;

  // Soft checks gate only in strict mode.
  bool gating(bool strict) const { return hard || strict; }
};

inline constexpr int kCriteria = 12;

ValidationReport run_criterion(int criterion, const ValidationConfig& config);
// Runs the selected criteria in order; the callback sees each report as it
// completes.
std::vector<ValidationReport> run_validation_suite(
    const ValidationConfig& config, const std::function<void(const ValidationReport&)>& on_report = {});
bool suite_passed(const std::vector<ValidationReport>& reports, bool strict);

std::string reports_to_json(const std::vector<ValidationReport>& reports, const ValidationConfig& config);
// One line: PASS|FAIL|SOFT-FAIL, criterion number and name, statistic vs threshold.
std::string format_report_line(const ValidationReport& r, bool strict);

}  // namespace gasket
