#ifndef PROLAB_REPORT_HPP
#define PROLAB_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "prolab/prolongation.hpp"
#include "prolab/variety.hpp"

namespace prolab {

inline constexpr const char* kReportSchema = "prolab-report/1";
inline constexpr const char* kVarietySchema = "prolab-variety/1";

struct CaseResult {
  std::string id;        // group/name
  std::string citation;  // the claim the case reproduces
  long computed = 0;
  std::optional<long> expected;
  bool pass = false;
  double wall_ms = 0.0;
  Index constraint_rows = 0;
  Index constraint_cols = 0;
  std::string note;
};

struct BatteryReport {
  std::string schema = kReportSchema;
  std::string command;
  std::uint64_t seed = 0;
  std::string field;  // "exact" or "modp(<prime>)"
  std::vector<CaseResult> cases;  // sorted by id
  int passed = 0;
  int failed = 0;
  bool all_pass() const { return failed == 0; }
};

/// Groups: ihss-prolong, k2-vanishing, z-family, hyperplane-sections,
/// secant-table, projection-formulas, mainprolong-general, extended-prolong,
/// property-suite, stretch-op2. A selection entry may be a group or a full
/// case id; the empty selection means every group except stretch-op2.
/// Throws std::invalid_argument on unknown selections.
BatteryReport run_battery(const std::vector<std::string>& selection, Field field,
                          std::uint64_t seed);

std::vector<std::string> battery_groups();
std::vector<std::string> battery_case_ids();

std::string emit_report_json(const BatteryReport& report, bool include_timings = true);
std::string emit_report_csv(const BatteryReport& report, bool include_timings = true);
std::string emit_report_text(const BatteryReport& report);
BatteryReport parse_report_json(const std::string& bytes);

/// Variety exchange: schema prolab-variety/1, exact fractions only.
/// {"schema": ..., "ambient_dim": n, "quadrics": [[[i, j, num, den], ...]],
///  "base_point": [...], "samples": [[...], ...]}. Numeric entries may be
/// integers, [num, den] handled inside quadric triples, or "num/den" strings.
VarietyPresentation parse_variety_file(const std::string& bytes);
std::string emit_variety_json(const VarietyPresentation& v, Index sample_count = 0,
                              std::uint64_t seed = 0);

}  // namespace prolab

#endif  // PROLAB_REPORT_HPP
