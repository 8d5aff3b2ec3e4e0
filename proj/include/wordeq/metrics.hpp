#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace wordeq {

inline constexpr int kMetricsSchemaVersion = 1;

// h(x) = x log2(x + 1)
double h_of(double x);
// Rounds to the 6 decimals used by both export formats.
double round6(double x);

struct StepRecord {
  int phase = 0;
  std::size_t step = 0;  // index within the run
  std::string kind;      // step_kind_name(), or "start" for the phase-start snapshot
  std::size_t partition = 0;  // partitions applied so far in this phase
  std::size_t lhs_len = 0;
  std::size_t rhs_len = 0;
  std::size_t letter_bits = 0;
  std::size_t variable_bits = 0;
  std::size_t total_bits = 0;
  std::size_t padded_bits = 0;
  double h_d = 0;
  double h_n = 0;
  std::size_t depfactor_bits = 0;
  std::size_t s_a = 0;
  std::size_t s_b = 0;
  std::size_t s_c = 0;
  std::size_t s_d = 0;
  std::string target = "-";  // a, b, c, d, cover, or - outside pair steps
  std::size_t uncovered = 0;

  friend bool operator==(const StepRecord&, const StepRecord&) = default;
};

// Steps that hold popped blocks a^l as l explicit letters before block
// compression merges them; peaks and ratios skip them.
bool transient_step(const std::string& kind);

struct PhaseSummary {
  int phase = 0;
  std::size_t partitions = 0;
  double h_d_start = 0;
  double h_n_start = 0;
  double h_d_end = 0;
  double h_n_end = 0;
  double h_peak = 0;  // max of h_d + h_n over the phase's non-transient steps
  std::size_t sum_k = 0;
  std::size_t sum_p = 0;
  std::size_t sum_e = 0;
  std::size_t max_p = 0;
  std::size_t max_e = 0;
  double sum_h_p = 0;
  double sum_h_e = 0;

  friend bool operator==(const PhaseSummary&, const PhaseSummary&) = default;
};

struct RunMetrics {
  std::size_t input_abs = 0;  // Abs(U0, V0)
  std::size_t input_letter_bits = 0;
  std::vector<StepRecord> steps;
  std::vector<PhaseSummary> phases;

  // Largest (h_d + h_n) / input_abs over all non-transient steps.
  double max_ratio() const;

  friend bool operator==(const RunMetrics&, const RunMetrics&) = default;
};

// Fixed field order, floats with 6 decimals. CSV holds the step records
// behind a "# wordeq-metrics v1" line; JSON holds everything.
std::string export_csv(const RunMetrics& m);
std::string export_json(const RunMetrics& m);
// Throws ParseError on malformed input.
RunMetrics parse_csv(const std::string& text);
RunMetrics parse_json(const std::string& text);
// Throws IoError when the file cannot be written.
void write_file(const std::string& path, const std::string& content);

struct BoundCheck {
  std::string name;
  int phase = 0;
  double lhs = 0;
  double rhs = 0;
  bool ok() const { return lhs <= rhs + 1e-9; }
};

// Per-phase space recurrences measured against Abs(U0, V0):
//   h_d(end) <= 2/3 h_d(start) + 41 Abs, h_n(end) <= 5/6 h_n(start) + 15540 Abs,
//   peak h <= 8 h(start) + 2104 Abs, sum h(p), sum h(e) <= 129 Abs.
std::vector<BoundCheck> check_space_bounds(const RunMetrics& m);

}  // namespace wordeq
