#pragma once

// Named verification suites behind the CLI: seeded trial fan-out (optionally
// across threads, with results reduced in trial order so output is identical
// for any job count), plus JSON-lines and CSV report writers.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ncprob/linalg.hpp"
#include "ncprob/verification.hpp"

namespace ncprob {

struct TGridSpec {
  double min = 0.5;
  double max = 4.0;
  int points = 8;
  bool log_scale = false;

  std::vector<double> make() const;
  // "min:max:points" or "min:max:points:log|linear"
  static TGridSpec parse(const std::string& text);
  void validate() const;
};

struct SuiteConfig {
  std::string suite;
  uint64_t seed = 1;
  int trials = 20;
  std::vector<int> factor_dims = {1, 2, 2, 2};
  double r = 2.0;
  double p = 2.0;
  std::optional<double> gamma;
  double m_bound = 1.0;
  TGridSpec t_grid;
  int jobs = 1;
  std::string format = "json";  // json | csv
  std::string out;              // empty writes to stdout
  ToleranceConfig tolerances;

  void validate() const;
};

// Suite names accepted by run_suite.
const std::vector<std::string>& suite_names();
// Sweep axes accepted by run_sweep.
const std::vector<std::string>& sweep_axes();

struct RunSummary {
  int pass_count = 0;
  int total = 0;
  double worst_slack = 0.0;
  double wall_seconds = 0.0;
  bool pass() const { return total > 0 && pass_count == total; }
};

struct SuiteResult {
  SuiteConfig config;
  std::vector<VerificationReport> records;
  RunSummary summary;
};

SuiteResult run_suite(const SuiteConfig& config);

// One record per axis point; axis in {"t", "n", "gamma", "r"}. Sweeps are
// scalar-bound comparisons (no operator instances), so they are cheap.
SuiteResult run_sweep(const std::string& axis, const SuiteConfig& config);

// Records serialized in order, without header or summary; the byte-level
// determinism contract is on this string.
std::string serialize_records(const std::vector<VerificationReport>& records,
                              const std::string& format);

void write_report(const SuiteResult& result, std::ostream& os);

// 0 if every record passed, 1 otherwise.
int exit_code(const SuiteResult& result);

}  // namespace ncprob
