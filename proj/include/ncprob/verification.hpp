#pragma once

// Common result record for every verifier: an inequality lhs <= rhs with its
// slack, a pass flag, echoed parameters, and witness metadata. The invariant
// pass == (slack >= -slack_tol) holds for every record; the slack_tol that was
// applied is echoed under params["slack_tol"].

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ncprob {

struct VerificationReport {
  std::string suite;
  std::map<std::string, double> params;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool pass = false;
  std::map<std::string, double> witness;

  static VerificationReport make(std::string suite, double lhs, double rhs, double slack_tol,
                                 std::map<std::string, double> params = {},
                                 std::map<std::string, double> witness = {}) {
    VerificationReport r;
    r.suite = std::move(suite);
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = rhs - lhs;
    r.params = std::move(params);
    r.witness = std::move(witness);
    r.params["slack_tol"] = slack_tol;
    r.pass = r.slack >= -slack_tol;
    return r;
  }
};

// Folds records into the one with the smallest slack; pass only if all passed.
inline VerificationReport worst_of(const std::string& suite,
                                   const std::vector<VerificationReport>& reports) {
  VerificationReport out;
  out.suite = suite;
  if (reports.empty()) {
    out.pass = false;
    return out;
  }
  size_t worst = 0;
  bool all_pass = true;
  for (size_t i = 0; i < reports.size(); ++i) {
    all_pass = all_pass && reports[i].pass;
    if (reports[i].slack < reports[worst].slack) worst = i;
  }
  out = reports[worst];
  out.suite = suite;
  out.pass = all_pass && out.pass;
  return out;
}

}  // namespace ncprob
