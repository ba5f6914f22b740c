#pragma once

// Verification suites behind `witt verify`: each runs a battery of checks
// and returns a deterministic report. Discrepancies with published displays
// report as "flagged" (with both computed values), never as silent passes.

#include "witt/fields.hpp"

namespace witt {

struct CheckRecord {
  std::string id;
  std::string description;
  std::string status;  // "pass" | "fail" | "flagged"
  json witness;        // payload (values, counterexamples, notes)
  double ms = 0.0;     // wall time; excluded from canonical JSON
};

struct SuiteParams {
  std::optional<i64> p;
  std::optional<std::string> omega;  // expression, e.g. "2" or "theta"
  unsigned long long seed = 0;
};

struct SuiteReport {
  std::string suite;
  unsigned long long seed = 0;
  json params;
  std::vector<CheckRecord> checks;

  bool failed() const;
  int count(const std::string& status) const;
  // canonical serialization: deterministic given (suite, seed, params); the
  // volatile runtime field is kept out so identical runs are byte-identical
  json to_json() const;
  std::string text() const;
};

// suite names: axioms, witt, autgroup, jacobson, surfaces, classify, all
SuiteReport run_suite(const std::string& name, const SuiteParams& params);

// expression parser for scalars: integers, theta, a (extension generator),
// +, -, *, ^, parentheses
FElem parse_scalar(FieldRef field, const std::string& text);

}  // namespace witt
