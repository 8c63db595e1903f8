#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "entrolab/inequality.hpp"

namespace entrolab {

struct InstanceRecord {
  std::string family;
  std::string order;
  int n = 0;
  double t = 0.0;
  double g = 0.0;
  double entropy = 0.0;
  std::string label;
  std::string verdict;
  bool pass = false;
};

struct SampleRecord {
  std::string kind;  // "swap-test", "purity", "order0"
  long long shots = 0;
  std::uint64_t seed = 0;
  long long zeros = 0;
  long long ones = 0;
  double estimate = 0.0;
  double exact = 0.0;
  std::string decision;
};

struct QStarRecord {
  double x = 0.0;
  double q_star = 0.0;
  bool found = false;
};

struct Report {
  std::string tool;
  std::string version;
  std::string timestamp;
  std::vector<CheckResult> checks;
  std::vector<InstanceRecord> instances;
  std::vector<SampleRecord> samples;
  std::vector<QStarRecord> qstar;

  bool all_passed() const;
};

std::string current_timestamp_utc();

// Structured document (JSON, keys sorted); parse(emit(r)) re-emits the
// byte-identical text. Numbers carry full round-trip precision.
std::string emit_report(const Report& r);
Report parse_report(const std::string& text);

// Flat tabular export for plotting.
std::string report_to_csv(const Report& r);

}  // namespace entrolab
